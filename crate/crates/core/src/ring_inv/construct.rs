//! Constructors for the standard examples of rings with anti-involution.
//!
//! Every constructor produces a ring that passes
//! [`RingWithInvolution::validate`]; the commutativity flag is always
//! computed from the finished multiplication table rather than assumed.

use super::RingWithInvolution;
use crate::abgroup::IntMatrix;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Involution choice for [`finite_field`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldInvolution {
    Identity,
    /// `a -> a^(p^(k/2))`, the unique order-2 field automorphism; requires
    /// even extension degree.
    FrobeniusHalf,
}

/// `Z/n` with the identity involution; `n = 0` gives the integers `Z`.
pub fn cyclic_ring(n: u64) -> RingWithInvolution {
    let name = if n == 0 {
        "Z".to_string()
    } else {
        format!("Z/{}", n)
    };
    RingWithInvolution::from_parts(
        name,
        vec![BigInt::from(n)],
        vec![vec![vec![BigInt::one()]]],
        vec![BigInt::one()],
        IntMatrix::identity(1),
        true,
        vec!["1".to_string()],
    )
    .expect("cyclic ring data is well formed")
}

/// The field with `p^k` elements, as `F_p[x]` modulo the lexicographically
/// first irreducible monic polynomial of degree `k` (coefficient tuples
/// ordered as base-`p` numerals, constant term least significant).  The
/// chosen polynomial is recorded in the ring's name.
pub fn finite_field(p: u64, k: u32, involution: FieldInvolution) -> Result<RingWithInvolution> {
    if !is_prime(p) {
        return Err(Error::Input(format!("{} is not prime", p)));
    }
    if k == 0 {
        return Err(Error::Input("extension degree must be >= 1".into()));
    }
    if involution == FieldInvolution::FrobeniusHalf && !k.is_multiple_of(2) {
        return Err(Error::Input(
            "the half-power Frobenius involution needs an even extension degree".into(),
        ));
    }
    let k = k as usize;
    let f = first_irreducible(p, k);
    let n = k;

    // structure constants: x^i * x^j = x^(i+j) mod f
    let mut mul = vec![vec![vec![BigInt::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut a = vec![0u64; n];
            a[i] = 1;
            let mut b = vec![0u64; n];
            b[j] = 1;
            let prod = poly_mul_mod(&a, &b, &f, p);
            mul[i][j] = prod.iter().map(|&c| BigInt::from(c)).collect();
        }
    }

    let inv_matrix = match involution {
        FieldInvolution::Identity => IntMatrix::identity(n),
        FieldInvolution::FrobeniusHalf => {
            // α(x^i) = (x^(p^(k/2)))^i mod f
            let t = frobenius_power(k / 2, &f, p);
            let mut m = IntMatrix::zeros(n, n);
            let mut power = one_poly(n); // t^0
            for i in 0..n {
                for (r, &c) in power.iter().enumerate() {
                    m[(r, i)] = BigInt::from(c);
                }
                power = poly_mul_mod(&power, &t, &f, p);
            }
            m
        }
    };

    let mut unit = vec![BigInt::zero(); n];
    unit[0] = BigInt::one();

    let order = p.pow(k as u32);
    let name = if k == 1 {
        format!("F{}", order)
    } else {
        let tag = match involution {
            FieldInvolution::Identity => "",
            FieldInvolution::FrobeniusHalf => ";frob",
        };
        format!("F{}[{}{}]", order, poly_display(&f), tag)
    };
    let basis_names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{}", i),
        })
        .collect();

    RingWithInvolution::from_parts(
        name,
        vec![BigInt::from(p); n],
        mul,
        unit,
        inv_matrix,
        true,
        basis_names,
    )
}

/// `R[x]/(x^k)` with `x` fixed by the involution; `k >= 1`.
pub fn truncated_polynomial(base: &RingWithInvolution, k: usize) -> RingWithInvolution {
    assert!(k >= 1, "truncation degree must be >= 1");
    let n = base.rank();
    let total = n * k;
    let idx = |i: usize, j: usize| j * n + i; // coefficient i of the x^j slot

    let mut orders = vec![BigInt::zero(); total];
    let mut mul = vec![vec![vec![BigInt::zero(); total]; total]; total];
    let mut inv = IntMatrix::zeros(total, total);
    let mut unit = vec![BigInt::zero(); total];
    let mut basis_names = vec![String::new(); total];

    for j in 0..k {
        for i in 0..n {
            let here = idx(i, j);
            orders[here] = base.orders()[i].clone();
            basis_names[here] = match (j, &base.basis_names()[i]) {
                (0, name) => name.clone(),
                (1, name) if name == "1" => "x".to_string(),
                (1, name) => format!("{}·x", name),
                (_, name) if name == "1" => format!("x^{}", j),
                (_, name) => format!("{}·x^{}", name, j),
            };
            // involution acts by the base involution, fixing x
            for r in 0..n {
                inv[(idx(r, j), here)] = base.involution_matrix()[(r, i)].clone();
            }
        }
    }
    for i in 0..n {
        unit[idx(i, 0)] = base.unit_vector()[i].clone();
    }
    for j1 in 0..k {
        for j2 in 0..k {
            if j1 + j2 >= k {
                continue; // x^(j1+j2) = 0
            }
            for i1 in 0..n {
                for i2 in 0..n {
                    let prod = &base.multiplication_table()[i1][i2];
                    for r in 0..n {
                        mul[idx(i1, j1)][idx(i2, j2)][idx(r, j1 + j2)] = prod[r].clone();
                    }
                }
            }
        }
    }

    let commutative = table_is_commutative(&mul, &orders);
    RingWithInvolution::from_parts(
        format!("{}[x]/(x^{})", base.name(), k),
        orders,
        mul,
        unit,
        inv,
        commutative,
        basis_names,
    )
    .expect("truncated polynomial data is well formed")
}

/// `k x k` matrices over `R`, with the involution sending a matrix to the
/// entrywise-involuted transpose.
pub fn matrix_ring(base: &RingWithInvolution, k: usize) -> RingWithInvolution {
    assert!(k >= 1, "matrix size must be >= 1");
    let n = base.rank();
    let total = k * k * n;
    let idx = |u: usize, v: usize, i: usize| (u * k + v) * n + i;

    let mut orders = vec![BigInt::zero(); total];
    let mut mul = vec![vec![vec![BigInt::zero(); total]; total]; total];
    let mut inv = IntMatrix::zeros(total, total);
    let mut unit = vec![BigInt::zero(); total];
    let mut basis_names = vec![String::new(); total];

    for u in 0..k {
        for v in 0..k {
            for i in 0..n {
                let here = idx(u, v, i);
                orders[here] = base.orders()[i].clone();
                let cell = format!("E{}{}", u + 1, v + 1);
                basis_names[here] = if base.basis_names()[i] == "1" {
                    cell
                } else {
                    format!("{}·{}", cell, base.basis_names()[i])
                };
                // α(E_uv b_i) = E_vu α(b_i)
                for r in 0..n {
                    inv[(idx(v, u, r), here)] = base.involution_matrix()[(r, i)].clone();
                }
            }
        }
    }
    for u in 0..k {
        for i in 0..n {
            unit[idx(u, u, i)] = base.unit_vector()[i].clone();
        }
    }
    // (E_uv b)(E_u'v' b') = δ_{v u'} E_uv' (b b')
    for u in 0..k {
        for v in 0..k {
            for v2 in 0..k {
                for i1 in 0..n {
                    for i2 in 0..n {
                        let prod = &base.multiplication_table()[i1][i2];
                        for r in 0..n {
                            mul[idx(u, v, i1)][idx(v, v2, i2)][idx(u, v2, r)] = prod[r].clone();
                        }
                    }
                }
            }
        }
    }

    let commutative = table_is_commutative(&mul, &orders);
    RingWithInvolution::from_parts(
        format!("M{}({})", k, base.name()),
        orders,
        mul,
        unit,
        inv,
        commutative,
        basis_names,
    )
    .expect("matrix ring data is well formed")
}

/// Group ring `R[G]` for a finite group given by its multiplication table
/// (`table[a][b]` is the index of the product), with the involution
/// `r·g -> α(r)·g⁻¹`.
pub fn group_ring(base: &RingWithInvolution, table: &[Vec<usize>]) -> Result<RingWithInvolution> {
    let m = table.len();
    if m == 0 || table.iter().any(|row| row.len() != m) {
        return Err(Error::Input(
            "group table must be square and nonempty".into(),
        ));
    }
    if table.iter().any(|row| row.iter().any(|&entry| entry >= m)) {
        return Err(Error::Input("group table entry out of range".into()));
    }
    // identity element: neutral on both sides
    let Some(e) = (0..m).find(|&cand| (0..m).all(|g| table[cand][g] == g && table[g][cand] == g))
    else {
        return Err(Error::Input("group table has no identity element".into()));
    };
    // associativity and inverses
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::Input(format!(
                        "group table is not associative at ({}, {}, {})",
                        a, b, c
                    )));
                }
            }
        }
    }
    let mut inverse = vec![None; m];
    for a in 0..m {
        inverse[a] = (0..m).find(|&b| table[a][b] == e && table[b][a] == e);
        if inverse[a].is_none() {
            return Err(Error::Input(format!("group element {} has no inverse", a)));
        }
    }

    let n = base.rank();
    let total = m * n;
    let idx = |g: usize, i: usize| g * n + i;

    let mut orders = vec![BigInt::zero(); total];
    let mut mul = vec![vec![vec![BigInt::zero(); total]; total]; total];
    let mut inv = IntMatrix::zeros(total, total);
    let mut unit = vec![BigInt::zero(); total];
    let mut basis_names = vec![String::new(); total];

    #[allow(clippy::needless_range_loop)]
    for g in 0..m {
        for i in 0..n {
            let here = idx(g, i);
            orders[here] = base.orders()[i].clone();
            let gname = if g == e {
                "1".to_string()
            } else {
                format!("g{}", g)
            };
            basis_names[here] = match (&gname[..], &base.basis_names()[i][..]) {
                ("1", b) => b.to_string(),
                (g, "1") => g.to_string(),
                (g, b) => format!("{}·{}", b, g),
            };
            let ginv = inverse[g].unwrap();
            for r in 0..n {
                inv[(idx(ginv, r), here)] = base.involution_matrix()[(r, i)].clone();
            }
        }
    }
    for i in 0..n {
        unit[idx(e, i)] = base.unit_vector()[i].clone();
    }
    for g1 in 0..m {
        for g2 in 0..m {
            let g = table[g1][g2];
            for i1 in 0..n {
                for i2 in 0..n {
                    let prod = &base.multiplication_table()[i1][i2];
                    for r in 0..n {
                        mul[idx(g1, i1)][idx(g2, i2)][idx(g, r)] = prod[r].clone();
                    }
                }
            }
        }
    }

    let commutative = table_is_commutative(&mul, &orders);
    RingWithInvolution::from_parts(
        format!("{}[G{}]", base.name(), m),
        orders,
        mul,
        unit,
        inv,
        commutative,
        basis_names,
    )
}

/// Multiplication table of the cyclic group of order `m`.
pub fn cyclic_group_table(m: usize) -> Vec<Vec<usize>> {
    assert!(m >= 1);
    (0..m)
        .map(|a| (0..m).map(|b| (a + b) % m).collect())
        .collect()
}

/// Product ring with componentwise operations and involution.
pub fn product(left: &RingWithInvolution, right: &RingWithInvolution) -> RingWithInvolution {
    let (nl, nr) = (left.rank(), right.rank());
    let total = nl + nr;

    let mut orders = Vec::with_capacity(total);
    orders.extend_from_slice(left.orders());
    orders.extend_from_slice(right.orders());

    let mut unit = Vec::with_capacity(total);
    unit.extend_from_slice(left.unit_vector());
    unit.extend_from_slice(right.unit_vector());

    let mut mul = vec![vec![vec![BigInt::zero(); total]; total]; total];
    for (i, row) in left.multiplication_table().iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            mul[i][j][..nl].clone_from_slice(cell);
        }
    }
    for (i, row) in right.multiplication_table().iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            mul[nl + i][nl + j][nl..].clone_from_slice(cell);
        }
    }

    let mut inv = IntMatrix::zeros(total, total);
    for c in 0..nl {
        for r in 0..nl {
            inv[(r, c)] = left.involution_matrix()[(r, c)].clone();
        }
    }
    for c in 0..nr {
        for r in 0..nr {
            inv[(nl + r, nl + c)] = right.involution_matrix()[(r, c)].clone();
        }
    }

    let mut basis_names = Vec::with_capacity(total);
    for name in left.basis_names() {
        basis_names.push(format!("({},0)", name));
    }
    for name in right.basis_names() {
        basis_names.push(format!("(0,{})", name));
    }

    let commutative = table_is_commutative(&mul, &orders);
    RingWithInvolution::from_parts(
        format!("{} x {}", left.name(), right.name()),
        orders,
        mul,
        unit,
        inv,
        commutative,
        basis_names,
    )
    .expect("product ring data is well formed")
}

/// The Gaussian integers `Z[i]` with complex conjugation.
pub fn gaussian_integers() -> RingWithInvolution {
    let zero = BigInt::zero;
    let one = BigInt::one;
    RingWithInvolution::from_parts(
        "Z[i]".to_string(),
        vec![zero(), zero()],
        vec![
            vec![vec![one(), zero()], vec![zero(), one()]],
            vec![vec![zero(), one()], vec![-one(), zero()]],
        ],
        vec![one(), zero()],
        IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]),
        true,
        vec!["1".to_string(), "i".to_string()],
    )
    .expect("gaussian integer data is well formed")
}

/// Quaternions over `Z/n` (over `Z` when `n = 0`) on the basis `1, i, j, k`
/// with the Hamilton relations, and conjugation as the involution.
pub fn quaternion_ring(n: u64) -> RingWithInvolution {
    let e = |v: [i64; 4]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let table = vec![
        vec![
            e([1, 0, 0, 0]),
            e([0, 1, 0, 0]),
            e([0, 0, 1, 0]),
            e([0, 0, 0, 1]),
        ],
        vec![
            e([0, 1, 0, 0]),
            e([-1, 0, 0, 0]),
            e([0, 0, 0, 1]),
            e([0, 0, -1, 0]),
        ],
        vec![
            e([0, 0, 1, 0]),
            e([0, 0, 0, -1]),
            e([-1, 0, 0, 0]),
            e([0, 1, 0, 0]),
        ],
        vec![
            e([0, 0, 0, 1]),
            e([0, 0, 1, 0]),
            e([0, -1, 0, 0]),
            e([-1, 0, 0, 0]),
        ],
    ];
    let orders = vec![BigInt::from(n); 4];
    let inv = IntMatrix::from_rows(&[
        vec![1, 0, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, -1, 0],
        vec![0, 0, 0, -1],
    ]);
    let name = if n == 0 {
        "H(Z)".to_string()
    } else {
        format!("H(Z/{})", n)
    };
    let commutative = table_is_commutative(&table, &orders);
    RingWithInvolution::from_parts(
        name,
        orders,
        table,
        e([1, 0, 0, 0]),
        inv,
        commutative,
        vec!["1".into(), "i".into(), "j".into(), "k".into()],
    )
    .expect("quaternion data is well formed")
}

/// Whether the structure constants are symmetric modulo the additive orders.
#[allow(clippy::needless_range_loop)]
fn table_is_commutative(mul: &[Vec<Vec<BigInt>>], orders: &[BigInt]) -> bool {
    let n = mul.len();
    for i in 0..n {
        for j in 0..n {
            for r in 0..orders.len() {
                let diff = &mul[i][j][r] - &mul[j][i][r];
                let d = &orders[r];
                let vanishes = if d.is_zero() {
                    diff.is_zero()
                } else {
                    (&diff % d).is_zero()
                };
                if !vanishes {
                    return false;
                }
            }
        }
    }
    true
}

// ---- small polynomial arithmetic over F_p (coefficients as machine ints) --

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn one_poly(len: usize) -> Vec<u64> {
    let mut v = vec![0; len];
    v[0] = 1;
    v
}

/// Multiply two residues (degree < k) modulo the monic polynomial `f` of
/// degree `k`, coefficients mod `p`.
fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let k = f.len() - 1;
    let mut buf = vec![0u128; 2 * k];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                buf[i + j] = (buf[i + j] + ai as u128 * bj as u128) % p as u128;
            }
        }
    }
    // reduce modulo monic f, top degree down
    for d in (k..2 * k).rev() {
        let c = buf[d] % p as u128;
        if c == 0 {
            continue;
        }
        buf[d] = 0;
        for (i, &fi) in f.iter().enumerate().take(k) {
            // subtract c * f * x^(d-k)
            let pos = d - k + i;
            let sub = (c * fi as u128) % p as u128;
            buf[pos] = (buf[pos] + p as u128 - sub) % p as u128;
        }
    }
    buf[..k].iter().map(|&x| x as u64).collect()
}

/// `a^p mod f` by square-and-multiply.
fn poly_pow_p(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let k = f.len() - 1;
    let mut base = a.to_vec();
    let mut acc = one_poly(k);
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, f, p);
        }
        base = poly_mul_mod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

/// `x^(p^d) mod f` by iterating the p-power map.
fn frobenius_power(d: usize, f: &[u64], p: u64) -> Vec<u64> {
    let k = f.len() - 1;
    let mut t = vec![0u64; k];
    if k == 1 {
        // x ≡ -f[0], a scalar
        t[0] = (p - f[0] % p) % p;
    } else {
        t[1] = 1;
    }
    for _ in 0..d {
        t = poly_pow_p(&t, f, p);
    }
    t
}

/// Monic polynomial of degree `d` whose lower coefficients are the base-`p`
/// digits of `counter` (constant term least significant).
fn poly_from_counter(counter: u64, d: usize, p: u64) -> Vec<u64> {
    let mut f = vec![0u64; d + 1];
    let mut c = counter;
    for slot in f.iter_mut().take(d) {
        *slot = c % p;
        c /= p;
    }
    f[d] = 1;
    f
}

/// Whether monic `g` divides monic `f` over F_p (degrees of both exact).
fn poly_divides(g: &[u64], f: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() > dg {
        let lead = rem[rem.len() - 1] % p;
        if lead != 0 {
            let shift = rem.len() - 1 - dg;
            for (i, &gc) in g.iter().enumerate() {
                let sub = (lead as u128 * gc as u128) % p as u128;
                let pos = shift + i;
                rem[pos] = ((rem[pos] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for counter in 0..p.pow(d as u32) {
            let g = poly_from_counter(counter, d, p);
            if poly_divides(&g, f, p) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first irreducible monic polynomial of degree `k`.
fn first_irreducible(p: u64, k: usize) -> Vec<u64> {
    for counter in 0..p.pow(k as u32) {
        let f = poly_from_counter(counter, k, p);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_display(f: &[u64]) -> String {
    let mut terms = Vec::new();
    for d in (0..f.len()).rev() {
        let c = f[d];
        if c == 0 {
            continue;
        }
        let term = match (d, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{}x", c),
            (d, 1) => format!("x^{}", d),
            (d, c) => format!("{}x^{}", c, d),
        };
        terms.push(term);
    }
    terms.join("+")
}
