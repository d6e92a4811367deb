//! Finitely generated abelian groups given by generators and relations.
//!
//! A presentation is a generator count `g` together with a relation matrix
//! whose rows are integer vectors of length `g`; the group presented is
//! `Z^g / (row lattice)`.  Everything is computed through the Smith normal
//! form: invariant factors, canonical coordinates, exact membership solving.

use super::matrix::IntMatrix;
use super::snf::{hermite_row_compress, smith_normal_form};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A finitely generated abelian group, presented by generators and relations.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    num_generators: usize,
    relations: IntMatrix,
}

impl AbelianPresentation {
    /// Group with the given relation rows.  Column count of `relations` must
    /// equal `num_generators`.
    pub fn new(num_generators: usize, relations: IntMatrix) -> Self {
        assert_eq!(
            relations.cols(),
            num_generators,
            "relation row length must equal the generator count"
        );
        AbelianPresentation {
            num_generators,
            relations,
        }
    }

    /// Free abelian group of the given rank.
    pub fn free(rank: usize) -> Self {
        AbelianPresentation::new(rank, IntMatrix::zeros(0, rank))
    }

    /// Direct sum of cyclic groups `Z/orders[i]`, order 0 meaning `Z`.
    /// Only nonzero orders contribute relation rows.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let rows: Vec<Vec<BigInt>> = orders
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| {
                let mut row = vec![BigInt::zero(); n];
                row[i] = d.clone();
                row
            })
            .collect();
        let relations = if rows.is_empty() {
            IntMatrix::zeros(0, n)
        } else {
            IntMatrix::from_bigint_rows(rows)
        };
        AbelianPresentation::new(n, relations)
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Relation matrix transposed, i.e. relations as columns.  The column
    /// lattice of this matrix is the subgroup of `Z^g` that is divided out.
    pub fn relations_transposed(&self) -> IntMatrix {
        self.relations.transpose()
    }

    /// Invariant factors `d_1 | d_2 | ...` with every `d_i >= 2`, followed by
    /// one `0` per free summand.  The empty list is the trivial group.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        // Tall relation matrices (e.g. from multiplication tables) are first
        // compressed to at most `g` rows with the same row lattice.
        let rels = if self.relations.rows() > 2 * self.num_generators {
            hermite_row_compress(&self.relations)
        } else {
            self.relations.clone()
        };
        let snf = smith_normal_form(&rels);
        let mut factors: Vec<BigInt> = snf
            .nonzero_diagonal()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        let rank = snf.rank();
        factors.extend(std::iter::repeat_n(
            BigInt::zero(),
            self.num_generators - rank,
        ));
        factors
    }

    /// Order of the group: `None` when infinite, otherwise the product of the
    /// invariant factors (1 for the trivial group).
    pub fn order(&self) -> Option<BigInt> {
        let mut ord = BigInt::one();
        for d in self.invariant_factors() {
            if d.is_zero() {
                return None;
            }
            ord *= d;
        }
        Some(ord)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors().is_empty()
    }

    /// Whether `x` is zero in the group, i.e. lies in the relation lattice.
    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.num_generators);
        LatticeSolver::new(&self.relations_transposed())
            .solve(x)
            .is_some()
    }

    /// Whether two coefficient vectors represent the same group element.
    pub fn elements_equal(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_element(&diff)
    }

    /// Canonical coordinates for this group; see [`CanonicalForm`].
    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm::new(self)
    }
}

/// Canonical coordinates on a presented group.
///
/// From `u * relations^T * v = d` the map `x -> u*x` identifies the group
/// with `⊕ Z/d_i ⊕ Z^f`; coordinates with `d_i = 1` carry no information and
/// are dropped.  `class_of` reduces torsion coordinates into `[0, d_i)`, so
/// two vectors represent the same element exactly when their classes are
/// equal.  `section` goes the other way: column `c` is a generator-coordinate
/// vector whose class is the `c`-th canonical basis vector.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// Invariant factor for each kept coordinate (0 for free coordinates).
    pub factors: Vec<BigInt>,
    /// Rows of `u` for the kept coordinates, as a matrix applied to
    /// generator-coordinate vectors.
    transform: IntMatrix,
    /// Preimages of the canonical basis vectors (one column per kept
    /// coordinate).
    section: IntMatrix,
}

impl CanonicalForm {
    fn new(pres: &AbelianPresentation) -> Self {
        let g = pres.num_generators();
        let rels_t = pres.relations_transposed();
        let snf = smith_normal_form(&rels_t);
        let diag = snf.d.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();

        let mut factors = Vec::new();
        let mut kept_rows = Vec::new();
        for i in 0..g {
            let d = if i < diag.len() {
                diag[i].clone()
            } else {
                BigInt::zero()
            };
            if i < rank && d.is_one() {
                continue;
            }
            factors.push(d);
            kept_rows.push(i);
        }

        let transform =
            IntMatrix::from_fn(kept_rows.len(), g, |r, c| snf.u[(kept_rows[r], c)].clone());

        // u is unimodular; solve u * x = e_i exactly for each kept row.
        let solver = LatticeSolver::new(&snf.u);
        let mut section = IntMatrix::zeros(g, kept_rows.len());
        for (c, &row) in kept_rows.iter().enumerate() {
            let mut e = vec![BigInt::zero(); g];
            e[row] = BigInt::one();
            let x = solver
                .solve(&e)
                .expect("unimodular transform must be invertible");
            section.set_column(c, &x);
        }

        CanonicalForm {
            factors,
            transform,
            section,
        }
    }

    /// Number of canonical coordinates.
    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    /// Canonical class of a generator-coordinate vector: torsion coordinates
    /// reduced into `[0, d_i)`, free coordinates exact.
    pub fn class_of(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.transform.mul_vec(x);
        y.into_iter()
            .zip(&self.factors)
            .map(|(v, d)| {
                if d.is_zero() {
                    v
                } else {
                    let r = v % d;
                    if r.is_negative() {
                        r + d
                    } else {
                        r
                    }
                }
            })
            .collect()
    }

    /// A generator-coordinate vector whose class is the canonical basis
    /// vector `e_c`.
    pub fn section_of(&self, c: usize) -> Vec<BigInt> {
        self.section.column(c)
    }

    /// True when every canonical coordinate has invariant factor 2.
    pub fn is_elementary_two(&self) -> bool {
        self.factors.iter().all(|d| *d == BigInt::from(2))
    }
}

/// Exact solver for `a * x = b` over the integers, with the Smith normal
/// form of `a` computed once and reused across right-hand sides.
#[derive(Clone, Debug)]
pub struct LatticeSolver {
    u: IntMatrix,
    v: IntMatrix,
    diag: Vec<BigInt>,
    rank: usize,
    rows: usize,
    cols: usize,
}

impl LatticeSolver {
    pub fn new(a: &IntMatrix) -> Self {
        let snf = smith_normal_form(a);
        let diag = snf.d.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        LatticeSolver {
            u: snf.u,
            v: snf.v,
            diag,
            rank,
            rows: a.rows(),
            cols: a.cols(),
        }
    }

    /// One solution of `a * x = b`, or `None` when `b` is not in the column
    /// lattice of `a`.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows);
        let y = self.u.mul_vec(b);
        let mut z = vec![BigInt::zero(); self.cols];
        for (i, yi) in y.iter().enumerate() {
            if i < self.rank {
                let (q, r) = (yi / &self.diag[i], yi % &self.diag[i]);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            } else if !yi.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&z))
    }
}

/// Basis of the kernel lattice `{x : a*x = 0}`, returned as matrix columns.
/// The basis may be empty (matrix with zero columns).
pub fn kernel_lattice(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    IntMatrix::from_fn(a.cols(), a.cols() - rank, |i, j| {
        snf.v[(i, rank + j)].clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(p: &AbelianPresentation) -> Vec<i64> {
        p.invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn invariant_factors_of_diagonal_presentation() {
        // 2 generators, relations 6a = 0, 4b = 0: the group is Z/2 + Z/12
        let p = AbelianPresentation::new(2, IntMatrix::from_rows(&[vec![6, 0], vec![0, 4]]));
        assert_eq!(factors(&p), vec![2, 12]);
        assert_eq!(p.order(), Some(BigInt::from(24)));
    }

    #[test]
    fn invariant_factors_with_free_part() {
        // Z^2 / <(2, 0)> = Z/2 + Z
        let p = AbelianPresentation::new(2, IntMatrix::from_rows(&[vec![2, 0]]));
        assert_eq!(factors(&p), vec![2, 0]);
        assert_eq!(p.order(), None);
    }

    #[test]
    fn trivial_group_has_empty_factor_list() {
        let p = AbelianPresentation::new(1, IntMatrix::from_rows(&[vec![1]]));
        assert!(p.is_trivial());
        assert_eq!(p.invariant_factors(), Vec::<BigInt>::new());
        assert_eq!(p.order(), Some(BigInt::one()));
        assert!(AbelianPresentation::free(0).is_trivial());
    }

    #[test]
    fn redundant_generators_are_absorbed() {
        // 3 generators, b = 2a forced, c killed: group is Z + Z/1... rows:
        // b - 2a = 0, c = 0 leaves Z free on a.
        let p = AbelianPresentation::new(3, IntMatrix::from_rows(&[vec![-2, 1, 0], vec![0, 0, 1]]));
        assert_eq!(factors(&p), vec![0]);
    }

    #[test]
    fn presentation_independence_under_row_operations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..30 {
            let g = rng.gen_range(1..=4);
            let r = rng.gen_range(0..=5);
            let m = IntMatrix::from_fn(r, g, |_, _| BigInt::from(rng.gen_range(-8i64..=8)));
            let base = AbelianPresentation::new(g, m.clone()).invariant_factors();

            // permute rows
            if r > 1 {
                let mut m2 = m.clone();
                m2.swap_rows(0, r - 1);
                assert_eq!(AbelianPresentation::new(g, m2).invariant_factors(), base);
            }
            // add one relation to another
            if r > 1 {
                let mut m3 = m.clone();
                m3.add_multiple_of_row(0, r - 1, &BigInt::from(3));
                assert_eq!(AbelianPresentation::new(g, m3).invariant_factors(), base);
            }
            // append a redundant relation (sum of existing ones)
            if r > 0 {
                let extra: Vec<BigInt> = (0..g)
                    .map(|j| (0..r).map(|i| m[(i, j)].clone()).sum())
                    .collect();
                let m4 = m.vstack(&IntMatrix::from_bigint_rows(vec![extra]));
                assert_eq!(AbelianPresentation::new(g, m4).invariant_factors(), base);
            }
        }
    }

    #[test]
    fn zero_element_detection() {
        // Z/4 on one generator: 2g is not zero, 4g is
        let p = AbelianPresentation::new(1, IntMatrix::from_rows(&[vec![4]]));
        assert!(!p.is_zero_element(&[BigInt::from(2)]));
        assert!(p.is_zero_element(&[BigInt::from(4)]));
        assert!(p.is_zero_element(&[BigInt::from(-8)]));
        assert!(p.elements_equal(&[BigInt::from(1)], &[BigInt::from(5)]));
    }

    #[test]
    fn canonical_form_separates_elements() {
        // Z/2 + Z/12 presented non-diagonally
        let p = AbelianPresentation::new(2, IntMatrix::from_rows(&[vec![6, 0], vec![0, 4]]));
        let can = p.canonical_form();
        assert_eq!(can.factors, vec![BigInt::from(2), BigInt::from(12)]);
        // canonical classes agree exactly when elements are equal
        let elems = [
            vec![BigInt::from(0), BigInt::from(0)],
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(6), BigInt::from(4)],
            vec![BigInt::from(3), BigInt::from(2)],
        ];
        for x in &elems {
            for y in &elems {
                assert_eq!(
                    can.class_of(x) == can.class_of(y),
                    p.elements_equal(x, y),
                    "canonical class vs equality mismatch for {:?} {:?}",
                    x,
                    y
                );
            }
        }
    }

    #[test]
    fn canonical_section_hits_basis_vectors() {
        let p = AbelianPresentation::new(3, IntMatrix::from_rows(&[vec![2, 0, 0], vec![0, 4, 0]]));
        let can = p.canonical_form();
        for c in 0..can.dim() {
            let x = can.section_of(c);
            let class = can.class_of(&x);
            for (i, v) in class.iter().enumerate() {
                let expect = if i == c {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*v, expect, "section {} has class {:?}", c, class);
            }
        }
    }

    #[test]
    fn lattice_solver_finds_exact_solutions() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = LatticeSolver::new(&a);
        assert_eq!(
            s.solve(&[BigInt::from(4), BigInt::from(-9)]),
            Some(vec![BigInt::from(2), BigInt::from(-3)])
        );
        assert_eq!(s.solve(&[BigInt::from(1), BigInt::from(0)]), None);

        // underdetermined: any solution must satisfy a*x = b exactly
        let a = IntMatrix::from_rows(&[vec![2, 4, 6]]);
        let s = LatticeSolver::new(&a);
        let b = vec![BigInt::from(10)];
        let x = s.solve(&b).expect("10 is a multiple of gcd 2");
        assert_eq!(a.mul_vec(&x), b);
        assert_eq!(s.solve(&[BigInt::from(3)]), None);
    }

    #[test]
    fn kernel_lattice_spans_the_kernel() {
        // kernel of (x, y) -> x - y is the diagonal
        let a = IntMatrix::from_rows(&[vec![1, -1]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.cols(), 1);
        let col = k.column(0);
        assert_eq!(col[0], col[1]);
        assert_eq!(col[0].clone().abs(), BigInt::one());

        // full-rank square matrix has trivial kernel
        let a = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(kernel_lattice(&a).cols(), 0);
    }
}
