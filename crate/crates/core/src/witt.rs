//! Length-2 Witt vectors over a commutative ring.
//!
//! A vector is a pair `(x1, x2)`; the ghost map `w ↦ (w1, w1² + 2·w2)`
//! dictates the arithmetic:
//!
//! ```text
//!     (a1, a2) + (b1, b2) = (a1 + b1, a2 + b2 - a1·b1)
//!     (a1, a2) · (b1, b2) = (a1·b1, a1²·b2 + a2·b1² + 2·a2·b2)
//! ```
//!
//! When 2 is invertible the ghost map is a ring isomorphism onto `R × R`;
//! in characteristic 2 it is far from injective and the additive group
//! acquires torsion of higher exponent.  [`witt_group_structure`] tabulates
//! that additive group by brute force, and [`compare_with_geomfix`] puts it
//! side by side with the component group of the geometric fixed points.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abgroup::{AbelianPresentation, IntMatrix};
use crate::error::{Error, Result};
use crate::geomfix::{pi0_geometric_fixed_points, Method};
use crate::ring_inv::{RingElement, RingWithInvolution};

/// A length-2 Witt vector with entries in a commutative ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WittVector2 {
    pub x1: RingElement,
    pub x2: RingElement,
}

impl WittVector2 {
    pub fn new(x1: RingElement, x2: RingElement) -> Self {
        WittVector2 { x1, x2 }
    }
}

fn ensure_commutative(ring: &RingWithInvolution) -> Result<()> {
    if !ring.is_commutative() {
        return Err(Error::Input(format!(
            "Witt vectors require a commutative ring, {} is not",
            ring.name()
        )));
    }
    Ok(())
}

/// The additive and multiplicative zero and one.
pub fn witt_zero(ring: &RingWithInvolution) -> WittVector2 {
    WittVector2::new(ring.zero(), ring.zero())
}

pub fn witt_one(ring: &RingWithInvolution) -> WittVector2 {
    WittVector2::new(ring.one(), ring.zero())
}

/// Ghost coordinates `(w1, w1² + 2·w2)`.
pub fn ghost(ring: &RingWithInvolution, w: &WittVector2) -> Result<(RingElement, RingElement)> {
    ensure_commutative(ring)?;
    let sq = ring.mul(&w.x1, &w.x1);
    let double = ring.scalar_mul(&BigInt::from(2), &w.x2);
    Ok((w.x1.clone(), ring.add(&sq, &double)))
}

/// Witt-vector sum.
pub fn witt_add(
    ring: &RingWithInvolution,
    a: &WittVector2,
    b: &WittVector2,
) -> Result<WittVector2> {
    ensure_commutative(ring)?;
    let x1 = ring.add(&a.x1, &b.x1);
    let x2 = ring.sub(&ring.add(&a.x2, &b.x2), &ring.mul(&a.x1, &b.x1));
    Ok(WittVector2::new(x1, x2))
}

/// Additive inverse: `(-a1, -a2 - a1²)`.
pub fn witt_neg(ring: &RingWithInvolution, a: &WittVector2) -> Result<WittVector2> {
    ensure_commutative(ring)?;
    let x1 = ring.neg(&a.x1);
    let x2 = ring.neg(&ring.add(&a.x2, &ring.mul(&a.x1, &a.x1)));
    Ok(WittVector2::new(x1, x2))
}

/// Witt-vector product.
pub fn witt_mul(
    ring: &RingWithInvolution,
    a: &WittVector2,
    b: &WittVector2,
) -> Result<WittVector2> {
    ensure_commutative(ring)?;
    let x1 = ring.mul(&a.x1, &b.x1);
    let a1sq_b2 = ring.mul(&ring.mul(&a.x1, &a.x1), &b.x2);
    let a2_b1sq = ring.mul(&a.x2, &ring.mul(&b.x1, &b.x1));
    let cross = ring.scalar_mul(&BigInt::from(2), &ring.mul(&a.x2, &b.x2));
    let x2 = ring.add(&ring.add(&a1sq_b2, &a2_b1sq), &cross);
    Ok(WittVector2::new(x1, x2))
}

/// Rings of order at most this are accepted by [`witt_group_structure`].
pub const WITT_ORDER_CAP: u64 = 256;

/// Invariant factors of the additive group of length-2 Witt vectors,
/// computed by closing the generating set `(b_i, 0), (0, b_i)` under
/// addition and presenting the resulting relation lattice.
pub fn witt_group_structure(ring: &RingWithInvolution) -> Result<Vec<BigInt>> {
    ensure_commutative(ring)?;
    let order = ring.ring_order().ok_or_else(|| {
        Error::Input(format!(
            "Witt group tabulation needs a finite ring, {} is infinite",
            ring.name()
        ))
    })?;
    if order > BigInt::from(WITT_ORDER_CAP) {
        return Err(Error::Input(format!(
            "ring {} has order {}, above the Witt tabulation bound {}",
            ring.name(),
            order,
            WITT_ORDER_CAP
        )));
    }

    let n = ring.rank();
    let generators: Vec<WittVector2> = (0..n)
        .map(|i| WittVector2::new(ring.basis_element(i), ring.zero()))
        .chain((0..n).map(|i| WittVector2::new(ring.zero(), ring.basis_element(i))))
        .collect();

    // Breadth-first closure tracking one expression vector per element; each
    // rediscovery contributes a relation between expressions.
    let mut expression: HashMap<WittVector2, Vec<BigInt>> = HashMap::new();
    let mut queue = VecDeque::new();
    let zero = witt_zero(ring);
    expression.insert(zero.clone(), vec![BigInt::zero(); 2 * n]);
    queue.push_back(zero);
    let mut relation_rows: Vec<Vec<BigInt>> = Vec::new();

    while let Some(w) = queue.pop_front() {
        let expr = expression[&w].clone();
        for (g, gen) in generators.iter().enumerate() {
            let next = witt_add(ring, &w, gen)?;
            let mut next_expr = expr.clone();
            next_expr[g] += BigInt::one();
            match expression.get(&next) {
                None => {
                    expression.insert(next.clone(), next_expr);
                    queue.push_back(next);
                }
                Some(known) => {
                    let row: Vec<BigInt> =
                        next_expr.iter().zip(known).map(|(a, b)| a - b).collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        relation_rows.push(row);
                    }
                }
            }
        }
    }

    let relations = if relation_rows.is_empty() {
        IntMatrix::zeros(0, 2 * n)
    } else {
        IntMatrix::from_bigint_rows(relation_rows)
    };
    let presentation = AbelianPresentation::new(2 * n, relations);
    let factors = presentation.invariant_factors();

    // The closure walks the whole underlying set R x R, so the group order
    // must come out as |R|².
    let expected = &order * &order;
    let found = BigInt::from(expression.len());
    let presented = presentation.order();
    if found != expected || presented.as_ref() != Some(&expected) {
        return Err(Error::CrossCheck(format!(
            "Witt group of {} should have order {}, closure found {} elements presented as {:?}",
            ring.name(),
            expected,
            found,
            presented
        )));
    }
    Ok(factors)
}

/// Side-by-side comparison of the Witt group with the component group of
/// the geometric fixed points.
#[derive(Clone, Debug)]
pub struct WittComparison {
    pub ring_name: String,
    pub witt_factors: Vec<BigInt>,
    pub geomfix_factors: Vec<BigInt>,
    pub isomorphic_as_groups: bool,
    /// What the comparison does and does not claim.
    pub note: String,
}

/// Tabulate both groups for a finite commutative ring with the identity
/// involution.
pub fn compare_with_geomfix(ring: &RingWithInvolution) -> Result<WittComparison> {
    ensure_commutative(ring)?;
    let n = ring.rank();
    if *ring.involution_matrix() != IntMatrix::identity(n) {
        return Err(Error::Input(format!(
            "Witt comparison is defined for the identity involution; {} carries a nontrivial one",
            ring.name()
        )));
    }
    let witt_factors = witt_group_structure(ring)?;
    let geomfix = pi0_geometric_fixed_points(ring, Method::All)?;
    let geomfix_factors = geomfix.invariant_factors.clone();
    let isomorphic_as_groups = witt_factors == geomfix_factors;
    Ok(WittComparison {
        ring_name: ring.name().to_string(),
        witt_factors,
        geomfix_factors,
        isomorphic_as_groups,
        note: "compares additive groups only: the length-2 Witt group models the genuine \
               fixed points, which this tool does not compute; the component group on the \
               right is the geometric one, and the two sides need not agree"
            .into(),
    })
}

/// Exhaustively confirm the commutative ring axioms for length-2 Witt
/// vectors over a finite ring: identities, additive inverses,
/// commutativity, associativity, and distributivity on every triple.
///
/// Returns the number of triples checked.  Any broken law is reported as a
/// cross-check failure naming the law and the offending vectors.
pub fn verify_witt_ring_axioms(ring: &RingWithInvolution, cap: u64) -> Result<usize> {
    let elems = ring.elements(cap)?;
    let mut vectors = Vec::new();
    for x1 in &elems {
        for x2 in &elems {
            vectors.push(WittVector2::new(x1.clone(), x2.clone()));
        }
    }
    let show = |w: &WittVector2| {
        format!(
            "({}, {})",
            ring.display_element(&w.x1),
            ring.display_element(&w.x2)
        )
    };
    let broken = |law: &str, ws: &[&WittVector2]| {
        Error::CrossCheck(format!(
            "Witt vectors over {} break {} at {}",
            ring.name(),
            law,
            ws.iter().map(|w| show(w)).collect::<Vec<_>>().join(", ")
        ))
    };
    let zero = witt_zero(ring);
    let one = witt_one(ring);
    let mut triples = 0;
    for a in &vectors {
        if witt_add(ring, a, &zero)? != *a {
            return Err(broken("the additive identity", &[a]));
        }
        if witt_mul(ring, a, &one)? != *a {
            return Err(broken("the multiplicative identity", &[a]));
        }
        if witt_add(ring, a, &witt_neg(ring, a)?)? != zero {
            return Err(broken("additive inverses", &[a]));
        }
        for b in &vectors {
            let ab = witt_add(ring, a, b)?;
            let ab_mul = witt_mul(ring, a, b)?;
            if ab != witt_add(ring, b, a)? {
                return Err(broken("additive commutativity", &[a, b]));
            }
            if ab_mul != witt_mul(ring, b, a)? {
                return Err(broken("multiplicative commutativity", &[a, b]));
            }
            for c in &vectors {
                if witt_add(ring, &ab, c)? != witt_add(ring, a, &witt_add(ring, b, c)?)? {
                    return Err(broken("additive associativity", &[a, b, c]));
                }
                if witt_mul(ring, &ab_mul, c)? != witt_mul(ring, a, &witt_mul(ring, b, c)?)? {
                    return Err(broken("multiplicative associativity", &[a, b, c]));
                }
                let lhs = witt_mul(ring, a, &witt_add(ring, b, c)?)?;
                let rhs = witt_add(ring, &witt_mul(ring, a, b)?, &witt_mul(ring, a, c)?)?;
                if lhs != rhs {
                    return Err(broken("distributivity", &[a, b, c]));
                }
                triples += 1;
            }
        }
    }
    Ok(triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_inv::construct::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn f_p(p: u64) -> RingWithInvolution {
        finite_field(p, 1, FieldInvolution::Identity).unwrap()
    }

    fn factors_i64(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn sum_of_one_and_one_over_f2_carries() {
        let r = f_p(2);
        let one = witt_one(&r);
        let sum = witt_add(&r, &one, &one).unwrap();
        assert_eq!(sum.x1, r.zero());
        assert_eq!(sum.x2, r.one());
    }

    #[test]
    fn product_with_second_component_unit_over_integers() {
        let z = cyclic_ring(0);
        let a = witt_one(&z);
        let b = WittVector2::new(z.zero(), z.one());
        let prod = witt_mul(&z, &a, &b).unwrap();
        assert_eq!(prod.x1, z.zero());
        assert_eq!(prod.x2, z.one());
    }

    #[test]
    fn ghost_values_match_hand_computation() {
        let z = cyclic_ring(0);
        let (g1, g2) = ghost(&z, &witt_one(&z)).unwrap();
        assert_eq!(g1, z.one());
        assert_eq!(g2, z.one());
        let w = WittVector2::new(
            z.element_from_i64(&[2]).unwrap(),
            z.element_from_i64(&[3]).unwrap(),
        );
        let (g1, g2) = ghost(&z, &w).unwrap();
        assert_eq!(g1, z.element_from_i64(&[2]).unwrap());
        assert_eq!(g2, z.element_from_i64(&[10]).unwrap());
    }

    #[test]
    fn ghost_turns_witt_operations_into_componentwise_ones() {
        let z = cyclic_ring(0);
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        for _ in 0..100 {
            let mut pick = || {
                WittVector2::new(
                    z.element_from_i64(&[rng.gen_range(-20..=20)]).unwrap(),
                    z.element_from_i64(&[rng.gen_range(-20..=20)]).unwrap(),
                )
            };
            let (a, b) = (pick(), pick());
            let (ga1, ga2) = ghost(&z, &a).unwrap();
            let (gb1, gb2) = ghost(&z, &b).unwrap();
            let (gs1, gs2) = ghost(&z, &witt_add(&z, &a, &b).unwrap()).unwrap();
            assert_eq!(gs1, z.add(&ga1, &gb1));
            assert_eq!(gs2, z.add(&ga2, &gb2));
            let (gp1, gp2) = ghost(&z, &witt_mul(&z, &a, &b).unwrap()).unwrap();
            assert_eq!(gp1, z.mul(&ga1, &gb1));
            assert_eq!(gp2, z.mul(&ga2, &gb2));
        }
    }

    #[test]
    fn ring_axioms_hold_on_every_triple_of_small_rings() {
        assert_eq!(verify_witt_ring_axioms(&f_p(2), 16).unwrap(), 64);
        assert_eq!(verify_witt_ring_axioms(&f_p(3), 16).unwrap(), 729);
        assert_eq!(verify_witt_ring_axioms(&cyclic_ring(4), 16).unwrap(), 4096);
    }

    #[test]
    fn noncommutative_rings_are_rejected() {
        let m2 = matrix_ring(&f_p(2), 2);
        let w = witt_zero(&m2);
        assert!(matches!(witt_add(&m2, &w, &w), Err(Error::Input(_))));
        assert!(matches!(witt_group_structure(&m2), Err(Error::Input(_))));
    }

    #[test]
    fn characteristic_two_group_is_cyclic_of_order_four() {
        assert_eq!(factors_i64(&witt_group_structure(&f_p(2)).unwrap()), [4]);
    }

    #[test]
    fn odd_characteristic_groups_split_as_squares() {
        assert_eq!(factors_i64(&witt_group_structure(&f_p(3)).unwrap()), [3, 3]);
        assert_eq!(factors_i64(&witt_group_structure(&f_p(5)).unwrap()), [5, 5]);
        assert_eq!(
            factors_i64(&witt_group_structure(&cyclic_ring(9)).unwrap()),
            [9, 9]
        );
    }

    #[test]
    fn ghost_is_a_bijection_when_two_is_invertible() {
        for ring in [f_p(3), f_p(5)] {
            let mut seen = HashSet::new();
            let elems = ring.elements(8).unwrap();
            for x1 in &elems {
                for x2 in &elems {
                    let w = WittVector2::new(x1.clone(), x2.clone());
                    let g = ghost(&ring, &w).unwrap();
                    assert!(seen.insert((g.0.coeffs.clone(), g.1.coeffs.clone())));
                }
            }
            assert_eq!(seen.len(), elems.len() * elems.len());
        }
    }

    #[test]
    fn comparison_with_component_group_differs_in_both_characteristics() {
        let cmp2 = compare_with_geomfix(&f_p(2)).unwrap();
        assert_eq!(factors_i64(&cmp2.witt_factors), [4]);
        assert_eq!(factors_i64(&cmp2.geomfix_factors), [2]);
        assert!(!cmp2.isomorphic_as_groups);

        let cmp3 = compare_with_geomfix(&f_p(3)).unwrap();
        assert_eq!(factors_i64(&cmp3.witt_factors), [3, 3]);
        assert!(cmp3.geomfix_factors.is_empty());
        assert!(!cmp3.isomorphic_as_groups);
    }

    #[test]
    fn comparison_requires_the_identity_involution() {
        let f9 = finite_field(3, 2, FieldInvolution::FrobeniusHalf).unwrap();
        assert!(matches!(compare_with_geomfix(&f9), Err(Error::Input(_))));
    }
}
