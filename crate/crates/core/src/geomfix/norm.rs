//! The norm quotient `Q = R^α / N(R)`.
//!
//! `R^α` is the subgroup of elements fixed by the involution and `N(R)` is
//! the image of the additive norm map `r ↦ r + α(r)`.  Since `N(x) = 2x` for
//! fixed `x`, the quotient is always an elementary abelian 2-group; the
//! constructor verifies this and fails with a cross-check error otherwise.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abgroup::{
    quotient_by_subgroup, AbelianPresentation, CanonicalForm, F2Vec, GroupMap, IntMatrix,
    LatticeSolver,
};
use crate::error::{Error, Result};
use crate::ring_inv::{RingElement, RingWithInvolution};

/// Rings of order at most this are scanned exhaustively to pick lifts.
const LIFT_SCAN_CAP: u64 = 4096;

/// The fixed subgroup modulo norms, with a chosen lift for every canonical
/// generator.
///
/// Coordinates: the presentation `q` is on the generators of the fixed
/// subgroup; `class_of` converts ring elements to canonical mod-2 classes of
/// length [`NormQuotient::dim`].  `lifts[c]` is a fixed ring element whose
/// class is the `c`-th canonical basis vector, so `class_of(lifts[c]) = e_c`.
#[derive(Clone, Debug)]
pub struct NormQuotient {
    ring: RingWithInvolution,
    fix_presentation: AbelianPresentation,
    fix_solver: LatticeSolver,
    q: AbelianPresentation,
    projection: GroupMap,
    canon: CanonicalForm,
    lifts: Vec<RingElement>,
}

/// Build [`NormQuotient`] for a validated ring.
pub fn norm_quotient(ring: &RingWithInvolution) -> Result<NormQuotient> {
    let n = ring.rank();
    let (fix_presentation, fix_inclusion_map) = ring.fixed_subgroup();
    let fix_inclusion = fix_inclusion_map.matrix.clone();
    let k = fix_presentation.num_generators();

    // Solver for expressing ambient elements in fixed-subgroup coordinates:
    // F * x ≡ b modulo the additive relations of the ring.
    let additive = ring.additive_presentation();
    let fix_solver = LatticeSolver::new(&fix_inclusion.hstack(&additive.relations_transposed()));

    // Norm generators N(b_i) = b_i + α(b_i), rewritten in fixed coordinates.
    let norm_matrix = ring.involution_matrix().add(&IntMatrix::identity(n));
    let mut norm_gens: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..n {
        let col = norm_matrix.column(j);
        if col.iter().all(|x| x.is_zero()) {
            continue;
        }
        let sol = fix_solver.solve(&col).ok_or_else(|| {
            Error::CrossCheck(format!(
                "norm of basis element {} does not lie in the fixed subgroup",
                j
            ))
        })?;
        norm_gens.push(sol[..k].to_vec());
    }

    let (q, projection) = quotient_by_subgroup(&fix_presentation, &norm_gens);
    let canon = q.canonical_form();
    if !canon.is_elementary_two() {
        return Err(Error::CrossCheck(format!(
            "norm quotient of {} must be elementary abelian of exponent 2, got invariant factors {:?}",
            ring.name(),
            canon.factors
        )));
    }
    let dim = canon.dim();

    // Default lifts come from the canonical section.
    let mut lifts: Vec<RingElement> = (0..dim)
        .map(|c| {
            let fix_coords = canon.section_of(c);
            ring.element(fix_inclusion.mul_vec(&fix_coords))
                .expect("section lift has ring rank")
        })
        .collect();

    // For small finite rings, replace each lift by the preimage with the
    // lexicographically smallest canonical coefficient vector.  Infinite
    // rings have no smallest preimage, so the section representative stands.
    let small = matches!(ring.ring_order(), Some(ref o) if *o <= BigInt::from(LIFT_SCAN_CAP));
    if small && dim > 0 {
        let mut best: Vec<Option<Vec<BigInt>>> = vec![None; dim];
        for e in ring.elements(LIFT_SCAN_CAP)? {
            if ring.invol(&e) != e {
                continue;
            }
            let bits = class_bits(&canon, &fix_solver, k, &e, ring)?;
            let ones: Vec<usize> = (0..dim).filter(|&c| bits[c] == 1).collect();
            if ones.len() != 1 {
                continue;
            }
            let c = ones[0];
            match &best[c] {
                Some(cur) if *cur <= e.coeffs => {}
                _ => best[c] = Some(e.coeffs.clone()),
            }
        }
        for (c, found) in best.into_iter().enumerate() {
            let coeffs = found.ok_or_else(|| {
                Error::CrossCheck(format!(
                    "no fixed element of {} represents canonical generator {}",
                    ring.name(),
                    c
                ))
            })?;
            lifts[c] = ring.element(coeffs).expect("scanned lift has ring rank");
        }
    }

    let nq = NormQuotient {
        ring: ring.clone(),
        fix_presentation,
        fix_solver,
        q,
        projection,
        canon,
        lifts,
    };

    // Lifts must project back onto the canonical basis.
    for c in 0..nq.dim() {
        let bits = nq.class_of(&nq.lifts[c])?;
        let expected: F2Vec = (0..nq.dim()).map(|i| u8::from(i == c)).collect();
        if bits != expected {
            return Err(Error::CrossCheck(format!(
                "lift {} of {} projects to {:?} instead of a basis vector",
                c,
                ring.name(),
                bits
            )));
        }
    }
    Ok(nq)
}

fn class_bits(
    canon: &CanonicalForm,
    fix_solver: &LatticeSolver,
    fix_gens: usize,
    e: &RingElement,
    ring: &RingWithInvolution,
) -> Result<F2Vec> {
    let sol = fix_solver.solve(&e.coeffs).ok_or_else(|| {
        Error::CrossCheck(format!(
            "fixed element {} is not reachable from the fixed-subgroup generators",
            ring.display_element(e)
        ))
    })?;
    let class = canon.class_of(&sol[..fix_gens]);
    Ok(class
        .iter()
        .map(|v| u8::try_from(v % BigInt::from(2)).unwrap())
        .collect())
}

impl NormQuotient {
    /// The underlying ring.
    pub fn ring(&self) -> &RingWithInvolution {
        &self.ring
    }

    /// Presentation of `Q` on the fixed-subgroup generators.
    pub fn q_presentation(&self) -> &AbelianPresentation {
        &self.q
    }

    /// Presentation of the fixed subgroup itself.
    pub fn fixed_presentation(&self) -> &AbelianPresentation {
        &self.fix_presentation
    }

    /// Projection from the fixed subgroup onto `Q`.
    pub fn projection(&self) -> &GroupMap {
        &self.projection
    }

    /// Chosen lift of each canonical generator, as a ring element.
    pub fn lifts(&self) -> &[RingElement] {
        &self.lifts
    }

    /// F2-dimension of `Q`.
    pub fn dim(&self) -> usize {
        self.canon.dim()
    }

    /// Invariant factors of `Q` (always a list of 2s).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.canon.factors.clone()
    }

    /// Canonical mod-2 class of a fixed ring element.
    ///
    /// Errors with an input error if the element is not fixed by the
    /// involution.
    pub fn class_of(&self, e: &RingElement) -> Result<F2Vec> {
        let reduced = self.ring.element(e.coeffs.clone())?;
        if self.ring.invol(&reduced) != reduced {
            return Err(Error::Input(format!(
                "element {} of {} is not fixed by the involution",
                self.ring.display_element(&reduced),
                self.ring.name()
            )));
        }
        class_bits(
            &self.canon,
            &self.fix_solver,
            self.fix_presentation.num_generators(),
            &reduced,
            &self.ring,
        )
    }

    /// A fixed ring element representing the given canonical class.
    pub fn lift_class(&self, bits: &F2Vec) -> RingElement {
        assert_eq!(bits.len(), self.dim(), "class length mismatch");
        let mut acc = self.ring.zero();
        for (c, &b) in bits.iter().enumerate() {
            if b == 1 {
                acc = self.ring.add(&acc, &self.lifts[c]);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring_inv::construct::*;

    fn dims_and_factors(ring: &RingWithInvolution) -> (usize, Vec<i64>) {
        let nq = norm_quotient(ring).unwrap();
        let f = nq
            .invariant_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        (nq.dim(), f)
    }

    #[test]
    fn odd_and_two_invertible_rings_have_trivial_quotient() {
        for ring in [
            finite_field(3, 1, FieldInvolution::Identity).unwrap(),
            finite_field(5, 1, FieldInvolution::Identity).unwrap(),
            cyclic_ring(9),
            cyclic_ring(25),
            finite_field(3, 2, FieldInvolution::FrobeniusHalf).unwrap(),
        ] {
            assert!(ring.two_invertible());
            assert_eq!(dims_and_factors(&ring), (0, vec![]), "{}", ring.name());
        }
    }

    #[test]
    fn integers_give_one_copy_of_z_mod_two() {
        let z = cyclic_ring(0);
        let nq = norm_quotient(&z).unwrap();
        assert_eq!(nq.dim(), 1);
        assert_eq!(nq.invariant_factors(), vec![BigInt::from(2)]);
        // 1 generates; its class is the basis vector.
        assert_eq!(nq.class_of(&z.one()).unwrap(), vec![1]);
        // 2 = N(1) dies.
        assert_eq!(
            nq.class_of(&z.element_from_i64(&[2]).unwrap()).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn cyclic_of_order_four_gives_z_mod_two() {
        let r = cyclic_ring(4);
        let nq = norm_quotient(&r).unwrap();
        assert_eq!(nq.dim(), 1);
        assert_eq!(nq.lifts()[0], r.one(), "1 is the smallest representative");
        assert_eq!(
            nq.class_of(&r.element_from_i64(&[3]).unwrap()).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn matrix_ring_over_f2_has_two_dimensional_quotient() {
        // Fixed points of transpose on M2(F2): diagonal matrices and E12+E21.
        // Norms: X + X^T, the span of E12+E21.  Quotient has rank 2.
        let r = matrix_ring(&finite_field(2, 1, FieldInvolution::Identity).unwrap(), 2);
        let nq = norm_quotient(&r).unwrap();
        assert_eq!(nq.dim(), 2);
        // Lex-smallest lifts are E11 = (1,0,0,0) and E22 = (0,0,0,1).
        let coeff_sets: Vec<Vec<i64>> = nq
            .lifts()
            .iter()
            .map(|l| l.coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect())
            .collect();
        assert!(coeff_sets.contains(&vec![1, 0, 0, 0]));
        assert!(coeff_sets.contains(&vec![0, 0, 0, 1]));
        // E12 + E21 is a norm.
        let off = r.element_from_i64(&[0, 1, 1, 0]).unwrap();
        assert_eq!(nq.class_of(&off).unwrap(), vec![0, 0]);
    }

    #[test]
    fn gaussian_integers_give_z_mod_two() {
        let r = gaussian_integers();
        let nq = norm_quotient(&r).unwrap();
        assert_eq!(nq.dim(), 1);
        // i is not fixed under conjugation.
        assert!(matches!(
            nq.class_of(&r.basis_element(1)),
            Err(Error::Input(_))
        ));
        // 1 + i + (1 - i) = 2 is a norm; 1 is not.
        assert_eq!(
            nq.class_of(&r.element_from_i64(&[2, 0]).unwrap()).unwrap(),
            vec![0]
        );
        assert_eq!(nq.class_of(&r.one()).unwrap(), vec![1]);
    }

    #[test]
    fn quaternions_mod_two_have_dimension_four() {
        let r = quaternion_ring(2);
        let nq = norm_quotient(&r).unwrap();
        assert_eq!(nq.dim(), 4);
        // Round trip: lifting any class and projecting returns it.
        for m in 0..16u8 {
            let bits: Vec<u8> = (0..4).map(|i| (m >> i) & 1).collect();
            let lifted = nq.lift_class(&bits);
            assert_eq!(nq.class_of(&lifted).unwrap(), bits);
        }
    }

    #[test]
    fn group_ring_inversion_has_dimension_one() {
        let f2 = finite_field(2, 1, FieldInvolution::Identity).unwrap();
        let r = group_ring(&f2, &cyclic_group_table(3)).unwrap();
        let nq = norm_quotient(&r).unwrap();
        assert_eq!(nq.dim(), 1);
        // g + g^2 = N(g) dies; 1 + g + g^2 is fixed with class 1.
        assert_eq!(
            nq.class_of(&r.element_from_i64(&[0, 1, 1]).unwrap())
                .unwrap(),
            vec![0]
        );
        assert_eq!(
            nq.class_of(&r.element_from_i64(&[1, 1, 1]).unwrap())
                .unwrap(),
            vec![1]
        );
    }

    #[test]
    fn truncated_polynomials_count_powers_of_x() {
        let f2 = finite_field(2, 1, FieldInvolution::Identity).unwrap();
        assert_eq!(dims_and_factors(&truncated_polynomial(&f2, 2)).0, 2);
        assert_eq!(dims_and_factors(&truncated_polynomial(&f2, 3)).0, 3);
    }

    #[test]
    fn projection_composed_with_lift_is_identity() {
        for ring in [
            cyclic_ring(8),
            product(
                &truncated_polynomial(&finite_field(2, 1, FieldInvolution::Identity).unwrap(), 3),
                &finite_field(2, 1, FieldInvolution::Identity).unwrap(),
            ),
            matrix_ring(&finite_field(2, 1, FieldInvolution::Identity).unwrap(), 2),
        ] {
            let nq = norm_quotient(&ring).unwrap();
            for c in 0..nq.dim() {
                let e: Vec<u8> = (0..nq.dim()).map(|i| u8::from(i == c)).collect();
                assert_eq!(nq.class_of(&nq.lifts()[c]).unwrap(), e, "{}", ring.name());
            }
        }
    }
}
