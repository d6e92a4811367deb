//! Cross-module integration tests: the three computation methods against
//! each other, the homology oracle against the norm quotient, and the
//! structural invariants that must hold across the whole corpus.

mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use thrfix::abgroup::{direct_sum, xor_into, IntMatrix};
use thrfix::geomfix::{
    face_values_on_elements, induced_map, norm_quotient, pi0_geometric_fixed_points,
    relation_subgroup, Method, RelationStrategy,
};
use thrfix::oracle::{brute_force_relation_subgroup, homology_H1};
use thrfix::ring_inv::construct::{cyclic_ring, product, quaternion_ring, truncated_polynomial};
use thrfix::ring_inv::{RingElement, RingMap, RingWithInvolution};

#[test]
fn every_corpus_ring_passes_validation() {
    for ring in full_corpus() {
        let report = ring.validate();
        assert!(
            report.passed(),
            "{} fails validation: {:?}",
            ring.name(),
            report.failures
        );
    }
}

#[test]
fn three_methods_agree_on_every_finite_corpus_ring() {
    for ring in finite_corpus() {
        let result = pi0_geometric_fixed_points(&ring, Method::All)
            .unwrap_or_else(|e| panic!("{}: {}", ring.name(), e));
        assert_eq!(
            result.cross_check.len(),
            3,
            "{} should run linear, enumerate, and coequalizer",
            ring.name()
        );
        for (method, factors) in &result.cross_check {
            assert_eq!(
                *factors,
                result.invariant_factors,
                "{} disagrees via {}",
                ring.name(),
                method
            );
        }
    }
}

#[test]
fn linear_and_coequalizer_agree_on_infinite_rings() {
    let expected: &[(&str, &[i64])] = &[("Z", &[2]), ("Z[i]", &[2]), ("H(Z)", &[2])];
    for ring in infinite_corpus() {
        let result = pi0_geometric_fixed_points(&ring, Method::All).unwrap();
        assert_eq!(result.cross_check.len(), 2, "{}", ring.name());
        let want = expected
            .iter()
            .find(|(name, _)| *name == ring.name())
            .map(|(_, fs)| factors(fs))
            .unwrap();
        assert_eq!(result.invariant_factors, want, "{}", ring.name());
    }
}

#[test]
fn first_homology_matches_norm_quotient_on_full_corpus() {
    for ring in full_corpus() {
        let h1 = homology_H1(&ring).unwrap_or_else(|e| panic!("{}: {}", ring.name(), e));
        let q = norm_quotient(&ring).unwrap();
        assert_eq!(
            h1.invariant_factors(),
            q.invariant_factors(),
            "{}: H1 and the norm quotient disagree",
            ring.name()
        );
    }
}

#[test]
fn every_group_in_the_pipeline_is_elementary_two_torsion() {
    let two = BigInt::from(2);
    for ring in full_corpus() {
        let result = pi0_geometric_fixed_points(&ring, Method::All).unwrap();
        assert!(
            result.q_invariant_factors.iter().all(|d| *d == two),
            "{}: norm quotient has factors {:?}",
            ring.name(),
            result.q_invariant_factors
        );
        assert!(
            result.invariant_factors.iter().all(|d| *d == two),
            "{}: component group has factors {:?}",
            ring.name(),
            result.invariant_factors
        );
        assert_eq!(result.f2_dimension, result.invariant_factors.len());
        assert_eq!(result.witnesses.len(), result.f2_dimension);
    }
}

#[test]
fn exhaustive_relation_span_matches_linear_span_on_finite_corpus() {
    for ring in finite_corpus() {
        let nq = norm_quotient(&ring).unwrap();
        let linear = relation_subgroup(&nq, RelationStrategy::Linear, 4096).unwrap();
        let brute = brute_force_relation_subgroup(&nq, 4096).unwrap();
        assert!(
            linear.same_span(&brute),
            "{}: linear span (rank {}) differs from exhaustive span (rank {})",
            ring.name(),
            linear.rank(),
            brute.rank()
        );
    }
}

/// Pick a uniformly random element of a finite ring.
fn random_element(ring: &RingWithInvolution, rng: &mut ChaCha8Rng) -> RingElement {
    let coeffs = ring
        .orders()
        .iter()
        .map(|d| {
            let d = u64::try_from(d).expect("finite ring has u64 basis orders");
            BigInt::from(rng.gen_range(0..d))
        })
        .collect();
    ring.element(coeffs).unwrap()
}

/// Both face values are additive in the middle slot once norms are killed:
/// the cross terms of `α(s+s')·r·(s+s')` and `(s+s')·t·α(s+s')` pair up
/// into norms, so they vanish in `Q`.  This is what lets the linear method
/// restrict `s` to additive basis elements.
#[test]
fn face_values_are_additive_in_the_middle_slot_modulo_norms() {
    let rings = [
        trunc2(3),
        truncated_polynomial(&cyclic_ring(4), 2),
        group_ring_c3(),
        quaternion_ring(2),
        product(&f2(), &f2()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for ring in rings {
        let nq = norm_quotient(&ring).unwrap();
        let lifts = nq.lifts().to_vec();
        for _ in 0..50 {
            let s = random_element(&ring, &mut rng);
            let sp = random_element(&ring, &mut rng);
            let sum = ring.add(&s, &sp);
            for r in &lifts {
                for t in &lifts {
                    let (d0_s, d1_s) = face_values_on_elements(&nq, r, &s, t).unwrap();
                    let (d0_sp, d1_sp) = face_values_on_elements(&nq, r, &sp, t).unwrap();
                    let (d0_sum, d1_sum) = face_values_on_elements(&nq, r, &sum, t).unwrap();
                    let mut d0 = d0_s.clone();
                    xor_into(&mut d0, &d0_sp);
                    let mut d1 = d1_s.clone();
                    xor_into(&mut d1, &d1_sp);
                    assert_eq!(d0, d0_sum, "{}: first face not additive", ring.name());
                    assert_eq!(d1, d1_sum, "{}: second face not additive", ring.name());
                }
            }
        }
    }
}

fn apply_mod2(map: &thrfix::abgroup::GroupMap, v: &[u8]) -> Vec<u8> {
    let two = BigInt::from(2);
    let x: Vec<BigInt> = v.iter().map(|&b| BigInt::from(b)).collect();
    map.apply(&x)
        .iter()
        .map(|c| u8::try_from(c.mod_floor(&two)).unwrap())
        .collect()
}

#[test]
fn induced_maps_compose_along_a_ring_map_triple() {
    // F2 -> F2[x]/(x^2) -> F2, inclusion then evaluation at x = 0.
    let small = f2();
    let middle = trunc2(2);
    let incl = RingMap::new(
        small.clone(),
        middle.clone(),
        IntMatrix::from_rows(&[vec![1], vec![0]]),
    );
    let eval = RingMap::new(
        middle.clone(),
        small.clone(),
        IntMatrix::from_rows(&[vec![1, 0]]),
    );
    let composite = incl.then(&eval);

    let lift = induced_map(&incl).unwrap();
    let drop = induced_map(&eval).unwrap();
    let both = induced_map(&composite).unwrap();

    assert_eq!(lift.source.f2_dimension, 1);
    assert_eq!(lift.target.f2_dimension, 4);
    assert_eq!(both.source.f2_dimension, 1);
    assert_eq!(both.target.f2_dimension, 1);

    for i in 0..lift.source.f2_dimension {
        let mut e = vec![0u8; lift.source.f2_dimension];
        e[i] = 1;
        let through = apply_mod2(&drop.map, &apply_mod2(&lift.map, &e));
        let direct = apply_mod2(&both.map, &e);
        assert_eq!(through, direct);
        // The composite is the identity on F2, so the induced map is too.
        assert_eq!(direct, e);
    }
}

#[test]
fn fixed_subgroup_of_a_product_splits() {
    let cases = [
        (f2(), f2()),
        (trunc2(3), trunc2(3)),
        (cyclic_ring(4), f3()),
        (
            cyclic_ring(0),
            thrfix::ring_inv::construct::gaussian_integers(),
        ),
    ];
    for (left, right) in cases {
        let prod = product(&left, &right);
        let (fix_left, _) = left.fixed_subgroup();
        let (fix_right, _) = right.fixed_subgroup();
        let (fix_prod, _) = prod.fixed_subgroup();
        assert_eq!(
            fix_prod.canonical_form().factors,
            direct_sum(&fix_left, &fix_right).canonical_form().factors,
            "{}",
            prod.name()
        );
    }
}
