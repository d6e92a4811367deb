//! Shared ring corpus for the integration tests.
//!
//! Every finite ring here has order at most 256, so the whole list is
//! eligible for the exhaustive enumeration method and for Witt tabulation.

#![allow(dead_code)]

use num_bigint::BigInt;
use thrfix::ring_inv::construct::{
    cyclic_group_table, cyclic_ring, finite_field, gaussian_integers, group_ring, matrix_ring,
    product, quaternion_ring, truncated_polynomial, FieldInvolution,
};
use thrfix::ring_inv::RingWithInvolution;

pub fn f2() -> RingWithInvolution {
    finite_field(2, 1, FieldInvolution::Identity).unwrap()
}

pub fn f3() -> RingWithInvolution {
    finite_field(3, 1, FieldInvolution::Identity).unwrap()
}

pub fn f5() -> RingWithInvolution {
    finite_field(5, 1, FieldInvolution::Identity).unwrap()
}

pub fn f4_frobenius() -> RingWithInvolution {
    finite_field(2, 2, FieldInvolution::FrobeniusHalf).unwrap()
}

pub fn f9_frobenius() -> RingWithInvolution {
    finite_field(3, 2, FieldInvolution::FrobeniusHalf).unwrap()
}

/// `F2[x]/(x^k)` with the identity involution.
pub fn trunc2(k: usize) -> RingWithInvolution {
    truncated_polynomial(&f2(), k)
}

/// `F2[C3]` with the group-inversion involution.
pub fn group_ring_c3() -> RingWithInvolution {
    group_ring(&f2(), &cyclic_group_table(3)).unwrap()
}

/// All finite corpus rings.
pub fn finite_corpus() -> Vec<RingWithInvolution> {
    vec![
        cyclic_ring(2),
        cyclic_ring(4),
        cyclic_ring(8),
        cyclic_ring(16),
        cyclic_ring(6),
        cyclic_ring(9),
        cyclic_ring(25),
        f3(),
        f5(),
        finite_field(2, 2, FieldInvolution::Identity).unwrap(),
        f4_frobenius(),
        f9_frobenius(),
        trunc2(2),
        trunc2(3),
        trunc2(4),
        truncated_polynomial(&cyclic_ring(4), 2),
        product(&f2(), &f2()),
        product(&trunc2(3), &trunc2(3)),
        matrix_ring(&f2(), 2),
        matrix_ring(&f3(), 2),
        group_ring_c3(),
        quaternion_ring(2),
        quaternion_ring(3),
    ]
}

/// Corpus rings with an infinite additive group.
pub fn infinite_corpus() -> Vec<RingWithInvolution> {
    vec![cyclic_ring(0), gaussian_integers(), quaternion_ring(0)]
}

pub fn full_corpus() -> Vec<RingWithInvolution> {
    let mut rings = finite_corpus();
    rings.extend(infinite_corpus());
    rings
}

pub fn factors(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
