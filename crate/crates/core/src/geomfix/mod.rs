//! Component group of the involutive geometric fixed points.
//!
//! The pipeline computes `(Q ⊗ Q)/I` where `Q = R^α/N(R)` is the norm
//! quotient ([`norm`]) and `I` is the relation subgroup spanned by the two
//! face maps ([`faces`]).  Three methods compute the same group along
//! genuinely different routes and are checked against each other:
//!
//! * `linear` spans the face-map difference over basis triples,
//! * `enumerate` walks every ring element (finite rings only),
//! * `coequalizer` takes an integral cokernel without mod-2 shortcuts.

pub mod faces;
mod functor;
pub mod norm;

pub use faces::{
    face_maps_on_pi0, face_values_on_elements, outer, relation_subgroup, FaceMaps, RelationStrategy,
};
pub use functor::{induced_map, product_defect, InducedPi0Map, ProductDefectReport};
pub use norm::{norm_quotient, NormQuotient};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::abgroup::{F2Quotient, F2Span, F2Vec};
use crate::error::{Error, Result};
use crate::ring_inv::{RingElement, RingWithInvolution};
use crate::DEFAULT_ENUMERATION_CAP;

/// Computation route for the component group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Linear,
    Enumerate,
    Coequalizer,
    /// Every applicable method, cross-checked against each other.
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Linear => "linear",
            Method::Enumerate => "enumerate",
            Method::Coequalizer => "coequalizer",
            Method::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(Method::Linear),
            "enumerate" => Ok(Method::Enumerate),
            "coequalizer" => Ok(Method::Coequalizer),
            "all" => Ok(Method::All),
            other => Err(format!(
                "unknown method {:?}; expected linear, enumerate, coequalizer, or all",
                other
            )),
        }
    }
}

/// An element of `(Q ⊗ Q)/I` written as a sum of pure tensors of ring
/// elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorClass {
    pub terms: Vec<(RingElement, RingElement)>,
}

impl TensorClass {
    /// Human-readable rendering using the ring's element display.
    pub fn describe(&self, ring: &RingWithInvolution) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(r, t)| {
                format!(
                    "({}) (x) ({})",
                    ring.display_element(r),
                    ring.display_element(t)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Result of a component-group computation.
#[derive(Clone, Debug)]
pub struct GeomFixResult {
    pub ring_name: String,
    pub method: Method,
    /// Invariant factors of the norm quotient `Q`.
    pub q_invariant_factors: Vec<BigInt>,
    /// Invariant factors of `(Q ⊗ Q)/I`.
    pub invariant_factors: Vec<BigInt>,
    /// F2-dimension of `(Q ⊗ Q)/I`.
    pub f2_dimension: usize,
    /// Pure-tensor representatives of a basis.
    pub witnesses: Vec<TensorClass>,
    /// Every method that ran, with the invariant factors it produced.
    pub cross_check: Vec<(Method, Vec<BigInt>)>,
}

/// Shared linear-route state: the norm quotient, the relation span, and the
/// quotient coordinates on `(Q ⊗ Q)/I`.
#[derive(Clone, Debug)]
pub(crate) struct Pi0Data {
    pub nq: NormQuotient,
    pub quo: F2Quotient,
}

pub(crate) fn pi0_data(
    ring: &RingWithInvolution,
    strategy: RelationStrategy,
    cap: u64,
) -> Result<Pi0Data> {
    let nq = norm_quotient(ring)?;
    let span = relation_subgroup(&nq, strategy, cap)?;
    Ok(Pi0Data {
        nq,
        quo: F2Quotient::new(span),
    })
}

impl Pi0Data {
    pub fn dim(&self) -> usize {
        self.quo.dim()
    }

    /// Greedy basis of pure tensors: walk lift pairs in lexicographic order
    /// and keep those whose classes are independent.
    fn pure_tensor_witnesses(&self) -> Result<Vec<TensorClass>> {
        let q = self.nq.dim();
        let mut seen = F2Span::new(self.quo.dim());
        let mut witnesses = Vec::new();
        for a in 0..q {
            for c in 0..q {
                let mut v = vec![0u8; q * q];
                v[a * q + c] = 1;
                if seen.insert(self.quo.project(&v)) {
                    witnesses.push(TensorClass {
                        terms: vec![(self.nq.lifts()[a].clone(), self.nq.lifts()[c].clone())],
                    });
                }
            }
        }
        if witnesses.len() != self.quo.dim() {
            return Err(Error::CrossCheck(format!(
                "pure tensors span only {} of {} dimensions",
                witnesses.len(),
                self.quo.dim()
            )));
        }
        Ok(witnesses)
    }

    fn to_result(&self, method: Method) -> Result<GeomFixResult> {
        let witnesses = self.pure_tensor_witnesses()?;
        let dim = self.quo.dim();
        let result = GeomFixResult {
            ring_name: self.nq.ring().name().to_string(),
            method,
            q_invariant_factors: self.nq.invariant_factors(),
            invariant_factors: vec![BigInt::from(2); dim],
            f2_dimension: dim,
            witnesses,
            cross_check: vec![(method, vec![BigInt::from(2); dim])],
        };
        confirm_result_invariants(self.nq.ring(), &result)?;
        Ok(result)
    }

    /// Class of a pure tensor of fixed ring elements, in quotient
    /// coordinates.
    pub fn class_of_tensor(&self, r: &RingElement, t: &RingElement) -> Result<F2Vec> {
        let rc = self.nq.class_of(r)?;
        let tc = self.nq.class_of(t)?;
        Ok(self.quo.project(&outer(&rc, &tc)))
    }

    /// Rewrite a quotient-coordinate vector as a sum of pure tensors of
    /// lifts.
    pub fn tensor_class(&self, v: &F2Vec) -> TensorClass {
        let q = self.nq.dim();
        let ambient = self.quo.lift(v);
        let mut terms = Vec::new();
        for a in 0..q {
            for c in 0..q {
                if ambient[a * q + c] == 1 {
                    terms.push((self.nq.lifts()[a].clone(), self.nq.lifts()[c].clone()));
                }
            }
        }
        TensorClass { terms }
    }
}

/// Invariants every result must satisfy: an elementary abelian 2-group, and
/// trivial whenever 2 is invertible in the ring.
pub(crate) fn confirm_result_invariants(
    ring: &RingWithInvolution,
    result: &GeomFixResult,
) -> Result<()> {
    let two = BigInt::from(2);
    if result.invariant_factors.iter().any(|d| *d != two) {
        return Err(Error::CrossCheck(format!(
            "component group of {} must be elementary abelian of exponent 2, got {:?}",
            ring.name(),
            result.invariant_factors
        )));
    }
    if ring.two_invertible() && result.f2_dimension != 0 {
        return Err(Error::CrossCheck(format!(
            "2 is invertible in {} but the component group has dimension {}",
            ring.name(),
            result.f2_dimension
        )));
    }
    Ok(())
}

/// Compute the component group with the default enumeration bound.
pub fn pi0_geometric_fixed_points(
    ring: &RingWithInvolution,
    method: Method,
) -> Result<GeomFixResult> {
    pi0_with_enumeration_cap(ring, method, DEFAULT_ENUMERATION_CAP)
}

/// Compute the component group, bounding brute-force enumeration by `cap`.
///
/// `Method::All` runs the linear and coequalizer routes always, adds the
/// enumeration route when the ring is small enough, and fails with a
/// cross-check error unless all routes agree.
pub fn pi0_with_enumeration_cap(
    ring: &RingWithInvolution,
    method: Method,
    cap: u64,
) -> Result<GeomFixResult> {
    match method {
        Method::Linear => pi0_data(ring, RelationStrategy::Linear, cap)?.to_result(method),
        Method::Enumerate => pi0_data(ring, RelationStrategy::Enumerate, cap)?.to_result(method),
        Method::Coequalizer => {
            let result = crate::oracle::coequalizer_pi0(ring)?;
            confirm_result_invariants(ring, &result)?;
            Ok(result)
        }
        Method::All => {
            let linear =
                pi0_data(ring, RelationStrategy::Linear, cap)?.to_result(Method::Linear)?;
            let coeq = crate::oracle::coequalizer_pi0(ring)?;
            confirm_result_invariants(ring, &coeq)?;
            let mut runs = vec![linear.clone(), coeq];
            let enumerable = matches!(ring.ring_order(), Some(ref o) if *o <= BigInt::from(cap));
            if enumerable {
                runs.push(
                    pi0_data(ring, RelationStrategy::Enumerate, cap)?
                        .to_result(Method::Enumerate)?,
                );
            }
            let mut cross_check = Vec::new();
            for run in &runs {
                if run.invariant_factors != linear.invariant_factors {
                    return Err(Error::CrossCheck(format!(
                        "methods disagree on {}: {} gives {:?}, {} gives {:?}",
                        ring.name(),
                        linear.method,
                        linear.invariant_factors,
                        run.method,
                        run.invariant_factors
                    )));
                }
                cross_check.push((run.method, run.invariant_factors.clone()));
            }
            Ok(GeomFixResult {
                method: Method::All,
                cross_check,
                ..linear
            })
        }
    }
}
