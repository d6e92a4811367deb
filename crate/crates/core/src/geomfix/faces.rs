//! The two face maps `d0, d1 : Q ⊗ R/2R ⊗ Q → Q ⊗ Q` and the relation
//! subgroup they span.
//!
//! On a generator `r ⊗ s ⊗ t` the maps are
//!
//! ```text
//!     d0(r ⊗ s ⊗ t) = α(s)·r·s ⊗ t,      d1(r ⊗ s ⊗ t) = r ⊗ s·t·α(s),
//! ```
//!
//! and the relation subgroup is the span of all differences `d0 - d1`.  Both
//! maps are additive in the middle slot modulo 2 (the cross terms are norms),
//! so columns over basis triples determine them; middle basis elements of odd
//! additive order contribute nothing and are dropped.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::abgroup::{tensor_product, AbelianPresentation, F2Span, F2Vec, GroupMap, IntMatrix};
use crate::error::{Error, Result};
use crate::geomfix::norm::NormQuotient;
use crate::ring_inv::RingElement;

/// Number of deterministic lift perturbations used to confirm that the face
/// matrices do not depend on the chosen lifts.
const PERTURBATION_EVENTS: usize = 20;

/// The face maps assembled as integer matrices between tensor presentations.
#[derive(Clone, Debug)]
pub struct FaceMaps {
    /// `Q ⊗ R/2R ⊗ Q`, generated by triples `(a, s, c)` in row-major order:
    /// index `(a * middle_len + s) * dim + c`.
    pub triple: AbelianPresentation,
    /// `Q ⊗ Q`, generated by pairs `(a, c)` at index `a * dim + c`.
    pub square: AbelianPresentation,
    pub d0: GroupMap,
    pub d1: GroupMap,
    /// Ring basis indices kept in the middle factor (even or infinite
    /// additive order).
    pub middle: Vec<usize>,
}

/// How to compute the relation subgroup.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationStrategy {
    /// Span the face-map difference columns over basis triples.
    Linear,
    /// Enumerate every ring element `s` and every pair of lifts.
    Enumerate,
}

/// Evaluate both face maps on concrete elements: `r` and `t` must be fixed,
/// `s` is arbitrary.  Returns the classes of `α(s)·r·s ⊗ t` and
/// `r ⊗ s·t·α(s)` in `Q ⊗ Q` as mod-2 vectors of length `dim²`.
pub fn face_values_on_elements(
    nq: &NormQuotient,
    r: &RingElement,
    s: &RingElement,
    t: &RingElement,
) -> Result<(F2Vec, F2Vec)> {
    let ring = nq.ring();
    let alpha_s = ring.invol(s);
    let left = nq.class_of(&ring.mul(&ring.mul(&alpha_s, r), s))?;
    let right = nq.class_of(&ring.mul(&ring.mul(s, t), &alpha_s))?;
    let r_class = nq.class_of(r)?;
    let t_class = nq.class_of(t)?;
    Ok((outer(&left, &t_class), outer(&r_class, &right)))
}

/// Kronecker product of two mod-2 class vectors, flattened row-major.
pub fn outer(u: &F2Vec, v: &F2Vec) -> F2Vec {
    let mut out = vec![0u8; u.len() * v.len()];
    for (i, &a) in u.iter().enumerate() {
        if a == 1 {
            for (j, &b) in v.iter().enumerate() {
                if b == 1 {
                    out[i * v.len() + j] = 1;
                }
            }
        }
    }
    out
}

/// Build the face maps over basis triples and verify, by perturbing lifts
/// and middle representatives, that the matrices are independent of the
/// choices made.
pub fn face_maps_on_pi0(nq: &NormQuotient) -> Result<FaceMaps> {
    let ring = nq.ring();
    let dim = nq.dim();
    let two = BigInt::from(2);

    let middle: Vec<usize> = (0..ring.rank())
        .filter(|&i| {
            let d = &ring.orders()[i];
            d.is_zero() || d.is_multiple_of(&two)
        })
        .collect();
    let m = middle.len();

    let q2 = AbelianPresentation::from_orders(&vec![two.clone(); dim]);
    let mid2 = AbelianPresentation::from_orders(&vec![two.clone(); m]);
    let triple = tensor_product(&tensor_product(&q2, &mid2), &q2);
    let square = tensor_product(&q2, &q2);

    let col_count = dim * m * dim;
    let mut d0m = IntMatrix::zeros(dim * dim, col_count);
    let mut d1m = IntMatrix::zeros(dim * dim, col_count);

    let column = |r: &RingElement, s_idx: usize, t: &RingElement| -> Result<(F2Vec, F2Vec)> {
        face_values_on_elements(nq, r, &ring.basis_element(middle[s_idx]), t)
    };

    for a in 0..dim {
        for s in 0..m {
            for c in 0..dim {
                let (v0, v1) = column(&nq.lifts()[a], s, &nq.lifts()[c])?;
                let j = (a * m + s) * dim + c;
                write_bits(&mut d0m, j, &v0);
                write_bits(&mut d1m, j, &v1);
            }
        }
    }

    // Lift-independence check: replay a fixed schedule of perturbations
    // (adding a norm to a lift, or twice a basis element to a middle
    // representative) and confirm every affected column is unchanged.
    if dim > 0 && m > 0 {
        for event in 0..PERTURBATION_EVENTS {
            let slot = event % 3;
            let dir = ring.basis_element(event % ring.rank());
            match slot {
                0 => {
                    let a = (event / 3) % dim;
                    let r = ring.add(&nq.lifts()[a], &ring.norm(&dir));
                    for s in 0..m {
                        for c in 0..dim {
                            let (v0, v1) = column(&r, s, &nq.lifts()[c])?;
                            check_column(&d0m, &d1m, (a * m + s) * dim + c, &v0, &v1)?;
                        }
                    }
                }
                1 => {
                    let s = (event / 3) % m;
                    let rep =
                        ring.add(&ring.basis_element(middle[s]), &ring.scalar_mul(&two, &dir));
                    for a in 0..dim {
                        for c in 0..dim {
                            let (v0, v1) =
                                face_values_on_elements(nq, &nq.lifts()[a], &rep, &nq.lifts()[c])?;
                            check_column(&d0m, &d1m, (a * m + s) * dim + c, &v0, &v1)?;
                        }
                    }
                }
                _ => {
                    let c = (event / 3) % dim;
                    let t = ring.add(&nq.lifts()[c], &ring.norm(&dir));
                    for a in 0..dim {
                        for s in 0..m {
                            let (v0, v1) = column(&nq.lifts()[a], s, &t)?;
                            check_column(&d0m, &d1m, (a * m + s) * dim + c, &v0, &v1)?;
                        }
                    }
                }
            }
        }
    }

    Ok(FaceMaps {
        d0: GroupMap::new(triple.clone(), square.clone(), d0m),
        d1: GroupMap::new(triple.clone(), square.clone(), d1m),
        triple,
        square,
        middle,
    })
}

fn write_bits(m: &mut IntMatrix, col: usize, bits: &F2Vec) {
    for (row, &b) in bits.iter().enumerate() {
        if b == 1 {
            m[(row, col)] = BigInt::from(1);
        }
    }
}

fn check_column(
    d0m: &IntMatrix,
    d1m: &IntMatrix,
    col: usize,
    v0: &F2Vec,
    v1: &F2Vec,
) -> Result<()> {
    let stored = |m: &IntMatrix| -> F2Vec {
        let two = BigInt::from(2);
        (0..m.rows())
            .map(|r| u8::try_from(m[(r, col)].mod_floor(&two)).unwrap())
            .collect()
    };
    if stored(d0m) != *v0 || stored(d1m) != *v1 {
        return Err(Error::CrossCheck(format!(
            "face map column {} changed under a lift perturbation",
            col
        )));
    }
    Ok(())
}

impl FaceMaps {
    /// Columns of `d0 - d1` as mod-2 vectors.
    pub fn difference_columns(&self) -> Vec<F2Vec> {
        let rows = self.square.num_generators();
        let cols = self.d0.matrix.cols();
        let two = BigInt::from(2);
        (0..cols)
            .map(|j| {
                (0..rows)
                    .map(|r| {
                        let d = &self.d0.matrix[(r, j)] - &self.d1.matrix[(r, j)];
                        u8::try_from(d.mod_floor(&two)).unwrap()
                    })
                    .collect()
            })
            .collect()
    }
}

/// The subgroup `I ⊆ Q ⊗ Q` spanned by all differences `d0 - d1`.
///
/// `Linear` spans the face-matrix columns; `Enumerate` walks every ring
/// element (bounded by `max_enum`) and is the definition-literal ground truth.
pub fn relation_subgroup(
    nq: &NormQuotient,
    strategy: RelationStrategy,
    max_enum: u64,
) -> Result<F2Span> {
    match strategy {
        RelationStrategy::Linear => {
            let faces = face_maps_on_pi0(nq)?;
            let mut span = F2Span::new(nq.dim() * nq.dim());
            for col in faces.difference_columns() {
                span.insert(col);
            }
            Ok(span)
        }
        RelationStrategy::Enumerate => crate::oracle::brute_force_relation_subgroup(nq, max_enum),
    }
}
