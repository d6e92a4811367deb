//! Exact linear algebra over the integers and finitely generated abelian
//! groups: matrices, Smith normal form, presentations, homomorphisms, and a
//! small GF(2) toolkit.
//!
//! All arithmetic is arbitrary precision; nothing in this module (or the
//! crate) uses floating point.

pub mod f2;
mod map;
mod matrix;
mod presentation;
mod snf;

pub use f2::{is_zero_vec, xor_into, F2Quotient, F2Span, F2Vec};
pub use map::{
    direct_sum, quotient_by_subgroup, solve_membership, tensor_index, tensor_product, GroupMap,
};
pub use matrix::IntMatrix;
pub use presentation::{kernel_lattice, AbelianPresentation, CanonicalForm, LatticeSolver};
pub use snf::{hermite_row_compress, smith_normal_form, SmithNormalForm};
