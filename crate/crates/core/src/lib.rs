//! Exact computation of the component group of the involutive fixed points
//! of Hochschild-style constructions on rings with anti-involution.
//!
//! For a ring `R` with anti-involution `α` (and `G` the order-2 group acting
//! by `α` composed with the flip), the group computed here is
//!
//! ```text
//! (R^α / N(R)  ⊗_Z  R^α / N(R)) / I
//! ```
//!
//! where `R^α` is the fixed subgroup, `N(r) = r + α(r)` is the norm, and `I`
//! is the subgroup generated by `α(s)·r·s ⊗ t − r ⊗ s·t·α(s)` over all ring
//! elements `s` and all `r`, `t` in `R^α`.  This is the `pi0` of the
//! `G`-geometric fixed points of the involutive cyclic bar construction
//! on `(R, α)`.
//!
//! Module layout:
//!
//! * [`abgroup`] — integer matrices, Smith normal form, presented abelian
//!   groups, GF(2) spans.  The exact-arithmetic substrate.
//! * [`ring_inv`] — rings with anti-involution: representation, axiom
//!   validation, a zoo of constructors, fixed subgroup and norm image.
//! * [`geomfix`] — the main pipeline: norm quotient, the two face maps on
//!   the tensor square, the relation subgroup `I`, induced maps, and the
//!   product comparison map.
//! * [`oracle`] — independent brute-force checks: a simplicial model whose
//!   first homology recomputes the norm quotient, a coequalizer route to the
//!   main result, and literal enumeration of `I`.
//! * [`witt`] — length-2 Witt vectors with their ghost coordinates, for
//!   comparing against the genuine-fixed-point side.
//!
//! Everything is deterministic and allocation-only (no global state), so all
//! public functions can run concurrently.

pub mod abgroup;
pub mod error;
pub mod geomfix;
pub mod oracle;
pub mod ring_inv;
pub mod witt;

pub use error::{Error, Result};

/// Default bound on the number of ring elements brute-force enumeration is
/// willing to walk.  Overridable per call and, in the command-line tool,
/// through `--max-enum` or `THRFIX_MAX_ENUM`.
pub const DEFAULT_ENUMERATION_CAP: u64 = 4096;
