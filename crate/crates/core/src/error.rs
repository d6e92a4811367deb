//! Error type shared across the crate.
//!
//! Two failure classes matter to callers:
//!
//! * [`Error::Input`] — the request cannot be served for this input
//!   (infinite ring where enumeration is required, non-commutative ring for
//!   Witt vectors, enumeration cap exceeded, malformed element).
//! * [`Error::CrossCheck`] — independent computations of the same value
//!   disagreed, or an internal well-definedness guard failed.  This always
//!   indicates a bug and is never swallowed.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The input is outside the supported domain of the requested operation.
    #[error("unsupported input: {0}")]
    Input(String),

    /// Two independent computation paths disagreed (a correctness bug).
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    /// Process exit code for this failure class: 2 for unsupported input,
    /// 3 for a cross-check mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::CrossCheck(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
