//! Exact dense linear algebra over a prime field.

mod field;
mod matrix;
mod subspace;

pub use field::{FieldSpec, MAX_PRIME};
pub use matrix::{FMatrix, Rref};
pub use subspace::{EchelonBuilder, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime in 2..=97")]
    NotPrime(u32),
    #[error("expected {}x{} entries, found {found}", expected.0, expected.1)]
    Shape { expected: (usize, usize), found: usize },
    #[error("entry {entry} is not reduced mod {p}")]
    EntryOutOfRange { entry: u32, p: u32 },
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
}
