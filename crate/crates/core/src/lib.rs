//! Exact relative homological algebra for finite-dimensional algebras over prime fields.
//!
//! Modules are explicit representations; every answer is computed by exact linear algebra
//! over `F_p`. Homological dimensions are reported up to a cutoff.

pub mod algebra;
pub mod corpus;
pub mod diagnostics;
mod dim;
mod error;
pub mod hom;
pub mod linalg;
pub mod relative;
pub mod resolution;

pub use algebra::{Algebra, Module, ModuleMap, ShortExactSequence};
pub use dim::{cutoff_from_env, Dim, DEFAULT_CUTOFF};
pub use error::{Error, Result};
pub use hom::{HomSpace, TensorModule};
pub use linalg::{FMatrix, FieldSpec, Subspace};
pub use relative::ApproxClass;
pub use resolution::{ChainComplex, Resolution};
