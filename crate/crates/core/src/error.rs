use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("map does not intertwine the actions (first failure at basis element {0})")]
    NotIntertwining(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0} requires a commutative algebra")]
    NotCommutative(&'static str),
    #[error("mismatched endpoints: {0}")]
    Endpoints(&'static str),
    #[error("differentials do not compose to zero at degree {0}")]
    NotComplex(usize),
    #[error("not a short exact sequence: {0}")]
    NotExact(String),
    #[error("class witness lacks a self-orthogonality certificate")]
    NotSelfOrthogonal,
    #[error("hypotheses not certified: {0}")]
    Hypothesis(String),
    #[error("map is not monic")]
    NotMonic,
    #[error("map is not epic")]
    NotEpic,
    #[error("lift through the precover not found")]
    NoLift,
    #[error("resolution too short: degree {needed} requested, {available} available")]
    ResolutionTooShort { needed: usize, available: usize },
    #[error("instance too large to enumerate: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
