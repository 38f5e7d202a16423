use thiserror::Error;

/// Errors raised by the construction and lattice pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("depth overflow: module needs lowering depth {needed}, cutoff is {cutoff}")]
    DepthOverflow { needed: usize, cutoff: usize },
    #[error("module of dimension {dim} exceeds the dimension cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("enumeration needs {needed} subspaces, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("operator {operator} is not p-integral on this lattice")]
    NotIntegral { operator: String },
    #[error("modules are defined over different root systems")]
    MismatchedAlgebra,
    #[error("cannot spin the zero vector")]
    ZeroVector,
    #[error("torus action is not diagonal: {0}")]
    NonDiagonalizable(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
