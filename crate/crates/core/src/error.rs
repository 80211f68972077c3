use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("matrix is singular")]
    Singular,
    #[error("unsupported cochain degree {0}")]
    Degree(usize),
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("{0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
