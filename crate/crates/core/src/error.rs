//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NonSymmetric,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid shape: {0}")]
    BadShape(String),

    #[error("invalid chain complex: {0}")]
    ComplexInvalid(String),

    #[error("enumeration budget exceeded: {needed} elements, cap {cap}")]
    BudgetExceeded { needed: String, cap: u64 },

    #[error("root-of-unity order overflow: {needed}, cap {cap}")]
    OrderOverflow { needed: String, cap: u64 },

    #[error("not coprime: gcd({p}, {q}) > 1")]
    NotCoprime { p: i64, q: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
