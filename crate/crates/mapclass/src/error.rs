//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by ring, matrix, word and representation operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is singular")]
    Singular,

    #[error("inverse has non-polynomial entries (input is not a unit of the matrix ring)")]
    NonPolynomialInverse,

    #[error("cannot raise non-unit monomial to a negative power")]
    NonUnitPower,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator index {index} out of range for {context}")]
    IndexOutOfRange { index: usize, context: String },

    #[error("context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),

    #[error("duplicate block placement at ({0}, {1})")]
    DuplicateBlock(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
