use thiserror::Error;

use crate::field::FieldDescriptor;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid modulus {p}: {reason}")]
    InvalidModulus { p: u32, reason: &'static str },

    #[error("invalid scalar: {0}")]
    Scalar(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldDescriptor, right: FieldDescriptor },

    #[error("subspace is not a {sidedness} ideal: {detail}")]
    NotAnIdeal { sidedness: &'static str, detail: String },

    #[error("subspace is not closed under multiplication: {0}")]
    NotASubalgebra(String),

    #[error("invalid Gelfand-Dorfman input: {0}")]
    InvalidGdInput(String),

    #[error("{what} exceeds cap: {value} > {limit}")]
    CapExceeded { what: &'static str, value: u64, limit: u64 },

    #[error("operation requires a finite field, got {0}")]
    NeedsFiniteField(FieldDescriptor),

    #[error("malformed input: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
