//! Error types shared across the engine.

use crate::scalar::Field;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("mixed fields in one matrix")]
    MixedFields,
}

/// Construction-time failures for algebras, couples and pairings.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("operation requires a finite-dimensional backend")]
    RequiresFinite,
    #[error("operation on a lazy backend requires a degree bound")]
    NeedsDegreeBound,
    #[error("component dimension {dim} exceeds resource cap {cap}")]
    ResourceCap { dim: usize, cap: usize },
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}
