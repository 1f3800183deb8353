//! Contract-violation errors shared by the vector/domain/rng layer.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoreError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },
    #[error("negative noise scale: sigma = {sigma}")]
    NegativeSigma { sigma: f64 },
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
}
