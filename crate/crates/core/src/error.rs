//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation (bad weight,
    /// non-nilpotent matrix, element not invariant under the reduction, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Structured data that failed to parse or validate.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
