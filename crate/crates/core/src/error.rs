//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Matrix shape mismatch (e.g. determinant of a non-square matrix).
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Input admissible but too large for an exhaustive routine.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Two routes that must agree disagreed. Always a bug.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
