use thiserror::Error;

/// Errors surfaced by the library. The CLI maps `InvalidTriangle` and
/// `Parse` to exit code 1 and `Inconsistent` to exit code 2.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TaxiError {
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, TaxiError>;
