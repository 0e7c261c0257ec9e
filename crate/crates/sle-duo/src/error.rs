use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SleError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numerical error: {what} (achieved {achieved:.3e})")]
    Numerical { what: String, achieved: f64 },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("statistical quality error: {0}")]
    Statistical(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, SleError>;

impl SleError {
    pub(crate) fn numerical(what: impl Into<String>, achieved: f64) -> Self {
        SleError::Numerical { what: what.into(), achieved }
    }
}
