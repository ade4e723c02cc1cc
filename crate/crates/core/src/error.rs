use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller passed arguments that violate an operation's contract.
    #[error("usage error: {0}")]
    Usage(String),
    /// Arguments were well-formed but the result leaves the valid domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Structural validation of an input object (fan, polytope) failed.
    #[error("validation error: {0}")]
    Validation(String),
    /// The input is outside what an operation supports; reported, not guessed.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A textual input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
