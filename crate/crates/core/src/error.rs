use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A case precondition does not hold. The message names the violated
    /// condition, e.g. "D must divide K".
    #[error("{0}")]
    InvalidParameters(String),

    /// Operands do not share the required dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A bounded search ran out of budget before reaching an answer.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// Malformed matrix text.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }

    pub(crate) fn dimension(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}
