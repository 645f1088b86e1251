use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the range where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A 01-word that does not encode a partition.
    #[error("malformed boundary sequence: {0}")]
    Codec(String),
    /// An input violates the operation's precondition (e.g. a labeled
    /// partition that is not in the required set).
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// Something that cannot happen if the implementation is correct.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
