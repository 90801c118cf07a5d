use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of a mathematical function.
    #[error("domain error: {0}")]
    Domain(String),
    /// A caller broke a precondition of an operation.
    #[error("contract violation: {0}")]
    Contract(String),
    /// A computation contradicted a fact the construction relies on. This
    /// always indicates a bug in a construction, never a legitimate input.
    #[error("theory violation: {0}")]
    TheoryViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource guard exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn theory(msg: impl Into<String>) -> Self {
        Error::TheoryViolation(msg.into())
    }
}
