use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse rational literal {0:?}")]
    Parse(String),
    #[error("inconsistent root enclosure: {0}")]
    InconsistentEnclosure(String),
    /// A symbolic derivation step did not reproduce its expected form.
    #[error("derivation mismatch: {0}")]
    DerivationMismatch(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
