use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("coefficient overflow")]
    Overflow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
