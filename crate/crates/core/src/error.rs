use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("invalid block sequence: {0}")]
    InvalidBlocks(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid subdiagram: {0}")]
    InvalidSubdiagram(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("oracle indeterminate: {0}")]
    Indeterminate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
