use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle refused: enumeration space 2^{bits} exceeds limit {limit}")]
    OracleOverflow { bits: usize, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
