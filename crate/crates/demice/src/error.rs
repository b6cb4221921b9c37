use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("word is not a reduced word for the long element")]
    NotLongWord,
    #[error("cone violation: {0}")]
    ConeViolation(String),
    #[error("weight {0} is not in the orbit of the shape")]
    NotInOrbit(String),
    #[error("N = {n} is too small, need at least {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("inadmissible state: {0}")]
    Inadmissible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
