use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("algebra tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0} is not available for type {1}")]
    Unavailable(String, String),
    #[error("unsupported rank {n} for type {family}")]
    UnsupportedRank { family: String, n: usize },
    #[error("{0} is not an element of {1}")]
    NotMember(String, String),
    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),
    #[error("{msg} at offset {offset}")]
    Parse { offset: usize, msg: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
