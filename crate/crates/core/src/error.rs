use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("color mismatch: {0}")]
    ColorMismatch(String),
    #[error("unsupported flavor: {0}")]
    UnsupportedFlavor(String),
    #[error("unsupported operad: {0}")]
    UnsupportedOperad(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("series has a constant term")]
    ConstantTerm,
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("variable kind mismatch")]
    KindMismatch,
    #[error("key of size {size} exceeds truncation degree {degree}")]
    OutOfRange { size: usize, degree: usize },
    #[error("truncation degree {degree} is smaller than generator size {size}")]
    TruncationTooSmall { size: usize, degree: usize },
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("malformed category: {0}")]
    MalformedCategory(String),
    #[error("malformed forest: {0}")]
    MalformedForest(String),
    #[error("not a surjection: {0}")]
    NotSurjective(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
