use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("values are not non-decreasing at position {0}")]
    NotNonDecreasing(usize),
    #[error("f({0}) = {1} is below the diagonal")]
    BelowDiagonal(usize, usize),
    #[error("f({0}) = {1} exceeds n = {2}")]
    OutOfRange(usize, usize, usize),
    #[error("n = {0} is larger than the supported maximum {1}")]
    TooLarge(usize, usize),
    #[error("label {0} is outside 1..={1}")]
    LabelOutOfRange(usize, usize),
    #[error("expected i < j, got ({0}, {1})")]
    NotIncreasing(usize, usize),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expected an expansion in basis {expected}, got {found}")]
    WrongBasis { expected: char, found: char },
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<i64>),
    #[error("term of weight {found} added to an expansion of weight {expected}")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("bounce number {0} is larger than 3")]
    BounceTooLarge(usize),
    #[error("bounce number is {found}, expected {expected}")]
    BounceMismatch { expected: String, found: usize },
    #[error("partition {mu:?} is in case {found}, expected {expected}")]
    CaseMismatch { mu: Vec<u32>, expected: String, found: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cannot move {width} entries out of row {row}")]
    MoveUnavailable { row: usize, width: usize },
    #[error("resource budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
