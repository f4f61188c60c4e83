use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("nilpotent-only unit: constant term {0} is not invertible")]
    NotInvertible(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("group of size {size} exceeds cap {cap}")]
    GroupTooLarge { size: u128, cap: u128 },
    #[error("splitting failure: {0}")]
    Splitting(String),
    #[error("not a group element: {0}")]
    NotInGroup(String),
    #[error("space {space} unavailable: {reason}")]
    SpaceUnavailable { space: &'static str, reason: String },
    #[error("input is not narrow: {0}")]
    NotNarrow(String),
    #[error("character weight {k} outside required range [{lo}, {hi}]")]
    OutOfRange { k: i64, lo: i64, hi: i64 },
    #[error("weighted degree {degree} exceeds enumeration cap {cap}")]
    EnumerationCap { degree: i64, cap: i64 },
    #[error("space mismatch: expected {expected}, found {found}")]
    SpaceMismatch { expected: String, found: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
