//! Crate-wide error type.

/// Errors reported by permutation, group, and verification operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("element enumeration cap {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("operation requires a transitive group")]
    NotTransitive,

    #[error("operation requires an abelian group")]
    NotAbelian,

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("generator outside the stated parent group")]
    NotInParent,

    #[error("degree {degree} exceeds the supported limit {limit} for this operation")]
    DegreeTooLarge { degree: usize, limit: usize },

    #[error("order {order} exceeds the supported limit {limit} for this operation")]
    OrderTooLarge { order: u128, limit: u128 },

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
