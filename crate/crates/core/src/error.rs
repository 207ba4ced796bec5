use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("malformed permutation at tet {tet} face {face}")]
    MalformedPermutation { tet: usize, face: usize },
    #[error("gluing involution violated at tet {tet} face {face}")]
    Involution { tet: usize, face: usize },
    #[error("invalid triangulation: {0}")]
    Invalid(String),
    #[error("not an orbifold: {0}")]
    NotAnOrbifold(String),
    #[error("invalid cone order {0}")]
    InvalidOrder(u32),
    #[error("invalid order triple ({0},{1},{2})")]
    InvalidOrders(u32, u32, u32),
    #[error("invalid normal coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("enumeration bound exceeded after {} solutions", partial.len())]
    BoundExceeded { partial: Vec<Vec<u64>> },
    #[error("surface is not separating")]
    NotSeparating,
    #[error("orders do not match: {0}")]
    OrderMismatch(String),
    #[error("cannot cap boundary component: {0}")]
    CannotCap(String),
    #[error("expression contains vertex sums; use estimate_bounds")]
    UseEstimate,
    #[error("splitting incomplete: {0}")]
    Incomplete(String),
    #[error("rejected: {0}")]
    Rejected(String),
}

pub type Result<T> = std::result::Result<T, OrbError>;
