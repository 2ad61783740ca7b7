use thiserror::Error;

/// Errors produced by graph construction, parsing and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::model::MAX_DIM)]
    DimensionTooLarge(usize),

    #[error("invalid vertex: expected exactly 3 non-zero coordinates, got {0}")]
    InvalidSupport(usize),

    #[error("invalid vertex: overlapping positive and negative supports")]
    OverlappingSupports,

    #[error("place {place} out of range for dimension {dim}")]
    PlaceOutOfRange { place: usize, dim: usize },

    #[error("vertex index {index} out of range for graph of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("vertices {u} and {v} are adjacent")]
    NotIndependent { u: usize, v: usize },

    #[error("graph of order {order} exceeds the brute-force limit of {limit}")]
    TooLargeForBruteForce { order: usize, limit: usize },

    #[error("dimacs parse error at line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("construction requires {required}, got n = {n}")]
    DimensionTooSmall { required: &'static str, n: usize },

    #[error("head and tail places must be disjoint and in range")]
    BadCobraLayout,

    #[error("malformed construction text at line {line}: {message}")]
    ConstructionParse { line: usize, message: String },

    #[error("k = {k} must satisfy 0 <= k < 2n = {bound}")]
    BadExclusionCount { k: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
