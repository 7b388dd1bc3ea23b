use thiserror::Error;

/// Errors reported by every operation in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("non-finite coordinate in {0}")]
    NonFinite(&'static str),

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("no rotation in the schedule puts the centers in general position")]
    GeneralPosition,

    #[error("rank {k} out of range for {len} items")]
    Rank { k: usize, len: usize },

    #[error("inputs are not permutations of the same id set")]
    Permutation,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("coordinate {value} outside [0, 1]")]
    Domain { value: f64 },

    #[error("condition d*n <= k*b violated: {lhs} > {rhs}")]
    Condition1Violated { lhs: u128, rhs: u128 },

    #[error("condition t > 2 violated: t = {t}")]
    Condition2Violated { t: f64 },

    #[error("interval width {width} must exceed 2")]
    Width { width: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("iteration made no progress")]
    NoProgress,

    #[error("tracked level {lambda} left the valid range 1..={len}")]
    LevelOutOfRange { lambda: usize, len: usize },

    #[error("need at least 2 lines to subdivide a slab, got {0}")]
    Degenerate(usize),

    #[error("spacing {0} is below the minimum 2.2")]
    Spacing(f64),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("balls {a} and {b} overlap (center distance {distance})")]
    Disjointness { a: usize, b: usize, distance: f64 },

    #[error("input size {n} not supported: {reason}")]
    Size { n: usize, reason: &'static str },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
