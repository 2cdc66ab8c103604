use thiserror::Error;

/// Errors produced while building period sets and words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period set must contain at least one period")]
    EmptyPeriodSet,

    #[error("invalid period {0}: periods must be positive integers")]
    InvalidPeriod(String),

    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: u64, len: u64 },

    #[error("cannot periodically extend an empty word to a positive length")]
    EmptyGenerator,

    #[error("length {n} exceeds the exhaustive-search bound {bound}")]
    TooLargeForExhaustive { n: u64, bound: u64 },

    #[error("arithmetic overflow")]
    ArithmeticOverflow,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
