use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid character {found:?} at position {position}; expected '0' or '1'")]
    InvalidCharacter { position: usize, found: char },

    #[error("sequence length {0} exceeds the 64-bit limit")]
    TooLong(usize),

    #[error("index range [{i}, {j}] is invalid for a sequence of length {len}")]
    IndexOutOfRange { i: usize, j: usize, len: usize },

    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("prefix and suffix restrictions ({prefix} + {suffix}) exceed the subsequence length {available}")]
    RestrictionTooLong { prefix: usize, suffix: usize, available: usize },

    #[error("sequences are identical; no differing middle block")]
    IdenticalSequences,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
