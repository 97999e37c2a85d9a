use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    UnknownSymbol { symbol: u8, position: usize },

    #[error("symbol {0:?} appears twice in the alphabet declaration")]
    DuplicateSymbol(u8),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("period must have norm at least 1")]
    ZeroNorm,

    #[error("cannot shrink an empty window")]
    EmptyWindow,

    #[error("scanner already finished")]
    AlreadyFinished,

    #[error("fragment [{start}..{end}] out of range for word of length {len}")]
    InvalidRange { start: usize, end: usize, len: usize },

    #[error("invalid period vector {0:?}: expected comma-separated counts")]
    ParsePeriod(String),

    #[error("unsupported naming mode {0:?}")]
    UnsupportedMode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
