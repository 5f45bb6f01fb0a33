use thiserror::Error;

pub type Result<T, E = self::Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("level {level} is not a GF({field}) symbol")]
    InvalidLevel { field: u8, level: u8 },

    #[error("cannot parse `{0}` as a symbol")]
    ParseSymbol(String),

    #[error("not a codeword: forbidden pattern at position {position}")]
    ForbiddenPattern { position: usize },

    #[error("expected length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("codeword length m = {m} is not supported ({reason})")]
    UnsupportedLength { m: usize, reason: &'static str },

    #[error("index {index} outside the self-clocked range [1, N(m) - 2]")]
    IndexOutOfRange { index: String },

    #[error("index {index} outside the message range [1, 2^s_c]")]
    IndexOutOfMessageRange { index: String },

    #[error("codeword is all-{0}: removed for self-clocking")]
    NotClocked(String),

    #[error("stream of {len} symbols does not split into frames of {frame}")]
    Framing { len: usize, frame: usize },

    #[error("{tracks} tracks cannot hold {groups} groups of 3")]
    TrackCountMismatch { tracks: usize, groups: usize },

    #[error("malformed grid: {0}")]
    GridShape(String),

    #[error("matrix rejected: {0}")]
    BadMatrix(String),

    #[error("power iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("m = {m} outside the brute-force range [{min}, {max}]")]
    OracleRange { m: usize, min: usize, max: usize },

    #[error("word is not in the code")]
    NotInCode,
}
