use thiserror::Error;

/// Errors raised by the combinatorial, graph, and spectral routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("size guard exceeded: {what} = {value} (limit {limit})")]
    SizeGuard {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("invalid letter {0:?}")]
    InvalidLetter(char),

    #[error("invalid generator {0:?}")]
    InvalidGenerator(char),

    #[error("invalid tree vertex {0:?}")]
    InvalidVertex(String),

    #[error("window too short: need {needed}, have {have}")]
    WindowTooShort { needed: usize, have: usize },

    #[error("origin {origin} outside window of length {len}")]
    OriginOutOfRange { origin: usize, len: usize },

    #[error("index {index} outside window")]
    IndexOutOfRange { index: i64 },

    #[error("illegal letter pair {0}{1}: exactly one letter must be `a`")]
    IllegalPair(char, char),

    #[error("no {n}-partition fits this window")]
    NoPartition { n: u32 },

    #[error("{count} distinct {n}-partitions fit this window")]
    AmbiguousPartition { n: u32, count: usize },

    #[error("graph is not path-shaped: {0}")]
    NotPathShaped(String),

    #[error("graphs cannot be aligned: {0}")]
    AlignmentImpossible(String),

    #[error("malformed input at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
