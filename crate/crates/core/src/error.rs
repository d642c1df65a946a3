use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol {symbol:?} at position {position} is not in the binary alphabet")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("non-ASCII input at byte {position}")]
    NonAscii { position: usize },

    /// A brute-force oracle was asked to work beyond the size it is meant for.
    #[error("{what}: length {requested} exceeds the oracle bound {limit}")]
    LengthGuardExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("{what}: {requested} exceeds the bound {limit}")]
    GuardExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("verification failed: {0}")]
    Verification(String),
}
