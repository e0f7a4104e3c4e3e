use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 or edge-list input; `offset` is the byte offset of
    /// the first offending byte.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// An operation that requires a connected graph got a disconnected one.
    #[error("graph is disconnected")]
    Disconnected,

    /// The single-vertex graph has no spanning-tree leaf statistics.
    #[error("operation undefined for the single-vertex graph")]
    TrivialGraph,

    /// Parameter out of the supported range.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Structurally invalid argument (bad coloring dimensions, bad tree
    /// family, bad generator parameters, ...).
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { offset, msg: msg.into() }
    }
}
