//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator {0:?} (expected r, s or t)")]
    UnknownGenerator(char),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("ball element cap ({cap}) exceeded")]
    BallCapExceeded { cap: usize },

    #[error("word length cap ({cap}) exceeded")]
    WordTooLong { cap: usize },

    #[error("KL table scope exceeded: computation needs length {needed}, scope is {scope}")]
    ScopeExceeded { needed: usize, scope: usize },

    #[error("config {config}: {source}")]
    InConfig { config: String, source: Box<Error> },

    #[error("KL defect resolution failed at {element}: non-canceling constant term {term} (internal invariant violation)")]
    DefectResolution { element: String, term: String },
}
