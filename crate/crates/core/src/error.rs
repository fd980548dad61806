use std::path::PathBuf;

use crate::word::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid word {input:?}: {reason}")]
    InvalidWord { input: String, reason: &'static str },

    #[error("pattern code {0} is outside 0..=242")]
    PatternOutOfRange(u32),

    #[error("invalid pattern {0:?}: expected 5 characters from g, y, b")]
    PatternParse(String),

    #[error("invalid state key {0:?}: expected the form XgYyZb")]
    StateKeyParse(String),

    #[error("{source_name}:{line}: {message}")]
    Format {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("invalid lexicon: {0}")]
    Lexicon(String),

    #[error("candidate set is empty")]
    EmptyCandidates,

    #[error("inconsistent history: no candidates remain")]
    InconsistentHistory,

    #[error("illegal guess {0}: not in the guessable list")]
    IllegalGuess(Word),

    #[error("{0} is not in the solution list")]
    NotASolution(Word),

    #[error("history already ends in a solved step")]
    HistoryClosed,

    #[error("solver made no progress after {0} guesses")]
    NoProgress(usize),

    #[error("need at least {needed} values per sample, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("degenerate samples: zero variance")]
    DegenerateSamples,

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("{0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn format(source_name: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            source_name: source_name.into(),
            line,
            message: message.into(),
        }
    }
}
