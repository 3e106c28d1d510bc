use std::path::PathBuf;

use thiserror::Error;

/// Which side of a sentiment lexicon an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexiconSide {
    Positive,
    Negative,
}

impl std::fmt::Display for LexiconSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LexiconSide::Positive => f.write_str("positive"),
            LexiconSide::Negative => f.write_str("negative"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    BadConfig(String),

    #[error("invalid language tag {0:?}: expected two lowercase ASCII letters")]
    BadLanguageTag(String),

    #[error("training corpus for language {0:?} has no tokens")]
    EmptyCorpus(String),

    #[error("cannot classify an empty token")]
    EmptyToken,

    #[error("{tokens} tokens but {labels} labels")]
    LengthMismatch { tokens: usize, labels: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },

    #[error("cosine similarity is undefined for a zero vector")]
    ZeroVector,

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("no cached embedding for ({text:?}, {lang})")]
    CacheMiss { text: String, lang: String },

    #[error("{} lexicon is empty", .0.map_or("a".to_string(), |s| s.to_string()))]
    EmptyLexicon(Option<LexiconSide>),

    #[error("failed to embed lexicon word {word:?}: {source}")]
    LexiconWord {
        word: String,
        #[source]
        source: Box<Error>,
    },

    #[error("no sentiment lexicon loaded for language {0}")]
    MissingLexicon(String),

    #[error("confusion matrix is empty")]
    EmptyMatrix,

    #[error("prediction ids do not match gold ids (missing: {missing:?}, extra: {extra:?})")]
    IdMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },

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

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }

    /// Line number carried by a parse error, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
