use std::path::PathBuf;

use thiserror::Error;

use crate::text::VerseId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid UTF-8 at byte offset {offset}")]
    Decode { offset: usize },

    #[error("invalid verse id {0:?}")]
    VerseId(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("XML parse error at line {line}: {message}")]
    Xml { line: usize, message: String },

    #[error("no segments extracted from document")]
    EmptyDocument,

    #[error("duplicate verse id {0} in document")]
    DuplicateVerse(VerseId),

    #[error("no canonical translation for {0:?}: every occurrence is attributed NONE")]
    NoCanonical(String),

    #[error("no translation table entry for {0:?}")]
    UnknownWord(String),

    #[error("invalid rule for {source_word:?}: {reason}")]
    Rule { source_word: String, reason: String },

    #[error("rule for {0:?} has the wrong mode for this pass")]
    RuleMode(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("no paragraph content found in article")]
    EmptyArticle,

    #[error("no articles in category {0:?}")]
    EmptyCategory(String),

    #[error("split {name} is empty after rounding (ratio {ratio})")]
    RoundingConflict { name: &'static str, ratio: f64 },

    #[error("line counts differ: ({source_lines}, {target_lines})")]
    LineCount { source_lines: usize, target_lines: usize },

    #[error("{path}:{line}: {message}")]
    Format { path: PathBuf, line: usize, message: String },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("request to {url} failed: {message}")]
    Fetch { url: String, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
