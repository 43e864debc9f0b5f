//! JSON-lines interchange files used between pipeline stages.
//!
//! A corpus file holds one [`CorpusRecord`] per line:
//!
//! ```text
//! {"pair_id":0,"origin":{"type":"bible_verse","book":"GEN","chapter":1,"verse":1},"source_raw":"...","target_raw":"..."}
//! ```
//!
//! Tokens are not stored; readers re-derive them with the active config.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{Origin, PipelineConfig, Sentence, SentencePair};
use crate::wiki::{ArticlePair, ArticleRecord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub pair_id: usize,
    pub origin: Origin,
    pub source_raw: String,
    pub target_raw: String,
}

impl CorpusRecord {
    pub fn from_pair(pair: &SentencePair) -> Self {
        CorpusRecord {
            pair_id: pair.pair_id,
            origin: pair.origin.clone(),
            source_raw: pair.source.raw().to_string(),
            target_raw: pair.target.raw().to_string(),
        }
    }

    pub fn into_pair(self, config: &PipelineConfig) -> Result<SentencePair> {
        SentencePair::new(
            self.pair_id,
            self.origin,
            Sentence::new(self.source_raw, config),
            Sentence::new(self.target_raw, config),
        )
    }
}

pub fn to_jsonl<T: Serialize>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(&item).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Format {
                path: path.to_path_buf(),
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn write_corpus(path: &Path, pairs: &[SentencePair]) -> Result<()> {
    write_text(path, &to_jsonl(pairs.iter().map(CorpusRecord::from_pair)))
}

pub fn read_corpus(path: &Path, config: &PipelineConfig) -> Result<Vec<SentencePair>> {
    read_jsonl::<CorpusRecord>(path)?
        .into_iter()
        .map(|r| r.into_pair(config))
        .collect()
}

pub fn write_articles(path: &Path, articles: &[ArticlePair]) -> Result<()> {
    write_text(path, &to_jsonl(articles.iter().map(ArticleRecord::from_article)))
}

pub fn read_articles(path: &Path, config: &PipelineConfig) -> Result<Vec<ArticlePair>> {
    read_jsonl::<ArticleRecord>(path)?
        .into_iter()
        .map(|r| r.into_article(config))
        .collect()
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_text(path, &text)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}
