//! Shared data model, text cleaning and tokenization.
//!
//! Every other module works on [`SentencePair`]s whose [`Sentence`] tokens are
//! produced by [`clean`] followed by [`tokenize`]. Both functions are pure.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Characters that always form a token on their own.
pub const PUNCTUATION: &[char] = &['.', ',', ':', ';', '!', '?', '(', ')', '"', '«', '»', '[', ']'];

/// A Bible verse reference, e.g. `GEN 1:3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawVerseId", into = "RawVerseId")]
pub struct VerseId {
    book: String,
    chapter: u32,
    verse: u32,
}

#[derive(Serialize, Deserialize)]
struct RawVerseId {
    book: String,
    chapter: u32,
    verse: u32,
}

impl TryFrom<RawVerseId> for VerseId {
    type Error = Error;

    fn try_from(raw: RawVerseId) -> Result<Self> {
        VerseId::new(raw.book, raw.chapter, raw.verse)
    }
}

impl From<VerseId> for RawVerseId {
    fn from(id: VerseId) -> Self {
        RawVerseId { book: id.book, chapter: id.chapter, verse: id.verse }
    }
}

impl VerseId {
    pub fn new(book: impl Into<String>, chapter: u32, verse: u32) -> Result<Self> {
        let book = book.into();
        let valid_book = book.len() == 3
            && book.bytes().all(|b| b.is_ascii_uppercase() || b.is_ascii_digit());
        if !valid_book || chapter == 0 || verse == 0 {
            return Err(Error::VerseId(format!("{book}.{chapter}.{verse}")));
        }
        Ok(VerseId { book, chapter, verse })
    }

    pub fn book(&self) -> &str {
        &self.book
    }

    pub fn chapter(&self) -> u32 {
        self.chapter
    }

    pub fn verse(&self) -> u32 {
        self.verse
    }
}

impl fmt::Display for VerseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}:{}", self.book, self.chapter, self.verse)
    }
}

/// Where a sentence pair came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Origin {
    BibleVerse(VerseId),
    WikiSentence {
        category: String,
        article_title: String,
        source_index: usize,
        target_index: usize,
    },
    /// Read back from a line-aligned bitext; `line` is 1-based.
    Imported { line: usize },
}

impl Origin {
    /// Grouping key used by corpus statistics: the wiki category, the Bible
    /// book, or `imported`.
    pub fn group(&self) -> &str {
        match self {
            Origin::BibleVerse(id) => id.book(),
            Origin::WikiSentence { category, .. } => category,
            Origin::Imported { .. } => "imported",
        }
    }
}

/// A raw sentence together with its tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    raw: String,
    tokens: Vec<String>,
}

impl Sentence {
    pub fn new(raw: impl Into<String>, config: &PipelineConfig) -> Self {
        let raw = raw.into();
        let tokens = tokenize(&clean(&raw), config);
        Sentence { raw, tokens }
    }

    /// Builds a sentence directly from tokens; the raw form is the
    /// space-joined tokens.
    pub fn from_tokens(tokens: Vec<String>) -> Self {
        Sentence { raw: detokenize(&tokens), tokens }
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn contains_token(&self, token: &str) -> bool {
        self.tokens.iter().any(|t| t == token)
    }

    /// True if `ngram` occurs as a contiguous run of tokens.
    pub fn contains_ngram<S: AsRef<str>>(&self, ngram: &[S]) -> bool {
        if ngram.is_empty() || ngram.len() > self.tokens.len() {
            return false;
        }
        self.tokens
            .windows(ngram.len())
            .any(|w| w.iter().zip(ngram).all(|(a, b)| a == b.as_ref()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentencePair {
    pub pair_id: usize,
    pub origin: Origin,
    pub source: Sentence,
    pub target: Sentence,
}

impl SentencePair {
    pub fn new(pair_id: usize, origin: Origin, source: Sentence, target: Sentence) -> Result<Self> {
        if source.is_empty() || target.is_empty() {
            return Err(Error::Argument(format!(
                "pair {pair_id}: source and target must be non-empty after cleaning"
            )));
        }
        Ok(SentencePair { pair_id, origin, source, target })
    }
}

/// Thresholds and switches shared by every pipeline stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    pub lowercase: bool,
    pub dice_threshold: f64,
    pub max_candidates: usize,
    pub ngram_min: usize,
    pub ngram_max: usize,
    pub min_support: usize,
    pub split_ratios: [f64; 3],
    pub rng_seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            lowercase: true,
            dice_threshold: 0.1,
            max_candidates: 12,
            ngram_min: 3,
            ngram_max: 6,
            min_support: 5,
            split_ratios: [0.8, 0.1, 0.1],
            rng_seed: 1,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dice_threshold > 0.0 && self.dice_threshold <= 1.0) {
            return Err(Error::Config(format!(
                "dice_threshold must lie in (0, 1], got {}",
                self.dice_threshold
            )));
        }
        if self.max_candidates == 0 {
            return Err(Error::Config("max_candidates must be positive".into()));
        }
        if self.ngram_min == 0 || self.ngram_min > self.ngram_max {
            return Err(Error::Config(format!(
                "need 1 <= ngram_min <= ngram_max, got {}..{}",
                self.ngram_min, self.ngram_max
            )));
        }
        if self.min_support == 0 {
            return Err(Error::Config("min_support must be positive".into()));
        }
        validate_ratios(&self.split_ratios)
    }
}

pub(crate) fn validate_ratios(ratios: &[f64; 3]) -> Result<()> {
    if ratios.iter().any(|r| !r.is_finite() || *r < 0.0) {
        return Err(Error::Config(format!("split ratios must be non-negative, got {ratios:?}")));
    }
    let sum: f64 = ratios.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::Config(format!("split ratios must sum to 1, got {sum}")));
    }
    Ok(())
}

impl FromStr for PipelineConfig {
    type Err = Error;

    /// Parses the TOML config format; missing keys take their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let config: PipelineConfig =
            toml::from_str(s).map_err(|e| Error::Config(e.message().to_string()))?;
        config.validate()?;
        Ok(config)
    }
}

fn tag_pattern() -> &'static Regex {
    static TAG: OnceLock<Regex> = OnceLock::new();
    TAG.get_or_init(|| Regex::new(r"<[^>]*>").unwrap())
}

/// Normalizes raw text: strips markup tags and ASCII control characters,
/// collapses whitespace, and applies NFC.
pub fn clean(text: &str) -> String {
    let stripped = tag_pattern().replace_all(text, "");
    let no_controls: String = stripped
        .chars()
        .filter_map(|c| match c {
            '\t' | '\n' | '\r' => Some(' '),
            '\x00'..='\x1f' | '\x7f' => None,
            other => Some(other),
        })
        .collect();

    let normalized: String = no_controls.nfc().collect();
    normalized.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// [`clean`] for untrusted bytes.
pub fn clean_bytes(bytes: &[u8]) -> Result<String> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Decode { offset: e.valid_up_to() })?;
    Ok(clean(text))
}

/// Splits cleaned text into tokens. Punctuation from [`PUNCTUATION`] becomes
/// its own token; apostrophes and hyphens stay inside words.
pub fn tokenize(text: &str, config: &PipelineConfig) -> Vec<String> {
    let mut tokens = Vec::new();
    for word in text.split_whitespace() {
        let mut current = String::new();
        for c in word.chars() {
            if PUNCTUATION.contains(&c) {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
                tokens.push(c.to_string());
            } else {
                current.push(c);
            }
        }
        if !current.is_empty() {
            tokens.push(current);
        }
    }
    if config.lowercase {
        for token in &mut tokens {
            *token = token.to_lowercase();
        }
    }
    tokens
}

pub fn detokenize<S: AsRef<str>>(tokens: &[S]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(t.as_ref());
    }
    out
}
