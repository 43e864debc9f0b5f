use std::collections::BTreeSet;

use regex::Regex;

use crate::text::{PipelineConfig, Sentence};

const TERMINALS: &[char] = &['.', '!', '?'];
const CLOSERS: &[char] = &['"', '\'', ')', ']', '»'];
const OPENERS: &[char] = &['"', '\'', '(', '[', '«'];

/// Rule-based sentence boundary detection.
///
/// A boundary follows `.`, `!` or `?` (plus any closing quotes or brackets)
/// when the next word starts with an uppercase letter, or at end of text.
/// A period does not end a sentence after a single letter ("A."), a listed
/// abbreviation, or a word matching one of the ordinal patterns.
#[derive(Debug, Clone)]
pub struct SentenceSplitter {
    abbreviations: BTreeSet<String>,
    ordinals: Vec<Regex>,
}

impl Default for SentenceSplitter {
    fn default() -> Self {
        let abbreviations = [
            "dr", "sr", "jr", "gng", "bb", "g", "hen", "gob", "st", "sta", "sto", "mt", "blg", "atbp", "etc", "vs",
        ];
        SentenceSplitter {
            abbreviations: abbreviations.iter().map(|s| s.to_string()).collect(),
            ordinals: vec![
                Regex::new(r"^\d+(st|nd|rd|th)$").unwrap(),
                Regex::new(r"^(?i)ika-?\d+$").unwrap(),
            ],
        }
    }
}

impl SentenceSplitter {
    pub fn new<I, S>(abbreviations: I, ordinals: Vec<Regex>) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        SentenceSplitter {
            abbreviations: abbreviations.into_iter().map(|s| s.as_ref().to_lowercase()).collect(),
            ordinals,
        }
    }

    pub fn with_abbreviation(mut self, abbreviation: &str) -> Self {
        self.abbreviations.insert(abbreviation.trim_end_matches('.').to_lowercase());
        self
    }

    fn blocks_split(&self, word: &str) -> bool {
        let word = word.trim_start_matches(OPENERS);
        let mut chars = word.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if c.is_alphabetic() {
                return true;
            }
        }
        self.abbreviations.contains(&word.to_lowercase()) || self.ordinals.iter().any(|r| r.is_match(word))
    }

    /// Byte ranges of each sentence in `text`.
    pub fn boundaries(&self, text: &str) -> Vec<(usize, usize)> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut spans = Vec::new();
        let mut start = 0;
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            if !TERMINALS.contains(&c) {
                i += 1;
                continue;
            }
            // Extend over a run like `?!` or `."`.
            let mut j = i + 1;
            while j < chars.len() && (TERMINALS.contains(&chars[j].1) || CLOSERS.contains(&chars[j].1)) {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |&(p, _)| p);

            let at_end = text[end..].trim().is_empty();
            let next_upper = chars
                .get(j)
                .is_some_and(|&(_, c)| c.is_whitespace())
                && text[end..].trim_start().trim_start_matches(OPENERS).chars().next().is_some_and(char::is_uppercase);

            let word_start = text[..pos].rfind(char::is_whitespace).map_or(0, |p| p + 1);
            let abbreviated = c == '.' && self.blocks_split(&text[word_start..pos]);

            if (at_end || next_upper) && !(abbreviated && !at_end) {
                spans.push((start, end));
                start = end;
            }
            i = j;
        }
        if !text[start..].trim().is_empty() {
            spans.push((start, text.len()));
        }
        spans
            .into_iter()
            .filter_map(|(s, e)| {
                let slice = &text[s..e];
                let lead = slice.len() - slice.trim_start().len();
                let trimmed = slice.trim();
                (!trimmed.is_empty()).then(|| (s + lead, s + lead + trimmed.len()))
            })
            .collect()
    }

    pub fn split(&self, text: &str, config: &PipelineConfig) -> Vec<Sentence> {
        self.boundaries(text)
            .into_iter()
            .map(|(s, e)| Sentence::new(&text[s..e], config))
            .filter(|s| !s.is_empty())
            .collect()
    }
}

/// Splits with the default splitter.
pub fn split_sentences(text: &str, config: &PipelineConfig) -> Vec<Sentence> {
    SentenceSplitter::default().split(text, config)
}
