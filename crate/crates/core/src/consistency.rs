//! Translation-consistency analysis and correction.
//!
//! A [`TranslationTable`] records, for each watched source word, which target
//! words tend to co-occur with it (scored with the Dice coefficient over
//! pair-level presence counts) and which of them realizes the word in each
//! pair. Corrections rewrite the target side only:
//!
//! * [`canonicalize_names`] replaces variant translations with the canonical
//!   form and inserts the canonical form when the target has none.
//! * [`canonicalize_verbs`] only replaces variants.
//!
//! Every rewrite is recorded in a [`Change`] log.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{PipelineConfig, Sentence, SentencePair, PUNCTUATION};

/// Target word printed in the TSV export for the no-translation bucket.
pub const NONE_MARKER: &str = "__NONE__";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub target_word: String,
    /// Pairs containing both the source and the target word.
    pub cooccurrence: usize,
    /// Pairs whose source contains the source word.
    pub source_count: usize,
    /// Pairs whose target contains the target word.
    pub target_count: usize,
    pub dice: f64,
    /// Pairs in which this candidate was chosen as the translation.
    pub attributed_count: usize,
}

pub fn dice(cooccurrence: usize, source_count: usize, target_count: usize) -> f64 {
    if source_count + target_count == 0 {
        return 0.0;
    }
    2.0 * cooccurrence as f64 / (source_count + target_count) as f64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TranslationEntry {
    pub source_word: String,
    /// Sorted by dice descending, ties by target word.
    pub candidates: Vec<Candidate>,
    pub none_count: usize,
    pub total_occurrences: usize,
}

impl TranslationEntry {
    /// The watched word never occurred in a source sentence.
    pub fn is_absent(&self) -> bool {
        self.total_occurrences == 0
    }

    pub fn candidate(&self, target_word: &str) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.target_word == target_word)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TranslationTable {
    pub entries: BTreeMap<String, TranslationEntry>,
}

impl TranslationTable {
    pub fn get(&self, source_word: &str) -> Option<&TranslationEntry> {
        self.entries.get(source_word)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for entry in self.entries.values() {
            for c in &entry.candidates {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{:.6}\t{}",
                    entry.source_word, c.target_word, c.cooccurrence, c.dice, c.attributed_count
                );
            }
            let _ = writeln!(
                out,
                "{}\t{}\t{}\tNA\t{}",
                entry.source_word, NONE_MARKER, entry.none_count, entry.none_count
            );
        }
        out
    }
}

fn document_frequency<'a, I>(sentences: I) -> HashMap<&'a str, usize>
where
    I: ParallelIterator<Item = &'a Sentence>,
{
    sentences
        .fold(HashMap::new, |mut acc: HashMap<&'a str, usize>, s| {
            let types: HashSet<&str> = s.tokens().iter().map(String::as_str).collect();
            for t in types {
                *acc.entry(t).or_default() += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        })
}

/// Punctuation tokens are never candidate translations.
fn is_punctuation(token: &str) -> bool {
    let mut chars = token.chars();
    matches!((chars.next(), chars.next()), (Some(c), None) if PUNCTUATION.contains(&c))
}

/// Builds the co-occurrence translation table for `watchlist`.
pub fn build_translation_table(
    pairs: &[SentencePair],
    watchlist: &BTreeSet<String>,
    config: &PipelineConfig,
) -> Result<TranslationTable> {
    if watchlist.is_empty() {
        return Err(Error::Argument("watchlist must not be empty".into()));
    }
    config.validate()?;

    let target_df = document_frequency(pairs.par_iter().map(|p| &p.target));

    let entries = watchlist
        .par_iter()
        .map(|word| (word.clone(), build_entry(pairs, word, &target_df, config)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(TranslationTable { entries })
}

fn build_entry(
    pairs: &[SentencePair],
    word: &str,
    target_df: &HashMap<&str, usize>,
    config: &PipelineConfig,
) -> TranslationEntry {
    let containing: Vec<&SentencePair> = pairs.iter().filter(|p| p.source.contains_token(word)).collect();
    let source_count = containing.len();

    let mut cooccurrence: HashMap<&str, usize> = HashMap::new();
    for pair in &containing {
        let types: HashSet<&str> = pair.target.tokens().iter().map(String::as_str).collect();
        for t in types {
            *cooccurrence.entry(t).or_default() += 1;
        }
    }

    let mut candidates: Vec<Candidate> = cooccurrence
        .into_iter()
        .map(|(t, c)| {
            let target_count = target_df[t];
            Candidate {
                target_word: t.to_string(),
                cooccurrence: c,
                source_count,
                target_count,
                dice: dice(c, source_count, target_count),
                attributed_count: 0,
            }
        })
        .filter(|c| c.dice >= config.dice_threshold && !is_punctuation(&c.target_word))
        .collect();
    candidates.sort_by(|a, b| b.dice.total_cmp(&a.dice).then_with(|| a.target_word.cmp(&b.target_word)));
    candidates.truncate(config.max_candidates);

    let mut none_count = 0;
    for pair in &containing {
        // Candidates are already in attribution priority order.
        match candidates.iter_mut().find(|c| pair.target.contains_token(&c.target_word)) {
            Some(c) => c.attributed_count += 1,
            None => none_count += 1,
        }
    }

    TranslationEntry {
        source_word: word.to_string(),
        candidates,
        none_count,
        total_occurrences: source_count,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inconsistency {
    pub source_word: String,
    pub candidates: Vec<Candidate>,
    pub none_count: usize,
    pub total_occurrences: usize,
}

/// Entries realized by two or more different translations, or left
/// untranslated at least once, most frequent first.
pub fn detect_inconsistencies(table: &TranslationTable, min_total: usize) -> Vec<Inconsistency> {
    let mut found: Vec<Inconsistency> = table
        .entries
        .values()
        .filter(|e| e.total_occurrences >= min_total && !e.is_absent())
        .filter(|e| {
            let used = e.candidates.iter().filter(|c| c.attributed_count > 0).count();
            used >= 2 || e.none_count > 0
        })
        .map(|e| Inconsistency {
            source_word: e.source_word.clone(),
            candidates: e.candidates.clone(),
            none_count: e.none_count,
            total_occurrences: e.total_occurrences,
        })
        .collect();
    found.sort_by(|a, b| {
        b.total_occurrences
            .cmp(&a.total_occurrences)
            .then_with(|| a.source_word.cmp(&b.source_word))
    });
    found
}

/// The most frequently attributed translation of `source_word`.
pub fn select_canonical(table: &TranslationTable, source_word: &str) -> Result<String> {
    let entry = table.get(source_word).ok_or_else(|| Error::UnknownWord(source_word.into()))?;
    entry
        .candidates
        .iter()
        .filter(|c| c.attributed_count > 0)
        .max_by(|a, b| {
            a.attributed_count
                .cmp(&b.attributed_count)
                .then_with(|| a.dice.total_cmp(&b.dice))
                .then_with(|| b.target_word.cmp(&a.target_word))
        })
        .map(|c| c.target_word.clone())
        .ok_or_else(|| Error::NoCanonical(source_word.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleMode {
    InsertIfAbsent,
    ReplaceOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRule", into = "RawRule")]
pub struct CanonicalizationRule {
    source_word: String,
    canonical: String,
    variants: BTreeSet<String>,
    mode: RuleMode,
}

#[derive(Serialize, Deserialize)]
struct RawRule {
    source_word: String,
    canonical: String,
    variants: BTreeSet<String>,
    mode: RuleMode,
}

impl TryFrom<RawRule> for CanonicalizationRule {
    type Error = Error;

    fn try_from(r: RawRule) -> Result<Self> {
        CanonicalizationRule::new(r.source_word, r.canonical, r.variants, r.mode)
    }
}

impl From<CanonicalizationRule> for RawRule {
    fn from(r: CanonicalizationRule) -> Self {
        RawRule { source_word: r.source_word, canonical: r.canonical, variants: r.variants, mode: r.mode }
    }
}

impl CanonicalizationRule {
    pub fn new<I, S>(source_word: impl Into<String>, canonical: impl Into<String>, variants: I, mode: RuleMode) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let source_word = source_word.into();
        let canonical = canonical.into();
        let variants: BTreeSet<String> = variants.into_iter().map(Into::into).collect();
        let reject = |reason: &str| Error::Rule { source_word: source_word.clone(), reason: reason.into() };
        if source_word.is_empty() || canonical.is_empty() {
            return Err(reject("source word and canonical must be non-empty"));
        }
        if variants.contains(&canonical) {
            return Err(reject("canonical form listed among its own variants"));
        }
        if variants.is_empty() && mode == RuleMode::ReplaceOnly {
            return Err(reject("replace_only rule needs at least one variant"));
        }
        Ok(CanonicalizationRule { source_word, canonical, variants, mode })
    }

    pub fn names<I, S>(source_word: impl Into<String>, canonical: impl Into<String>, variants: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(source_word, canonical, variants, RuleMode::InsertIfAbsent)
    }

    pub fn verbs<I, S>(source_word: impl Into<String>, canonical: impl Into<String>, variants: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(source_word, canonical, variants, RuleMode::ReplaceOnly)
    }

    pub fn source_word(&self) -> &str {
        &self.source_word
    }

    pub fn canonical(&self) -> &str {
        &self.canonical
    }

    pub fn variants(&self) -> &BTreeSet<String> {
        &self.variants
    }

    pub fn mode(&self) -> RuleMode {
        self.mode
    }
}

pub fn parse_rules(json: &str) -> Result<Vec<CanonicalizationRule>> {
    Ok(serde_json::from_str(json)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChangeAction {
    Replace,
    Insert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Change {
    pub pair_id: usize,
    pub action: ChangeAction,
    /// Target token index after the change.
    pub position: usize,
    pub old: Option<String>,
    pub new: String,
}

/// Serializes a change log as JSON lines.
pub fn change_log_jsonl(changes: &[Change]) -> String {
    let mut out = String::new();
    for c in changes {
        out.push_str(&serde_json::to_string(c).expect("change serializes"));
        out.push('\n');
    }
    out
}

fn rewrite_pair(pair: &SentencePair, rule: &CanonicalizationRule) -> Option<(Vec<String>, Vec<Change>)> {
    let source = pair.source.tokens();
    let first = source.iter().position(|t| t == rule.source_word())?;

    let mut tokens = pair.target.tokens().to_vec();
    let mut changes = Vec::new();
    for (i, tok) in tokens.iter_mut().enumerate() {
        if rule.variants.contains(tok.as_str()) {
            changes.push(Change {
                pair_id: pair.pair_id,
                action: ChangeAction::Replace,
                position: i,
                old: Some(std::mem::replace(tok, rule.canonical.clone())),
                new: rule.canonical.clone(),
            });
        }
    }

    if rule.mode == RuleMode::InsertIfAbsent && !tokens.iter().any(|t| t == rule.canonical()) {
        // round(first / |source| * |target|), half up, in integers
        let (s, t) = (source.len(), tokens.len());
        let position = ((2 * first * t + s) / (2 * s)).min(t);
        tokens.insert(position, rule.canonical.clone());
        changes.push(Change {
            pair_id: pair.pair_id,
            action: ChangeAction::Insert,
            position,
            old: None,
            new: rule.canonical.clone(),
        });
    }

    (!changes.is_empty()).then_some((tokens, changes))
}

/// Applies `rule` in whatever mode it carries.
pub fn apply_rule(pairs: Vec<SentencePair>, rule: &CanonicalizationRule) -> (Vec<SentencePair>, Vec<Change>) {
    let results: Vec<(SentencePair, Vec<Change>)> = pairs
        .into_par_iter()
        .map(|mut pair| match rewrite_pair(&pair, rule) {
            Some((tokens, changes)) => {
                pair.target = Sentence::from_tokens(tokens);
                (pair, changes)
            }
            None => (pair, Vec::new()),
        })
        .collect();

    let mut log = Vec::new();
    let pairs = results
        .into_iter()
        .map(|(pair, changes)| {
            log.extend(changes);
            pair
        })
        .collect();
    (pairs, log)
}

/// Copyable correction for names: variants become the canonical form, and
/// the canonical form is inserted where the target has no translation.
pub fn canonicalize_names(
    pairs: Vec<SentencePair>,
    rule: &CanonicalizationRule,
) -> Result<(Vec<SentencePair>, Vec<Change>)> {
    if rule.mode != RuleMode::InsertIfAbsent {
        return Err(Error::RuleMode(rule.source_word.clone()));
    }
    Ok(apply_rule(pairs, rule))
}

/// Most-frequent-translation substitution for verbs; never inserts.
pub fn canonicalize_verbs(
    pairs: Vec<SentencePair>,
    rule: &CanonicalizationRule,
) -> Result<(Vec<SentencePair>, Vec<Change>)> {
    if rule.mode != RuleMode::ReplaceOnly {
        return Err(Error::RuleMode(rule.source_word.clone()));
    }
    Ok(apply_rule(pairs, rule))
}

/// Applies each rule in order.
pub fn apply_rules(
    mut pairs: Vec<SentencePair>,
    rules: &[CanonicalizationRule],
) -> (Vec<SentencePair>, Vec<Change>) {
    let mut log = Vec::new();
    for rule in rules {
        let (next, changes) = apply_rule(pairs, rule);
        pairs = next;
        log.extend(changes);
    }
    (pairs, log)
}
