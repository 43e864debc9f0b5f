//! Reference implementations and generators shared by the integration tests.
//!
//! The oracles here are written from the formulas, deliberately without
//! hashing or the library's helpers, so they can catch mistakes in either.
#![allow(dead_code)]

use std::collections::BTreeSet;

use parcorp::{Origin, PipelineConfig, Sentence, SentencePair};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub struct Gen(ChaCha8Rng);

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `lo..=hi` (modulo bias is irrelevant here).
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.0.next_u64() % (hi - lo + 1) as u64) as usize
    }

    pub fn sentence(&mut self, vocab: usize, min_len: usize, max_len: usize) -> Vec<String> {
        let len = self.range(min_len, max_len);
        (0..len).map(|_| format!("w{}", self.range(0, vocab - 1))).collect()
    }
}

pub fn pairs_from_tokens(rows: &[(Vec<String>, Vec<String>)]) -> Vec<SentencePair> {
    rows.iter()
        .enumerate()
        .map(|(i, (s, t))| {
            SentencePair::new(
                i,
                Origin::Imported { line: i + 1 },
                Sentence::from_tokens(s.clone()),
                Sentence::from_tokens(t.clone()),
            )
            .unwrap()
        })
        .collect()
}

pub fn pairs_from_text(rows: &[(&str, &str)], config: &PipelineConfig) -> Vec<SentencePair> {
    rows.iter()
        .enumerate()
        .map(|(i, (s, t))| {
            SentencePair::new(i, Origin::Imported { line: i + 1 }, Sentence::new(*s, config), Sentence::new(*t, config))
                .unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------- BLEU

fn ngrams(tokens: &[String], n: usize) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i + n <= tokens.len() {
        out.push(tokens[i..i + n].to_vec());
        i += 1;
    }
    out
}

/// Clipped matches by explicit multiset intersection: each hypothesis n-gram
/// consumes one equal reference n-gram, if any is left.
fn clipped_matches(hyp: &[String], reference: &[String], n: usize) -> (usize, usize) {
    let hyp_grams = ngrams(hyp, n);
    let mut pool = ngrams(reference, n);
    let mut matched = 0;
    for g in &hyp_grams {
        if let Some(k) = pool.iter().position(|r| r == g) {
            pool.remove(k);
            matched += 1;
        }
    }
    (matched, hyp_grams.len())
}

fn combine(matches: [usize; 4], totals: [usize; 4], c: usize, r: usize, add_one: bool) -> f64 {
    let smooth = add_one && matches[0] > 0;
    let mut log_sum = 0.0;
    for n in 0..4 {
        let p = if smooth && n >= 1 {
            (matches[n] as f64 + 1.0) / (totals[n] as f64 + 1.0)
        } else if totals[n] == 0 {
            // no n-grams of this order anywhere: vacuous
            1.0
        } else {
            matches[n] as f64 / totals[n] as f64
        };
        if p == 0.0 {
            return 0.0;
        }
        log_sum += p.ln();
    }
    if c == 0 {
        return 0.0;
    }
    let bp = if c >= r { 1.0 } else { (1.0 - r as f64 / c as f64).exp() };
    100.0 * bp * (log_sum / 4.0).exp()
}

pub fn oracle_corpus_bleu(hyps: &[Vec<String>], refs: &[Vec<String>]) -> f64 {
    let mut matches = [0; 4];
    let mut totals = [0; 4];
    let (mut c, mut r) = (0, 0);
    for (h, rf) in hyps.iter().zip(refs) {
        for n in 1..=4 {
            let (m, t) = clipped_matches(h, rf, n);
            matches[n - 1] += m;
            totals[n - 1] += t;
        }
        c += h.len();
        r += rf.len();
    }
    combine(matches, totals, c, r, false)
}

pub fn oracle_sentence_bleu(hyp: &[String], reference: &[String]) -> f64 {
    let mut matches = [0; 4];
    let mut totals = [0; 4];
    for n in 1..=4 {
        let (m, t) = clipped_matches(hyp, reference, n);
        matches[n - 1] = m;
        totals[n - 1] = t;
    }
    combine(matches, totals, hyp.len(), reference.len(), true)
}

/// Random corpus within the stated bounds: up to `max_pairs` pairs, sentence
/// length 1..=`max_len`, vocabulary `vocab`.
pub fn random_bleu_corpus(
    g: &mut Gen,
    max_pairs: usize,
    max_len: usize,
    vocab: usize,
) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
    let n = g.range(1, max_pairs);
    let mut hyps = Vec::with_capacity(n);
    let mut refs = Vec::with_capacity(n);
    for _ in 0..n {
        let r = g.sentence(vocab, 1, max_len);
        // Half the time derive the hypothesis from the reference so high
        // n-gram orders actually match.
        let h = if g.range(0, 1) == 0 {
            let mut h = r.clone();
            for tok in h.iter_mut() {
                if g.range(0, 3) == 0 {
                    *tok = format!("w{}", g.range(0, vocab - 1));
                }
            }
            h.truncate(g.range(1, h.len()));
            h
        } else {
            g.sentence(vocab, 1, max_len)
        };
        hyps.push(h);
        refs.push(r);
    }
    (hyps, refs)
}

// ---------------------------------------------------------------- Dice

#[derive(Debug, PartialEq)]
pub struct OracleCandidate {
    pub target_word: String,
    pub cooccurrence: usize,
    pub source_count: usize,
    pub target_count: usize,
    pub dice: f64,
    pub attributed_count: usize,
}

#[derive(Debug, PartialEq)]
pub struct OracleEntry {
    pub candidates: Vec<OracleCandidate>,
    pub none_count: usize,
    pub total_occurrences: usize,
}

fn has(tokens: &[String], word: &str) -> bool {
    tokens.iter().any(|t| t == word)
}

fn is_punctuation(word: &str) -> bool {
    word.chars().count() == 1 && ".,:;!?()\"«»[]".contains(word)
}

/// Exhaustive recount: every target type is scored by scanning all pairs.
pub fn oracle_entry(pairs: &[(Vec<String>, Vec<String>)], word: &str, config: &PipelineConfig) -> OracleEntry {
    let mut types = BTreeSet::new();
    for (_, t) in pairs {
        types.extend(t.iter().cloned());
    }
    let source_count = pairs.iter().filter(|(s, _)| has(s, word)).count();

    let mut candidates = Vec::new();
    for t in &types {
        let cooccurrence = pairs.iter().filter(|(s, tt)| has(s, word) && has(tt, t)).count();
        if cooccurrence == 0 || is_punctuation(t) {
            continue;
        }
        let target_count = pairs.iter().filter(|(_, tt)| has(tt, t)).count();
        let dice = 2.0 * cooccurrence as f64 / (source_count + target_count) as f64;
        if dice >= config.dice_threshold {
            candidates.push(OracleCandidate {
                target_word: t.clone(),
                cooccurrence,
                source_count,
                target_count,
                dice,
                attributed_count: 0,
            });
        }
    }
    // Highest dice first; equal dice in lexicographic order.
    candidates.sort_by(|a, b| b.dice.partial_cmp(&a.dice).unwrap().then(a.target_word.cmp(&b.target_word)));
    candidates.truncate(config.max_candidates);

    let mut none_count = 0;
    for (s, t) in pairs {
        if !has(s, word) {
            continue;
        }
        let mut best: Option<usize> = None;
        for (k, c) in candidates.iter().enumerate() {
            if has(t, &c.target_word) && best.is_none_or(|b| c.dice > candidates[b].dice) {
                best = Some(k);
            }
        }
        match best {
            Some(k) => candidates[k].attributed_count += 1,
            None => none_count += 1,
        }
    }
    OracleEntry { candidates, none_count, total_occurrences: source_count }
}

/// Random toy corpus for the Dice oracle: up to `max_pairs` pairs over a
/// vocabulary of `vocab` types, with punctuation mixed in.
pub fn random_dice_corpus(g: &mut Gen, max_pairs: usize, vocab: usize) -> Vec<(Vec<String>, Vec<String>)> {
    let n = g.range(1, max_pairs);
    (0..n)
        .map(|_| {
            let s = g.sentence(vocab, 1, 8);
            let mut t = g.sentence(vocab, 1, 8);
            if g.range(0, 4) == 0 {
                t.push(".".into());
            }
            (s, t)
        })
        .collect()
}

pub fn lines(text: &str) -> Vec<&str> {
    text.lines().collect()
}

/// Runs the `parcorp` binary in `dir`.
pub fn parcorp(dir: &std::path::Path, args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_parcorp"))
        .current_dir(dir)
        .args(args)
        .env_remove("PARCORP_CONFIG")
        .output()
        .expect("binary runs")
}

/// Runs `parcorp` and panics with its stderr unless it exits 0.
pub fn parcorp_ok(dir: &std::path::Path, args: &[&str]) -> String {
    let out = parcorp(dir, args);
    assert!(
        out.status.success(),
        "parcorp {args:?} failed ({:?}):\n{}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

pub fn read_manifest(path: &std::path::Path) -> serde_json::Value {
    let text = std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap()
}
