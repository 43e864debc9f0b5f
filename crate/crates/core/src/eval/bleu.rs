//! Corpus and sentence BLEU with n-grams up to 4, uniform weights and the
//! standard brevity penalty.
//!
//! An n-gram order for which the hypotheses contain no n-grams at all (every
//! hypothesis shorter than n) has vacuous precision 1, so identical short
//! sentences still score 100.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Smoothing {
    None,
    /// Add one to numerator and denominator of p_n for n >= 2 when at least
    /// one unigram matches.
    AddOne,
}

/// Clipped match counts and n-gram totals for one or more sentence pairs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BleuStats {
    pub matches: [usize; MAX_ORDER],
    pub totals: [usize; MAX_ORDER],
    pub hyp_len: usize,
    pub ref_len: usize,
}

impl BleuStats {
    pub fn from_pair<S: AsRef<str> + Eq + std::hash::Hash>(hypothesis: &[S], reference: &[S]) -> Self {
        let mut stats = BleuStats { hyp_len: hypothesis.len(), ref_len: reference.len(), ..Default::default() };
        for n in 1..=MAX_ORDER {
            let hyp = ngram_counts(hypothesis, n);
            let refs = ngram_counts(reference, n);
            stats.totals[n - 1] = hypothesis.len().saturating_sub(n - 1);
            stats.matches[n - 1] = hyp.iter().map(|(g, &c)| c.min(refs.get(g).copied().unwrap_or(0))).sum();
        }
        stats
    }

    pub fn merge(mut self, other: BleuStats) -> Self {
        for n in 0..MAX_ORDER {
            self.matches[n] += other.matches[n];
            self.totals[n] += other.totals[n];
        }
        self.hyp_len += other.hyp_len;
        self.ref_len += other.ref_len;
        self
    }

    pub fn report(&self, smoothing: Smoothing) -> BleuReport {
        let smooth = smoothing == Smoothing::AddOne && self.matches[0] > 0;
        let mut precisions = [0.0; MAX_ORDER];
        for (n, p) in precisions.iter_mut().enumerate() {
            let (m, t) = (self.matches[n], self.totals[n]);
            *p = if smooth && n > 0 {
                (m + 1) as f64 / (t + 1) as f64
            } else if t == 0 {
                1.0
            } else {
                m as f64 / t as f64
            };
        }

        let (c, r) = (self.hyp_len, self.ref_len);
        let bp = if c >= r {
            1.0
        } else if c == 0 {
            0.0
        } else {
            (1.0 - r as f64 / c as f64).exp()
        };

        let score = if precisions.contains(&0.0) || bp == 0.0 {
            0.0
        } else {
            let log_mean = precisions.iter().map(|p| p.ln()).sum::<f64>() / MAX_ORDER as f64;
            100.0 * bp * log_mean.exp()
        };

        BleuReport { score, precisions, brevity_penalty: bp, hyp_len: c, ref_len: r, smoothing }
    }
}

fn ngram_counts<S: Eq + std::hash::Hash>(tokens: &[S], n: usize) -> HashMap<&[S], usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for w in tokens.windows(n) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "BleuJson", from = "BleuJson")]
pub struct BleuReport {
    /// 0–100, full precision.
    pub score: f64,
    pub precisions: [f64; MAX_ORDER],
    pub brevity_penalty: f64,
    pub hyp_len: usize,
    pub ref_len: usize,
    pub smoothing: Smoothing,
}

impl BleuReport {
    /// Score rounded to two decimals.
    pub fn display_score(&self) -> String {
        format!("{:.2}", self.score)
    }
}

impl std::fmt::Display for BleuReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let p = &self.precisions;
        write!(
            f,
            "BLEU = {:.2} {:.1}/{:.1}/{:.1}/{:.1} (BP = {:.3}, hyp_len = {}, ref_len = {})",
            self.score,
            100.0 * p[0],
            100.0 * p[1],
            100.0 * p[2],
            100.0 * p[3],
            self.brevity_penalty,
            self.hyp_len,
            self.ref_len
        )
    }
}

#[derive(Serialize, Deserialize)]
struct BleuJson {
    score: f64,
    p1: f64,
    p2: f64,
    p3: f64,
    p4: f64,
    bp: f64,
    hyp_len: usize,
    ref_len: usize,
    smoothing: Smoothing,
}

impl From<BleuReport> for BleuJson {
    fn from(r: BleuReport) -> Self {
        let [p1, p2, p3, p4] = r.precisions;
        BleuJson { score: r.score, p1, p2, p3, p4, bp: r.brevity_penalty, hyp_len: r.hyp_len, ref_len: r.ref_len, smoothing: r.smoothing }
    }
}

impl From<BleuJson> for BleuReport {
    fn from(j: BleuJson) -> Self {
        BleuReport {
            score: j.score,
            precisions: [j.p1, j.p2, j.p3, j.p4],
            brevity_penalty: j.bp,
            hyp_len: j.hyp_len,
            ref_len: j.ref_len,
            smoothing: j.smoothing,
        }
    }
}

/// Corpus BLEU: counts are summed over all pairs before dividing.
pub fn bleu_corpus<S>(hypotheses: &[Vec<S>], references: &[Vec<S>]) -> Result<BleuReport>
where
    S: AsRef<str> + Eq + std::hash::Hash + Sync,
{
    if hypotheses.is_empty() {
        return Err(Error::Argument("BLEU needs at least one sentence pair".into()));
    }
    if hypotheses.len() != references.len() {
        return Err(Error::Argument(format!(
            "{} hypotheses but {} references",
            hypotheses.len(),
            references.len()
        )));
    }
    let stats = hypotheses
        .par_iter()
        .zip(references.par_iter())
        .map(|(h, r)| BleuStats::from_pair(h, r))
        .reduce(BleuStats::default, BleuStats::merge);
    Ok(stats.report(Smoothing::None))
}

/// Sentence BLEU with add-one smoothing for n >= 2.
pub fn bleu_sentence<S>(hypothesis: &[S], reference: &[S]) -> Result<BleuReport>
where
    S: AsRef<str> + Eq + std::hash::Hash,
{
    if hypothesis.is_empty() || reference.is_empty() {
        return Err(Error::Argument("hypothesis and reference must be non-empty".into()));
    }
    Ok(BleuStats::from_pair(hypothesis, reference).report(Smoothing::AddOne))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    #[test]
    fn identity_is_100() {
        let h = vec![t("at nagkahapon at nagkaumaga ang ikatlong araw ."), t("a b")];
        let report = bleu_corpus(&h, &h).unwrap();
        assert!((report.score - 100.0).abs() < 1e-9);
        assert_eq!(report.display_score(), "100.00");
    }

    #[test]
    fn no_overlap_is_zero() {
        let report = bleu_corpus(&[t("a b c d")], &[t("e f g h")]).unwrap();
        assert_eq!(report.score, 0.0);
        assert_eq!(bleu_sentence(&t("a b"), &t("c d")).unwrap().score, 0.0);
    }

    #[test]
    fn brevity_penalty_case() {
        let report = bleu_corpus(&[t("a b c d")], &[t("a b c d e")]).unwrap();
        assert_eq!(report.precisions, [1.0; 4]);
        assert!((report.brevity_penalty - (-0.25f64).exp()).abs() < 1e-15);
        assert_eq!(report.display_score(), "77.88");
    }

    #[test]
    fn clipping() {
        let stats = BleuStats::from_pair(&t("the the the the"), &t("the cat"));
        assert_eq!(stats.matches[0], 1);
        assert_eq!(stats.totals[0], 4);
    }

    #[test]
    fn argument_errors() {
        let empty: Vec<Vec<&str>> = Vec::new();
        assert!(bleu_corpus(&empty, &empty).is_err());
        assert!(bleu_corpus(&[t("a")], &[t("a"), t("b")]).is_err());
        assert!(bleu_sentence::<&str>(&[], &t("a")).is_err());
    }

    #[test]
    fn smoothing_reported_in_json() {
        let json = serde_json::to_value(bleu_sentence(&t("a b"), &t("a b")).unwrap()).unwrap();
        assert_eq!(json["smoothing"], "add-one");
        assert_eq!(json["p1"], 1.0);
        assert!(json.get("bp").is_some());
    }
}
