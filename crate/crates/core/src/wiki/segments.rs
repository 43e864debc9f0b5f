use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ArticlePair;
use crate::error::{Error, Result};
use crate::text::{Origin, PipelineConfig, Sentence, SentencePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Source,
    Target,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "source" => Ok(Side::Source),
            "target" => Ok(Side::Target),
            other => Err(Error::Argument(format!("side must be source or target, got {other:?}"))),
        }
    }
}

/// A frequent contiguous token sequence within one category and side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopicSegment {
    pub category: String,
    pub side: Side,
    pub ngram: Vec<String>,
    /// Sentences containing the n-gram at least once.
    pub count: usize,
    pub coverage: f64,
    /// Sentences of this category and side; `coverage = count / sentence_total`.
    pub sentence_total: usize,
}

type Gram = Box<[u32]>;

/// Mines closed frequent n-grams from one side of a category.
///
/// Counts are sentence presence counts. Results are sorted by count
/// descending, then longer n-grams first, then lexicographically. An n-gram
/// contained in a longer result with the same count is dropped.
pub fn mine_topic_segments(
    articles: &[ArticlePair],
    category: &str,
    side: Side,
    config: &PipelineConfig,
) -> Result<Vec<TopicSegment>> {
    config.validate()?;
    let sentences: Vec<&Sentence> = articles
        .iter()
        .filter(|a| a.category == category)
        .flat_map(|a| a.sentences(side))
        .collect();
    if !articles.iter().any(|a| a.category == category) {
        return Err(Error::EmptyCategory(category.to_string()));
    }

    let mut vocab: HashMap<&str, u32> = HashMap::new();
    let mut words: Vec<&str> = Vec::new();
    let encoded: Vec<Vec<u32>> = sentences
        .iter()
        .map(|s| {
            s.tokens()
                .iter()
                .map(|t| {
                    *vocab.entry(t.as_str()).or_insert_with(|| {
                        words.push(t.as_str());
                        (words.len() - 1) as u32
                    })
                })
                .collect()
        })
        .collect();

    let (n_min, n_max) = (config.ngram_min, config.ngram_max);
    let counts: HashMap<Gram, usize> = encoded
        .par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Gram, usize>, ids| {
            let mut present: HashSet<&[u32]> = HashSet::new();
            for n in n_min..=n_max.min(ids.len()) {
                present.extend(ids.windows(n));
            }
            for gram in present {
                *acc.entry(gram.into()).or_default() += 1;
            }
            acc
        })
        .reduce(HashMap::new, |a, b| if a.len() < b.len() { merge(b, a) } else { merge(a, b) });

    let frequent: HashMap<&[u32], usize> = counts
        .iter()
        .filter(|(_, &c)| c >= config.min_support)
        .map(|(g, &c)| (&**g, c))
        .collect();

    // A gram contained in an equally frequent longer gram is also contained
    // in an equally frequent gram exactly one token longer, as its prefix or
    // suffix, so checking one-token extensions is enough.
    let mut suppressed: HashSet<&[u32]> = HashSet::new();
    for (&gram, &count) in &frequent {
        if gram.len() <= n_min {
            continue;
        }
        for sub in [&gram[..gram.len() - 1], &gram[1..]] {
            if frequent.get(sub) == Some(&count) {
                suppressed.insert(sub);
            }
        }
    }

    let total = sentences.len();
    let mut segments: Vec<TopicSegment> = frequent
        .into_iter()
        .filter(|(g, _)| !suppressed.contains(g))
        .map(|(g, count)| TopicSegment {
            category: category.to_string(),
            side,
            ngram: g.iter().map(|&id| words[id as usize].to_string()).collect(),
            count,
            coverage: count as f64 / total as f64,
            sentence_total: total,
        })
        .collect();
    segments.sort_by(|a, b| {
        b.count
            .cmp(&a.count)
            .then_with(|| b.ngram.len().cmp(&a.ngram.len()))
            .then_with(|| a.ngram.cmp(&b.ngram))
    });
    Ok(segments)
}

fn merge(mut into: HashMap<Gram, usize>, from: HashMap<Gram, usize>) -> HashMap<Gram, usize> {
    for (k, v) in from {
        *into.entry(k).or_default() += v;
    }
    into
}

/// Parallel templates for one category, e.g. `maoy rehiyon sa pilipinas`
/// paired with `ay isang rehiyon sa pilipinas`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentPair {
    pub category: String,
    pub source_ngram: Vec<String>,
    pub target_ngram: Vec<String>,
}

impl SegmentPair {
    pub fn from_segments(source: &TopicSegment, target: &TopicSegment) -> Result<Self> {
        if source.category != target.category {
            return Err(Error::Argument(format!(
                "segments come from different categories ({:?}, {:?})",
                source.category, target.category
            )));
        }
        if source.side != Side::Source || target.side != Side::Target {
            return Err(Error::Argument("segment pair needs one source and one target segment".into()));
        }
        Ok(SegmentPair {
            category: source.category.clone(),
            source_ngram: source.ngram.clone(),
            target_ngram: target.ngram.clone(),
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct TemplateExtraction {
    pub pairs: Vec<SentencePair>,
    pub unpaired_source: usize,
    pub unpaired_target: usize,
}

/// Pairs the article's sentences that contain the template, in document
/// order; surplus matches on either side are counted, not paired. Pair ids
/// start at `first_pair_id`.
pub fn extract_parallel_by_template(
    article: &ArticlePair,
    segment_pair: &SegmentPair,
    first_pair_id: usize,
) -> Result<TemplateExtraction> {
    if article.category != segment_pair.category {
        return Err(Error::Argument(format!(
            "template for {:?} applied to article in {:?}",
            segment_pair.category, article.category
        )));
    }
    let matches = |sentences: &[Sentence], ngram: &[String]| -> Vec<usize> {
        sentences
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains_ngram(ngram))
            .map(|(i, _)| i)
            .collect()
    };
    let s = matches(&article.source_sentences, &segment_pair.source_ngram);
    let t = matches(&article.target_sentences, &segment_pair.target_ngram);

    let pairs = s
        .iter()
        .zip(&t)
        .enumerate()
        .map(|(k, (&si, &ti))| {
            SentencePair::new(
                first_pair_id + k,
                Origin::WikiSentence {
                    category: article.category.clone(),
                    article_title: article.title.clone(),
                    source_index: si,
                    target_index: ti,
                },
                article.source_sentences[si].clone(),
                article.target_sentences[ti].clone(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let paired = pairs.len();
    Ok(TemplateExtraction { pairs, unpaired_source: s.len() - paired, unpaired_target: t.len() - paired })
}

/// Runs the template over every article of its category, numbering pairs
/// consecutively.
pub fn extract_all_by_template(articles: &[ArticlePair], segment_pair: &SegmentPair) -> Result<TemplateExtraction> {
    let mut all = TemplateExtraction::default();
    for article in articles.iter().filter(|a| a.category == segment_pair.category) {
        let one = extract_parallel_by_template(article, segment_pair, all.pairs.len())?;
        all.pairs.extend(one.pairs);
        all.unpaired_source += one.unpaired_source;
        all.unpaired_target += one.unpaired_target;
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn article(category: &str, source: &[&str], target: &[&str]) -> ArticlePair {
        let config = PipelineConfig::default();
        let s = |v: &[&str]| v.iter().map(|t| Sentence::new(*t, &config)).collect();
        ArticlePair::new(category, "t", s(source), s(target)).unwrap()
    }

    fn config(min_support: usize) -> PipelineConfig {
        PipelineConfig { min_support, ..Default::default() }
    }

    #[test]
    fn no_shared_trigram_gives_nothing() {
        let a = article("regions", &["a b c", "d e f", "g h i"], &["x"]);
        assert!(mine_topic_segments(&[a], "regions", Side::Source, &config(2)).unwrap().is_empty());
    }

    #[test]
    fn unknown_category_is_an_error() {
        let a = article("regions", &["a b c"], &["x"]);
        assert!(matches!(
            mine_topic_segments(&[a], "cities", Side::Source, &config(1)),
            Err(Error::EmptyCategory(_))
        ));
    }

    #[test]
    fn closed_filter_keeps_the_longest() {
        let a = article(
            "regions",
            &[
                "ang caraga maoy rehiyon sa pilipinas .",
                "ang cordillera maoy rehiyon sa pilipinas .",
                "ang calabarzon maoy rehiyon sa pilipinas nga dako",
                "laing butang",
            ],
            &["x"],
        );
        let segs = mine_topic_segments(&[a], "regions", Side::Source, &config(3)).unwrap();
        let grams: Vec<String> = segs.iter().map(|s| s.ngram.join(" ")).collect();
        assert_eq!(grams, ["maoy rehiyon sa pilipinas"]);
        assert_eq!(segs[0].count, 3);
        assert_eq!(segs[0].sentence_total, 4);
        assert!((segs[0].coverage - 0.75).abs() < 1e-12);
    }

    #[test]
    fn presence_not_multiplicity() {
        let a = article("c", &["a b c a b c", "a b c"], &["x"]);
        let segs = mine_topic_segments(&[a], "c", Side::Source, &config(2)).unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].ngram, ["a", "b", "c"]);
        assert_eq!(segs[0].count, 2);
    }

    #[test]
    fn sorted_by_count_then_length_then_lexicographic() {
        let a = article(
            "c",
            &["p q r s", "p q r s", "p q r s", "x y z", "x y z", "x y z", "k l m", "k l m", "k l m", "k l m"],
            &["t"],
        );
        let segs = mine_topic_segments(&[a], "c", Side::Source, &config(3)).unwrap();
        let grams: Vec<String> = segs.iter().map(|s| s.ngram.join(" ")).collect();
        assert_eq!(grams, ["k l m", "p q r s", "x y z"]);
    }

    #[test]
    fn template_zip() {
        let a = article(
            "regions",
            &["Ang Caraga maoy usa sa mga rehiyon sa Pilipinas nga makita sa pulo sa Mindanao."],
            &["Ang Caraga ay isang rehiyon ng Pilipinas na matatagpuan sa hilagang silangang bahagi ng pulo ng Mindanao."],
        );
        let sp = SegmentPair {
            category: "regions".into(),
            source_ngram: vec!["rehiyon".into(), "sa".into(), "pilipinas".into()],
            target_ngram: vec!["ay".into(), "isang".into(), "rehiyon".into()],
        };
        let out = extract_parallel_by_template(&a, &sp, 0).unwrap();
        assert_eq!(out.pairs.len(), 1);
        assert!(out.pairs[0].source.raw().starts_with("Ang Caraga maoy"));
        assert!(out.pairs[0].target.raw().starts_with("Ang Caraga ay isang"));
    }

    #[test]
    fn template_truncates_and_counts_surplus() {
        let a = article("r", &["x maoy rehiyon", "y", "z maoy rehiyon"], &["x ay rehiyon"]);
        let sp = SegmentPair {
            category: "r".into(),
            source_ngram: vec!["maoy".into(), "rehiyon".into()],
            target_ngram: vec!["ay".into(), "rehiyon".into()],
        };
        let out = extract_parallel_by_template(&a, &sp, 10).unwrap();
        assert_eq!(out.pairs.len(), 1);
        assert_eq!(out.pairs[0].pair_id, 10);
        assert_eq!(out.unpaired_source, 1);
        assert_eq!(out.unpaired_target, 0);

        let none = SegmentPair { source_ngram: vec!["wala".into()], ..sp.clone() };
        assert!(extract_parallel_by_template(&a, &none, 0).unwrap().pairs.is_empty());

        let wrong = SegmentPair { category: "cities".into(), ..sp };
        assert!(extract_parallel_by_template(&a, &wrong, 0).is_err());
    }

    #[test]
    fn segment_pair_from_segments() {
        let seg = |side, cat: &str| TopicSegment {
            category: cat.into(),
            side,
            ngram: vec!["a".into()],
            count: 1,
            coverage: 1.0,
            sentence_total: 1,
        };
        assert!(SegmentPair::from_segments(&seg(Side::Source, "r"), &seg(Side::Target, "r")).is_ok());
        assert!(SegmentPair::from_segments(&seg(Side::Source, "r"), &seg(Side::Target, "c")).is_err());
        assert!(SegmentPair::from_segments(&seg(Side::Source, "r"), &seg(Side::Source, "r")).is_err());
    }
}
