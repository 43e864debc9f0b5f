mod support;

use std::collections::{BTreeMap, BTreeSet};

use parcorp::consistency::{
    apply_rule, build_translation_table, canonicalize_names, select_canonical, CanonicalizationRule, Candidate,
    TranslationEntry, TranslationTable,
};
use parcorp::corpus::to_jsonl;
use parcorp::corpus::CorpusRecord;
use parcorp::eval::bleu_corpus;
use parcorp::wiki::{mine_topic_segments, ArticlePair, Side};
use parcorp::{PipelineConfig, Sentence};
use proptest::prelude::*;
use support::pairs_from_tokens;

fn word(vocab: u8) -> impl Strategy<Value = String> {
    (0..vocab).prop_map(|i| format!("w{i}"))
}

fn sentence(vocab: u8, max_len: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec(word(vocab), 1..=max_len)
}

fn corpus(max_pairs: usize) -> impl Strategy<Value = Vec<(Vec<String>, Vec<String>)>> {
    prop::collection::vec((sentence(10, 8), sentence(10, 8)), 1..=max_pairs)
}

fn dump(pairs: &[parcorp::SentencePair]) -> String {
    to_jsonl(pairs.iter().map(CorpusRecord::from_pair))
}

/// Closed frequent n-grams by brute force over explicit token windows.
fn brute_force_segments(sentences: &[Vec<String>], config: &PipelineConfig) -> BTreeMap<Vec<String>, usize> {
    let mut grams = BTreeSet::new();
    for s in sentences {
        for n in config.ngram_min..=config.ngram_max {
            if s.len() >= n {
                for w in s.windows(n) {
                    grams.insert(w.to_vec());
                }
            }
        }
    }
    let count = |g: &[String]| sentences.iter().filter(|s| s.len() >= g.len() && s.windows(g.len()).any(|w| w == g)).count();
    let frequent: BTreeMap<Vec<String>, usize> =
        grams.into_iter().map(|g| { let c = count(&g); (g, c) }).filter(|(_, c)| *c >= config.min_support).collect();
    let contains = |big: &[String], small: &[String]| big.len() > small.len() && big.windows(small.len()).any(|w| w == small);
    frequent
        .iter()
        .filter(|(g, c)| !frequent.iter().any(|(h, d)| d == *c && contains(h, g)))
        .map(|(g, c)| (g.clone(), *c))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn table_is_invariant_under_pair_order(rows in corpus(30), rotate in 0usize..30) {
        let config = PipelineConfig::default();
        let watch: BTreeSet<String> = ["w0", "w1", "w2"].iter().map(|s| s.to_string()).collect();
        let mut shuffled = rows.clone();
        shuffled.reverse();
        let k = rotate % shuffled.len();
        shuffled.rotate_left(k);
        let a = build_translation_table(&pairs_from_tokens(&rows), &watch, &config).unwrap();
        let b = build_translation_table(&pairs_from_tokens(&shuffled), &watch, &config).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn corpus_bleu_is_invariant_under_pair_order(rows in corpus(10)) {
        let (h, r): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let a = bleu_corpus(&h, &r).unwrap();
        let (mut h2, mut r2) = (h.clone(), r.clone());
        h2.reverse();
        r2.reverse();
        let b = bleu_corpus(&h2, &r2).unwrap();
        prop_assert!((a.score - b.score).abs() < 1e-9);
    }

    #[test]
    fn canonicalization_is_idempotent(rows in corpus(30)) {
        let rule = CanonicalizationRule::names("w0", "w1", ["w2", "w3"]).unwrap();
        let (once, _) = canonicalize_names(pairs_from_tokens(&rows), &rule).unwrap();
        for p in &once {
            if p.source.contains_token("w0") {
                prop_assert!(p.target.contains_token("w1"));
                prop_assert!(!p.target.contains_token("w2") && !p.target.contains_token("w3"));
            }
        }
        let before = dump(&once);
        let (twice, changes) = apply_rule(once, &rule);
        prop_assert!(changes.is_empty());
        prop_assert_eq!(before, dump(&twice));
    }

    #[test]
    fn verb_rules_never_change_length(rows in corpus(30)) {
        let rule = CanonicalizationRule::verbs("w0", "w1", ["w2", "w3"]).unwrap();
        let (out, _) = apply_rule(pairs_from_tokens(&rows), &rule);
        for (p, (_, t)) in out.iter().zip(&rows) {
            prop_assert_eq!(p.target.tokens().len(), t.len());
        }
    }

    #[test]
    fn canonical_choice_survives_scaling(
        counts in prop::collection::vec((1usize..50, 0u32..100), 1..8),
        none in 0usize..20,
        factor in 1usize..10,
    ) {
        let make = |k: usize| {
            let candidates: Vec<Candidate> = counts
                .iter()
                .enumerate()
                .map(|(i, &(n, d))| Candidate {
                    target_word: format!("t{i}"),
                    cooccurrence: n * k,
                    source_count: 1000 * k,
                    target_count: n * k,
                    dice: d as f64 / 100.0,
                    attributed_count: n * k,
                })
                .collect();
            let total = candidates.iter().map(|c| c.attributed_count).sum::<usize>() + none * k;
            let entry = TranslationEntry { source_word: "s".into(), candidates, none_count: none * k, total_occurrences: total };
            TranslationTable { entries: [("s".to_string(), entry)].into_iter().collect() }
        };
        prop_assert_eq!(select_canonical(&make(1), "s").unwrap(), select_canonical(&make(factor), "s").unwrap());
    }

    #[test]
    fn mined_segments_match_rescan(sents in prop::collection::vec(prop::collection::vec(word(4), 1..10), 1..25)) {
        let config = PipelineConfig { ngram_min: 2, ngram_max: 4, min_support: 3, ..Default::default() };
        let source: Vec<Sentence> = sents.iter().map(|s| Sentence::from_tokens(s.clone())).collect();
        let article = ArticlePair::new("c", "T", source.clone(), source).unwrap();
        let mined = mine_topic_segments(&[article], "c", Side::Source, &config).unwrap();
        let got: BTreeMap<Vec<String>, usize> = mined.iter().map(|s| (s.ngram.clone(), s.count)).collect();
        prop_assert_eq!(got.len(), mined.len());
        prop_assert_eq!(got, brute_force_segments(&sents, &config));
        for s in &mined {
            prop_assert!((s.coverage - s.count as f64 / sents.len() as f64).abs() < 1e-12);
        }
    }
}
