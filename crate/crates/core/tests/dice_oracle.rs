mod support;

use std::collections::BTreeSet;

use parcorp::consistency::build_translation_table;
use parcorp::PipelineConfig;
use support::{oracle_entry, pairs_from_tokens, random_dice_corpus, Gen};

fn check(seed: u64, config: &PipelineConfig) {
    let mut g = Gen::new(seed);
    let rows = random_dice_corpus(&mut g, 50, 30);
    let pairs = pairs_from_tokens(&rows);
    let watch: BTreeSet<String> = (0..4).map(|_| format!("w{}", g.range(0, 35))).collect();
    let table = build_translation_table(&pairs, &watch, config).unwrap();
    for word in &watch {
        let entry = table.get(word).unwrap();
        let oracle = oracle_entry(&rows, word, config);
        assert_eq!(entry.total_occurrences, oracle.total_occurrences, "{word}");
        assert_eq!(entry.none_count, oracle.none_count, "{word}");
        assert_eq!(entry.candidates.len(), oracle.candidates.len(), "{word}");
        for (c, o) in entry.candidates.iter().zip(&oracle.candidates) {
            assert_eq!(
                (&c.target_word, c.cooccurrence, c.source_count, c.target_count, c.attributed_count),
                (&o.target_word, o.cooccurrence, o.source_count, o.target_count, o.attributed_count),
                "{word}"
            );
            assert_eq!(c.dice, o.dice);
        }
        let attributed: usize = entry.candidates.iter().map(|c| c.attributed_count).sum();
        assert_eq!(attributed + entry.none_count, entry.total_occurrences);
    }
}

#[test]
fn table_matches_exhaustive_recount() {
    for seed in 0..200 {
        check(seed, &PipelineConfig::default());
    }
}

#[test]
fn small_cap_and_high_threshold() {
    let config = PipelineConfig { max_candidates: 2, dice_threshold: 0.4, ..Default::default() };
    for seed in 0..100 {
        check(seed, &config);
    }
}
