mod support;

use parcorp::eval::{bleu_corpus, bleu_sentence};
use support::{oracle_corpus_bleu, oracle_sentence_bleu, random_bleu_corpus, Gen};

fn toks(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

#[test]
fn corpus_bleu_matches_brute_force() {
    let mut g = Gen::new(11);
    for _ in 0..300 {
        let (h, r) = random_bleu_corpus(&mut g, 10, 12, 8);
        let got = bleu_corpus(&h, &r).unwrap().score;
        let want = oracle_corpus_bleu(&h, &r);
        assert!((got - want).abs() < 1e-6, "{got} vs {want} on {h:?} / {r:?}");
    }
}

#[test]
fn sentence_bleu_matches_brute_force() {
    let mut g = Gen::new(12);
    for _ in 0..300 {
        let (h, r) = random_bleu_corpus(&mut g, 1, 12, 8);
        let got = bleu_sentence(&h[0], &r[0]).unwrap().score;
        let want = oracle_sentence_bleu(&h[0], &r[0]);
        assert!((got - want).abs() < 1e-6, "{got} vs {want} on {h:?} / {r:?}");
    }
}

#[test]
fn worked_example() {
    // all four precisions are 1, BP = exp(1 - 5/4)
    let h = vec![toks("a b c d")];
    let r = vec![toks("a b c d e")];
    let expected = 100.0 * (-0.25f64).exp();
    assert!((oracle_corpus_bleu(&h, &r) - expected).abs() < 1e-12);
    assert!((bleu_corpus(&h, &r).unwrap().score - expected).abs() < 1e-12);
}

#[test]
fn sentence_scores_that_must_be_zero() {
    // no unigram overlap: smoothing does not apply
    assert_eq!(bleu_sentence(&toks("x y z"), &toks("a b c")).unwrap().score, 0.0);
    assert_eq!(oracle_sentence_bleu(&toks("x y z"), &toks("a b c")), 0.0);
}

#[test]
fn longer_hypothesis_has_no_penalty() {
    let report = bleu_corpus(&[toks("a b c d e f")], &[toks("a b c d")]).unwrap();
    assert_eq!(report.brevity_penalty, 1.0);
}
