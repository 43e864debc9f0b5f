//! Corpus splitting, line-aligned bitext files and BLEU.

mod bitext;
mod bleu;
mod split;

pub use bitext::{export_parallel, import_parallel};
pub use bleu::{bleu_corpus, bleu_sentence, BleuReport, BleuStats, Smoothing, MAX_ORDER};
pub use split::{shuffled_order, split_corpus, SplitResult};
