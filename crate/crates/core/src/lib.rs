//! Parallel corpus construction for low-resource language pairs.
//!
//! The crate covers the whole path from raw sources to an NMT-ready bitext:
//!
//! * [`text`]: the shared data model, [`clean`] and [`tokenize`].
//! * [`bible`]: verse-indexed XML ingestion, verse alignment, deduplication.
//! * [`consistency`]: co-occurrence translation tables and target-side
//!   canonicalization of inconsistently translated words.
//! * [`wiki`]: comparable article pairs, sentence splitting, topic-segment
//!   mining and template-based sentence extraction.
//! * [`eval`]: train/valid/test splitting, bitext export and BLEU.
//! * [`cli`]: the `parcorp` command line.
//!
//! ```
//! use parcorp::{clean, tokenize, PipelineConfig};
//!
//! let config = PipelineConfig::default();
//! let tokens = tokenize(&clean("<seg>Ug mitubag si jose kang faraon: ang damgo</seg>"), &config);
//! assert_eq!(tokens[6], ":");
//! ```

pub mod bible;
pub mod cli;
pub mod consistency;
pub mod corpus;
mod error;
pub mod eval;
pub mod synth;
pub mod text;
pub mod wiki;

pub use error::{Error, Result};
pub use text::{clean, clean_bytes, detokenize, tokenize, Origin, PipelineConfig, Sentence, SentencePair, VerseId};
