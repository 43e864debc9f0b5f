// Seeded train/valid/test split, then a plain-text bitext export and
// re-import.
//
// ```bash
// cargo run --example split_and_export
// ```

use parcorp::bible::{align_by_verse, parse_bible_xml};
use parcorp::eval::{export_parallel, import_parallel, split_corpus};
use parcorp::synth::BibleFixture;
use parcorp::PipelineConfig;

pub fn run_example() -> parcorp::Result<()> {
    let config = PipelineConfig::default();
    let (ceb, tl) = BibleFixture { shared_verses: 1000, ..Default::default() }.generate();
    let (pairs, _) = align_by_verse(&parse_bible_xml(ceb.as_bytes(), None)?, &parse_bible_xml(tl.as_bytes(), None)?, &config)?;

    let split = split_corpus(pairs, config.split_ratios, config.rng_seed)?;
    println!("train {} / valid {} / test {} (seed {})", split.train.len(), split.valid.len(), split.test.len(), split.seed);

    let dir = tempfile::tempdir().map_err(|e| parcorp::Error::Argument(e.to_string()))?;
    let (src, tgt) = export_parallel(&split.test, &dir.path().join("test"))?;
    let back = import_parallel(&src, &tgt, &config)?;
    println!("exported {} and {}; {} lines read back", src.display(), tgt.display(), back.len());
    for (a, b) in split.test.iter().zip(&back) {
        assert_eq!(a.target.tokens(), b.target.tokens());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
