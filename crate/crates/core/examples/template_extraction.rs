// Pair up sentences of comparable articles that share a mined template.
//
// ```bash
// cargo run --example template_extraction
// ```

use parcorp::synth::RegionsFixture;
use parcorp::wiki::{extract_all_by_template, mine_topic_segments, SegmentPair, Side};
use parcorp::PipelineConfig;

pub fn run_example() -> parcorp::Result<()> {
    let config = PipelineConfig::default();
    let articles = RegionsFixture::default().build(&config);

    let source = mine_topic_segments(&articles, "regions", Side::Source, &config)?;
    let target = mine_topic_segments(&articles, "regions", Side::Target, &config)?;
    let s = source.iter().find(|s| s.ngram == RegionsFixture::SOURCE_SEGMENT).expect("source template mined");
    let t = target.iter().find(|s| s.ngram == RegionsFixture::TARGET_SEGMENT).expect("target template mined");
    println!("{:?} ({} sentences) <-> {:?} ({} sentences)", s.ngram.join(" "), s.count, t.ngram.join(" "), t.count);

    let template = SegmentPair::from_segments(s, t)?;
    let extraction = extract_all_by_template(&articles, &template)?;
    println!(
        "{} pairs extracted; {} source and {} target matches left unpaired",
        extraction.pairs.len(),
        extraction.unpaired_source,
        extraction.unpaired_target
    );
    for pair in extraction.pairs.iter().take(3) {
        println!("  {}\n  {}", pair.source.raw(), pair.target.raw());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
