// Parse two verse-indexed XML Bibles, pair them by verse id and drop
// repeated verses.
//
// ```bash
// cargo run --example bible_alignment
// ```

use parcorp::bible::{align_by_verse, dedupe_repetitive, BibleXmlParser};
use parcorp::synth::BibleFixture;
use parcorp::PipelineConfig;

pub fn run_example() -> parcorp::Result<()> {
    // 62 shared verses; one extra verse on each side; every 10th source
    // verse repeats the previous one.
    let fixture = BibleFixture { shared_verses: 62, source_only: 1, target_only: 1, repeat_every: Some(10), ..Default::default() };
    let (ceb_xml, tl_xml) = fixture.generate();

    let parser = BibleXmlParser::new().with_books(["GEN"]);
    let ceb = parser.parse(ceb_xml.as_bytes())?;
    let tl = parser.parse(tl_xml.as_bytes())?;
    println!("{}: {} verses, {}: {} verses", ceb.language_code, ceb.segments.len(), tl.language_code, tl.segments.len());

    let config = PipelineConfig::default();
    let (pairs, report) = align_by_verse(&ceb, &tl, &config)?;
    println!(
        "aligned {} pairs; source only {:?}; target only {:?}",
        report.pairs_emitted,
        report.source_only.iter().map(ToString::to_string).collect::<Vec<_>>(),
        report.target_only.iter().map(ToString::to_string).collect::<Vec<_>>()
    );

    let (kept, dropped) = dedupe_repetitive(pairs);
    println!("{} pairs after dropping {dropped} repeats", kept.len());
    for pair in kept.iter().take(3) {
        println!("  {}  {}\n  {:>9}{}", pair.origin.group(), pair.source.raw(), "", pair.target.raw());
    }
    assert_eq!(kept.len() + dropped, 62);
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
