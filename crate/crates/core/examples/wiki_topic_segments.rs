// Load an offline directory of article pages and mine the frequent
// segments of one category.
//
// ```bash
// cargo run --example wiki_topic_segments
// ```

use parcorp::synth::{article_html, RegionsFixture};
use parcorp::wiki::{load_offline_articles, mine_topic_segments, SentenceSplitter, Side};
use parcorp::PipelineConfig;

pub fn run_example() -> parcorp::Result<()> {
    let root = tempfile::tempdir().map_err(|e| parcorp::Error::Argument(e.to_string()))?;
    let category = root.path().join("regions");
    std::fs::create_dir_all(&category).map_err(|e| parcorp::Error::Argument(e.to_string()))?;

    // The layout `wiki-fetch` produces: <root>/<category>/<title>.<lang>.html
    let fixture = RegionsFixture { sentences: 300, planted: 60, articles: 5, ..Default::default() };
    for (i, chunk) in fixture.sentence_pairs().chunks(60).enumerate() {
        let ceb: Vec<String> = chunk.iter().map(|p| p.0.clone()).collect();
        let tl: Vec<String> = chunk.iter().map(|p| p.1.clone()).collect();
        let _ = std::fs::write(category.join(format!("Rehiyon_{i}.ceb.html")), article_html("Rehiyon", &ceb));
        let _ = std::fs::write(category.join(format!("Rehiyon_{i}.tl.html")), article_html("Rehiyon", &tl));
    }

    let config = PipelineConfig { ngram_min: 4, ..PipelineConfig::default() };
    let (articles, report) = load_offline_articles(root.path(), "ceb", "tl", &SentenceSplitter::default(), &config)?;
    println!("{} article pairs, {} skipped", report.articles, report.skipped.len());

    for side in [Side::Source, Side::Target] {
        let segments = mine_topic_segments(&articles, "regions", side, &config)?;
        for s in segments.iter().take(3) {
            println!("{side:?}: {:?} in {} of {} sentences ({:.1}%)", s.ngram.join(" "), s.count, s.sentence_total, 100.0 * s.coverage);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
