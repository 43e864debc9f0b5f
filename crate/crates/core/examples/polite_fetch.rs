// Fetching article pages with a per-host delay and a request cap.
//
// A stand-in page source keeps this runnable offline; swap in
// `HttpPageSource::new()?` to fetch for real.
//
// ```bash
// cargo run --example polite_fetch
// ```

use std::collections::BTreeMap;
use std::time::Duration;

use parcorp::synth::article_html;
use parcorp::wiki::{build_article_url, fetch_categories, PageSource, PoliteFetcher};

struct CannedPages;

impl PageSource for CannedPages {
    fn get(&mut self, url: &str) -> parcorp::Result<Vec<u8>> {
        println!("GET {url}");
        let title = url.rsplit('/').next().unwrap_or_default();
        Ok(article_html(title, &["Usa ka lalawigan sa Pilipinas ang Abra .".to_string()]).into_bytes())
    }
}

pub fn run_example() -> parcorp::Result<()> {
    println!("{}", build_article_url("ceb", "Abra (lalawigan)")?);

    let mut categories = BTreeMap::new();
    categories.insert("provinces".to_string(), vec!["Abra (lalawigan)".to_string(), "Bohol".to_string()]);

    let out = tempfile::tempdir().map_err(|e| parcorp::Error::Argument(e.to_string()))?;
    let mut fetcher = PoliteFetcher::new(CannedPages, Duration::from_millis(20), 3);
    let summary = fetch_categories(&mut fetcher, &categories, &["ceb", "tl"], out.path())?;
    println!(
        "{} fetched, {} cached, {} failed, {} skipped by the cap of 3",
        summary.fetched.len(),
        summary.cached,
        summary.failed.len(),
        summary.skipped_by_cap
    );

    // a second run finds everything on disk and issues no requests
    let mut fetcher = PoliteFetcher::new(CannedPages, Duration::from_millis(20), 10);
    let again = fetch_categories(&mut fetcher, &categories, &["ceb", "tl"], out.path())?;
    println!("second run: {} cached, {} requests", again.cached, fetcher.issued());
    Ok(())
}

#[allow(dead_code)]
fn main() -> parcorp::Result<()> {
    run_example()
}
