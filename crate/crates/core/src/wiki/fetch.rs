use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{build_article_url_for, title_file_stem};
use crate::error::{Error, Result};

/// Anything that can return the bytes behind a URL.
pub trait PageSource {
    fn get(&mut self, url: &str) -> Result<Vec<u8>>;
}

/// Blocking HTTP client.
pub struct HttpPageSource {
    client: reqwest::blocking::Client,
}

impl HttpPageSource {
    pub fn new() -> Result<Self> {
        let client = reqwest::blocking::Client::builder()
            .user_agent(concat!("parcorp/", env!("CARGO_PKG_VERSION")))
            .timeout(Duration::from_secs(30))
            .build()
            .map_err(|e| Error::Fetch { url: String::new(), message: e.to_string() })?;
        Ok(HttpPageSource { client })
    }
}

impl PageSource for HttpPageSource {
    fn get(&mut self, url: &str) -> Result<Vec<u8>> {
        let fail = |e: reqwest::Error| Error::Fetch { url: url.to_string(), message: e.to_string() };
        let response = self.client.get(url).send().map_err(fail)?.error_for_status().map_err(fail)?;
        Ok(response.bytes().map_err(fail)?.to_vec())
    }
}

/// Sequential fetcher: one request at a time, a minimum delay between two
/// requests to the same host, and a hard cap on the total number issued.
pub struct PoliteFetcher<S> {
    source: S,
    delay: Duration,
    max_requests: usize,
    issued: usize,
    last_hit: HashMap<String, Instant>,
}

impl<S: PageSource> PoliteFetcher<S> {
    pub fn new(source: S, delay: Duration, max_requests: usize) -> Self {
        PoliteFetcher { source, delay, max_requests, issued: 0, last_hit: HashMap::new() }
    }

    pub fn issued(&self) -> usize {
        self.issued
    }

    pub fn remaining(&self) -> usize {
        self.max_requests - self.issued
    }

    pub fn fetch(&mut self, url: &str) -> Result<Vec<u8>> {
        if self.issued >= self.max_requests {
            return Err(Error::Fetch { url: url.to_string(), message: "request cap reached".into() });
        }
        let host = host_of(url);
        if let Some(last) = self.last_hit.get(&host) {
            let since = last.elapsed();
            if since < self.delay {
                std::thread::sleep(self.delay - since);
            }
        }
        self.issued += 1;
        let result = self.source.get(url);
        self.last_hit.insert(host, Instant::now());
        result
    }
}

fn host_of(url: &str) -> String {
    let rest = url.split_once("://").map_or(url, |(_, r)| r);
    rest.split('/').next().unwrap_or("").to_string()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FetchSummary {
    pub fetched: Vec<PathBuf>,
    /// Files already on disk.
    pub cached: usize,
    pub failed: Vec<String>,
    /// Downloads not attempted because the request cap was reached.
    pub skipped_by_cap: usize,
}

/// Downloads every `(category, title, language)` page into
/// `<out_dir>/<category>/<title>.<lang>.html`, skipping files that exist.
pub fn fetch_categories<S: PageSource, L: AsRef<str>>(
    fetcher: &mut PoliteFetcher<S>,
    categories: &BTreeMap<String, Vec<String>>,
    languages: &[L],
    out_dir: &Path,
) -> Result<FetchSummary> {
    let mut summary = FetchSummary::default();
    for (category, titles) in categories {
        let dir = out_dir.join(category);
        std::fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        for title in titles {
            for lang in languages {
                let lang = lang.as_ref();
                let path = dir.join(format!("{}.{lang}.html", title_file_stem(title)));
                if path.exists() {
                    summary.cached += 1;
                    continue;
                }
                if fetcher.remaining() == 0 {
                    summary.skipped_by_cap += 1;
                    continue;
                }
                let url = build_article_url_for(languages, lang, title)?;
                match fetcher.fetch(&url) {
                    Ok(bytes) => {
                        std::fs::write(&path, bytes).map_err(|e| Error::io(&path, e))?;
                        summary.fetched.push(path);
                    }
                    Err(Error::Fetch { message, .. }) => summary.failed.push(format!("{url}: {message}")),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(summary)
}
