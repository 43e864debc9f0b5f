//! Comparable Wikipedia article pairs: fetching, text extraction, sentence
//! splitting, topic-segment mining and template-based sentence extraction.

mod fetch;
mod segments;
mod sentences;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::OnceLock;

use percent_encoding::{utf8_percent_encode, AsciiSet, NON_ALPHANUMERIC};
use regex::Regex;
use scraper::{ElementRef, Html, Node, Selector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{clean, clean_bytes, PipelineConfig, Sentence};

pub use fetch::{fetch_categories, FetchSummary, HttpPageSource, PageSource, PoliteFetcher};
pub use segments::{
    extract_all_by_template, extract_parallel_by_template, mine_topic_segments, SegmentPair, Side,
    TemplateExtraction, TopicSegment,
};
pub use sentences::{split_sentences, SentenceSplitter};

pub const DEFAULT_LANGUAGES: &[&str] = &["ceb", "tl"];

/// RFC 3986 unreserved characters stay literal; everything else is encoded.
const PATH_SEGMENT: &AsciiSet = &NON_ALPHANUMERIC.remove(b'-').remove(b'.').remove(b'_').remove(b'~');

/// `https://<lang>.wikipedia.org/wiki/<title>` for one of [`DEFAULT_LANGUAGES`].
pub fn build_article_url(language_code: &str, article_title: &str) -> Result<String> {
    build_article_url_for(DEFAULT_LANGUAGES, language_code, article_title)
}

pub fn build_article_url_for<S: AsRef<str>>(
    languages: &[S],
    language_code: &str,
    article_title: &str,
) -> Result<String> {
    if !languages.iter().any(|l| l.as_ref() == language_code) {
        return Err(Error::Argument(format!("unsupported language code {language_code:?}")));
    }
    let title = article_title.trim();
    if title.is_empty() {
        return Err(Error::Argument("article title must not be empty".into()));
    }
    let title = title.replace(' ', "_");
    Ok(format!(
        "https://{language_code}.wikipedia.org/wiki/{}",
        utf8_percent_encode(&title, PATH_SEGMENT)
    ))
}

fn citation_pattern() -> &'static Regex {
    static CITE: OnceLock<Regex> = OnceLock::new();
    CITE.get_or_init(|| Regex::new(r"\[\d+\]").unwrap())
}

fn collect_text(el: ElementRef<'_>, out: &mut String) {
    for child in el.children() {
        match child.value() {
            Node::Text(t) => out.push_str(t),
            Node::Element(e) if matches!(e.name(), "script" | "style" | "noscript") => {}
            Node::Element(_) => {
                if let Some(inner) = ElementRef::wrap(child) {
                    collect_text(inner, out);
                }
            }
            _ => {}
        }
    }
}

/// Paragraph text of an article page, cleaned, without `[n]` citation markers.
pub fn extract_article_text(html: &[u8]) -> Result<String> {
    let html = std::str::from_utf8(html).map_err(|e| Error::Decode { offset: e.valid_up_to() })?;
    let document = Html::parse_document(html);
    let paragraphs = Selector::parse("p").expect("static selector");

    let mut text = String::new();
    for p in document.select(&paragraphs) {
        collect_text(p, &mut text);
        text.push('\n');
    }
    let text = clean(&citation_pattern().replace_all(&text, ""));
    if text.is_empty() {
        return Err(Error::EmptyArticle);
    }
    Ok(text)
}

/// One article available in both languages.
#[derive(Debug, Clone, PartialEq)]
pub struct ArticlePair {
    pub category: String,
    pub title: String,
    pub source_sentences: Vec<Sentence>,
    pub target_sentences: Vec<Sentence>,
}

impl ArticlePair {
    pub fn new(
        category: impl Into<String>,
        title: impl Into<String>,
        source_sentences: Vec<Sentence>,
        target_sentences: Vec<Sentence>,
    ) -> Result<Self> {
        let title = title.into();
        if source_sentences.is_empty() || target_sentences.is_empty() {
            return Err(Error::Argument(format!("article {title:?} needs sentences on both sides")));
        }
        Ok(ArticlePair { category: category.into(), title, source_sentences, target_sentences })
    }

    pub fn sentences(&self, side: Side) -> &[Sentence] {
        match side {
            Side::Source => &self.source_sentences,
            Side::Target => &self.target_sentences,
        }
    }
}

/// Line format for article interchange files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArticleRecord {
    pub category: String,
    pub title: String,
    pub source: Vec<String>,
    pub target: Vec<String>,
}

impl ArticleRecord {
    pub fn from_article(a: &ArticlePair) -> Self {
        ArticleRecord {
            category: a.category.clone(),
            title: a.title.clone(),
            source: a.source_sentences.iter().map(|s| s.raw().to_string()).collect(),
            target: a.target_sentences.iter().map(|s| s.raw().to_string()).collect(),
        }
    }

    pub fn into_article(self, config: &PipelineConfig) -> Result<ArticlePair> {
        let sentences = |v: Vec<String>| v.into_iter().map(|s| Sentence::new(s, config)).filter(|s| !s.is_empty()).collect();
        ArticlePair::new(self.category, self.title, sentences(self.source), sentences(self.target))
    }
}

/// Articles that could not be paired while loading a directory.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadReport {
    pub articles: usize,
    /// `category/title` entries missing a language or with no usable text.
    pub skipped: Vec<String>,
}

/// Loads `<root>/<category>/<title>.<lang>.html` (or `.txt`) files.
///
/// Categories and titles are visited in sorted order.
pub fn load_offline_articles(
    root: &Path,
    source_lang: &str,
    target_lang: &str,
    splitter: &SentenceSplitter,
    config: &PipelineConfig,
) -> Result<(Vec<ArticlePair>, LoadReport)> {
    let mut categories: Vec<_> = std::fs::read_dir(root)
        .map_err(|e| Error::io(root, e))?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().is_dir())
        .collect();
    categories.sort_by_key(|e| e.file_name());

    let mut articles = Vec::new();
    let mut report = LoadReport::default();
    for dir in categories {
        let category = dir.file_name().to_string_lossy().into_owned();
        // title -> lang -> path
        let mut files: BTreeMap<String, BTreeMap<String, std::path::PathBuf>> = BTreeMap::new();
        for entry in std::fs::read_dir(dir.path()).map_err(|e| Error::io(dir.path(), e))? {
            let path = entry.map_err(|e| Error::io(dir.path(), e))?.path();
            let Some(name) = path.file_name().and_then(|n| n.to_str()) else { continue };
            let Some((stem, ext)) = name.rsplit_once('.') else { continue };
            if ext != "html" && ext != "txt" {
                continue;
            }
            let Some((title, lang)) = stem.rsplit_once('.') else { continue };
            files.entry(title.to_string()).or_default().insert(lang.to_string(), path);
        }

        for (title, langs) in files {
            let read = |lang: &str| -> Result<Option<Vec<Sentence>>> {
                let Some(path) = langs.get(lang) else { return Ok(None) };
                let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
                let text = if path.extension().is_some_and(|e| e == "html") {
                    match extract_article_text(&bytes) {
                        Ok(t) => t,
                        Err(Error::EmptyArticle) => return Ok(None),
                        Err(e) => return Err(e),
                    }
                } else {
                    clean_bytes(&bytes)?
                };
                Ok(Some(splitter.split(&text, config)))
            };
            match (read(source_lang)?, read(target_lang)?) {
                (Some(s), Some(t)) if !s.is_empty() && !t.is_empty() => {
                    articles.push(ArticlePair::new(category.clone(), title, s, t)?);
                }
                _ => report.skipped.push(format!("{category}/{title}")),
            }
        }
    }
    report.articles = articles.len();
    Ok((articles, report))
}

/// File stem used for a fetched title: spaces become underscores and path
/// separators are escaped.
pub fn title_file_stem(title: &str) -> String {
    title.trim().replace(' ', "_").replace('/', "%2F")
}
