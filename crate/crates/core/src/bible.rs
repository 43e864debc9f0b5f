//! Verse-indexed Bible XML ingestion and cross-language verse alignment.

use std::collections::{BTreeSet, HashMap, HashSet};

use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{clean, Origin, PipelineConfig, Sentence, SentencePair, VerseId};

/// How a segment `id` attribute encodes its verse, e.g. `b.GEN.1.3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdScheme {
    pub prefix: String,
    pub separator: char,
}

impl Default for IdScheme {
    fn default() -> Self {
        IdScheme { prefix: "b".into(), separator: '.' }
    }
}

impl IdScheme {
    pub fn parse(&self, id: &str) -> Option<VerseId> {
        let mut parts = id.split(self.separator);
        if parts.next()? != self.prefix {
            return None;
        }
        let book = parts.next()?;
        let chapter = parts.next()?.parse().ok()?;
        let verse = parts.next()?.parse().ok()?;
        if parts.next().is_some() {
            return None;
        }
        VerseId::new(book, chapter, verse).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub id: VerseId,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonolingualDocument {
    pub language_code: String,
    pub segments: Vec<Segment>,
    /// Segments whose id did not parse under the id scheme.
    pub skipped_ids: usize,
    /// Segments that were empty after cleaning.
    pub empty_segments: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignmentReport {
    pub pairs_emitted: usize,
    pub source_only: Vec<VerseId>,
    pub target_only: Vec<VerseId>,
    pub duplicates_dropped: usize,
}

/// Reader for `<seg id="b.BOOK.C.V">` style corpora.
#[derive(Debug, Clone, Default)]
pub struct BibleXmlParser {
    pub scheme: IdScheme,
    pub book_filter: Option<BTreeSet<String>>,
    pub segment_tag: Option<String>,
}

impl BibleXmlParser {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_books<I, S>(mut self, books: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.book_filter = Some(books.into_iter().map(Into::into).collect());
        self
    }

    pub fn with_scheme(mut self, scheme: IdScheme) -> Self {
        self.scheme = scheme;
        self
    }

    fn tag(&self) -> &[u8] {
        self.segment_tag.as_deref().unwrap_or("seg").as_bytes()
    }

    pub fn parse(&self, bytes: &[u8]) -> Result<MonolingualDocument> {
        let mut reader = Reader::from_reader(bytes);
        let mut buf = Vec::new();

        let mut language_code = None;
        let mut segments = Vec::new();
        let mut seen = HashSet::new();
        let mut skipped_ids = 0;
        let mut empty_segments = 0;

        // (parsed id, nesting depth inside the segment, accumulated text)
        let mut current: Option<(Option<VerseId>, usize, String)> = None;

        loop {
            let event = reader.read_event_into(&mut buf).map_err(|e| Error::Xml {
                line: line_at(bytes, reader.error_position() as usize),
                message: e.to_string(),
            })?;
            match event {
                Event::Start(e) => {
                    if let Some((_, depth, _)) = current.as_mut() {
                        *depth += 1;
                    } else if e.name().as_ref() == self.tag() {
                        current = Some((self.segment_id(&e, &mut skipped_ids), 0, String::new()));
                    } else if language_code.is_none() {
                        language_code = language_attr(&e);
                    }
                }
                Event::Empty(e) => {
                    if current.is_none() && e.name().as_ref() == self.tag() {
                        // An empty segment still has to have a valid id to count as empty.
                        if self.segment_id(&e, &mut skipped_ids).is_some() {
                            empty_segments += 1;
                        }
                    } else if current.is_none() && language_code.is_none() {
                        language_code = language_attr(&e);
                    }
                }
                Event::Text(t) => {
                    if let Some((_, _, text)) = current.as_mut() {
                        let unescaped = t.unescape().map_err(|e| Error::Xml {
                            line: line_at(bytes, reader.buffer_position() as usize),
                            message: e.to_string(),
                        })?;
                        text.push_str(&unescaped);
                    }
                }
                Event::CData(t) => {
                    if let Some((_, _, text)) = current.as_mut() {
                        text.push_str(&String::from_utf8_lossy(&t));
                    }
                }
                Event::End(_) => {
                    if let Some((_, depth, text)) = current.as_mut() {
                        if *depth > 0 {
                            *depth -= 1;
                            text.push(' ');
                            continue;
                        }
                        let (id, _, text) = current.take().expect("segment open");
                        let Some(id) = id else { continue };
                        if !self.passes_filter(&id) {
                            continue;
                        }
                        let text = clean(&text);
                        if text.is_empty() {
                            empty_segments += 1;
                            continue;
                        }
                        if !seen.insert(id.clone()) {
                            return Err(Error::DuplicateVerse(id));
                        }
                        segments.push(Segment { id, text });
                    }
                }
                Event::Eof => break,
                _ => {}
            }
            buf.clear();
        }

        if segments.is_empty() {
            return Err(Error::EmptyDocument);
        }
        Ok(MonolingualDocument {
            language_code: language_code.unwrap_or_else(|| "und".into()),
            segments,
            skipped_ids,
            empty_segments,
        })
    }

    fn segment_id(&self, e: &BytesStart<'_>, skipped: &mut usize) -> Option<VerseId> {
        let id = e
            .attributes()
            .flatten()
            .find(|a| a.key.as_ref() == b"id")
            .and_then(|a| a.unescape_value().ok().map(|v| v.into_owned()));
        let parsed = id.as_deref().and_then(|id| self.scheme.parse(id));
        if parsed.is_none() {
            *skipped += 1;
        }
        parsed
    }

    fn passes_filter(&self, id: &VerseId) -> bool {
        self.book_filter.as_ref().is_none_or(|books| books.contains(id.book()))
    }
}

fn language_attr(e: &BytesStart<'_>) -> Option<String> {
    e.attributes().flatten().find_map(|a| match a.key.as_ref() {
        b"iso639" | b"xml:lang" | b"lang" => a.unescape_value().ok().map(|v| v.into_owned()),
        _ => None,
    })
}

fn line_at(bytes: &[u8], offset: usize) -> usize {
    let end = offset.min(bytes.len());
    1 + bytes[..end].iter().filter(|&&b| b == b'\n').count()
}

/// Parses with the default `b.BOOK.C.V` scheme.
pub fn parse_bible_xml(bytes: &[u8], book_filter: Option<&BTreeSet<String>>) -> Result<MonolingualDocument> {
    let parser = BibleXmlParser { book_filter: book_filter.cloned(), ..Default::default() };
    parser.parse(bytes)
}

/// Pairs the verses present in both documents.
///
/// Output is ordered by book (in order of first appearance in `source`), then
/// chapter and verse. Verses found on one side only go to the report.
pub fn align_by_verse(
    source: &MonolingualDocument,
    target: &MonolingualDocument,
    config: &PipelineConfig,
) -> Result<(Vec<SentencePair>, AlignmentReport)> {
    let target_text: HashMap<&VerseId, &str> =
        target.segments.iter().map(|s| (&s.id, s.text.as_str())).collect();
    let source_ids: HashSet<&VerseId> = source.segments.iter().map(|s| &s.id).collect();

    let mut book_rank: HashMap<&str, usize> = HashMap::new();
    for seg in &source.segments {
        let next = book_rank.len();
        book_rank.entry(seg.id.book()).or_insert(next);
    }

    let mut shared: Vec<(&VerseId, &str, &str)> = Vec::new();
    let mut source_only = Vec::new();
    for seg in &source.segments {
        match target_text.get(&seg.id) {
            Some(t) => shared.push((&seg.id, &seg.text, t)),
            None => source_only.push(seg.id.clone()),
        }
    }
    shared.sort_by_key(|(id, _, _)| (book_rank[id.book()], id.chapter(), id.verse()));

    let target_only = target
        .segments
        .iter()
        .filter(|s| !source_ids.contains(&s.id))
        .map(|s| s.id.clone())
        .collect();

    let pairs = shared
        .into_iter()
        .enumerate()
        .map(|(i, (id, src, tgt))| {
            SentencePair::new(
                i,
                Origin::BibleVerse(id.clone()),
                Sentence::new(src, config),
                Sentence::new(tgt, config),
            )
        })
        .collect::<Result<Vec<_>>>()?;

    let report = AlignmentReport {
        pairs_emitted: pairs.len(),
        source_only,
        target_only,
        duplicates_dropped: 0,
    };
    Ok((pairs, report))
}

/// Drops every pair whose source tokens repeat an earlier pair's, keeping the
/// first occurrence. Pair ids are left untouched.
pub fn dedupe_repetitive(pairs: Vec<SentencePair>) -> (Vec<SentencePair>, usize) {
    let before = pairs.len();
    let mut seen: HashSet<Vec<String>> = HashSet::new();
    let kept: Vec<SentencePair> = pairs
        .into_iter()
        .filter(|p| seen.insert(p.source.tokens().to_vec()))
        .collect();
    let dropped = before - kept.len();
    (kept, dropped)
}
