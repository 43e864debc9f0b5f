//! Deterministic synthetic fixtures: verse-indexed XML in two languages and
//! comparable article categories with planted templates.
//!
//! The generated text imitates Cebuano/Filipino Bible and LGU article
//! phrasing closely enough to exercise every stage of the pipeline, but it is
//! not real data.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::text::{PipelineConfig, Sentence};
use crate::wiki::ArticlePair;

struct Dice(ChaCha8Rng);

impl Dice {
    fn new(seed: u64) -> Self {
        Dice(ChaCha8Rng::seed_from_u64(seed))
    }

    fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    fn pick<'a>(&mut self, items: &[&'a str]) -> &'a str {
        items[self.below(items.len())]
    }

    /// Picks from weighted choices; weights sum to 100.
    fn weighted<'a>(&mut self, choices: &[(&'a str, usize)]) -> &'a str {
        let mut roll = self.below(100);
        for &(item, w) in choices {
            if roll < w {
                return item;
            }
            roll -= w;
        }
        choices.last().map(|c| c.0).unwrap_or("")
    }
}

/// Source word, target word. Content words only; the watched words below
/// are added separately.
const LEXICON: &[(&str, &str)] = &[
    ("ug", "at"),
    ("ang", "ang"),
    ("yuta", "lupa"),
    ("langit", "langit"),
    ("tawo", "tao"),
    ("babaye", "babae"),
    ("kahoy", "kahoy"),
    ("bunga", "bunga"),
    ("adlaw", "araw"),
    ("gabii", "gabi"),
    ("tubig", "tubig"),
    ("mga", "mga"),
    ("anak", "anak"),
    ("amahan", "ama"),
    ("balay", "bahay"),
    ("nakita", "nakita"),
    ("maayo", "mabuti"),
    ("dako", "dakila"),
    ("binhi", "binhi"),
    ("tanaman", "halamanan"),
    ("bitin", "ahas"),
    ("mitubag", "sumagot"),
    ("miingon", "sinabi"),
    ("kaniya", "kaniya"),
    ("sa", "sa"),
    ("ni", "ni"),
    ("pito", "pito"),
    ("tuig", "taon"),
    ("damgo", "panaginip"),
    ("faraon", "faraon"),
];

const NAME_VARIANTS: &[(&str, usize)] = &[("dios", 60), ("panginoon", 20), ("jehova", 10), ("", 10)];
const JEHOVA_VARIANTS: &[(&str, usize)] = &[("jehova", 55), ("panginoon", 25), ("dios", 10), ("", 10)];
const MOISES_VARIANTS: &[(&str, usize)] = &[("moises", 70), ("siya", 15), ("", 15)];
const NGADTO_VARIANTS: &[(&str, usize)] =
    &[("paroon", 45), ("pumaroon", 20), ("yumaon", 12), ("bumaba", 8), ("napasa", 5), ("", 10)];

/// Two-language verse-indexed XML corpus.
#[derive(Debug, Clone)]
pub struct BibleFixture {
    /// Verses present in both languages.
    pub shared_verses: usize,
    pub verses_per_chapter: usize,
    /// Extra verses only in the source (appended after the shared ones).
    pub source_only: usize,
    /// Extra verses only in the target.
    pub target_only: usize,
    /// Every n-th shared verse repeats the previous verse's source text.
    pub repeat_every: Option<usize>,
    pub seed: u64,
}

impl Default for BibleFixture {
    fn default() -> Self {
        BibleFixture {
            shared_verses: 200,
            verses_per_chapter: 31,
            source_only: 0,
            target_only: 0,
            repeat_every: None,
            seed: 1,
        }
    }
}

impl BibleFixture {
    fn verse_id(&self, index: usize) -> (usize, usize) {
        (index / self.verses_per_chapter + 1, index % self.verses_per_chapter + 1)
    }

    fn verse(&self, dice: &mut Dice) -> (String, String) {
        let len = 6 + dice.below(10);
        let mut source: Vec<&str> = Vec::with_capacity(len + 2);
        let mut target: Vec<&str> = Vec::with_capacity(len + 2);
        for _ in 0..len {
            // Watched words are rare per token, as names are in running text.
            let roll = dice.below(1000);
            let (s, t) = match roll {
                0..=4 => ("dios", dice.weighted(NAME_VARIANTS)),
                5..=7 => ("jehova", dice.weighted(JEHOVA_VARIANTS)),
                8..=10 => ("moises", dice.weighted(MOISES_VARIANTS)),
                11..=15 => ("ngadto", dice.weighted(NGADTO_VARIANTS)),
                _ => LEXICON[dice.below(LEXICON.len())],
            };
            source.push(s);
            if !t.is_empty() {
                target.push(t);
            }
        }
        if target.is_empty() {
            target.push("at");
        }
        let end = dice.pick(&[".", ":", ";", "."]);
        (format!("{} {end}", source.join(" ")), format!("{} {end}", target.join(" ")))
    }

    /// Generates `(source_xml, target_xml)`.
    pub fn generate(&self) -> (String, String) {
        let mut dice = Dice::new(self.seed);
        let mut source = Vec::new();
        let mut target = Vec::new();
        let mut previous_source = String::new();
        for i in 0..self.shared_verses {
            let (mut s, t) = self.verse(&mut dice);
            if let Some(n) = self.repeat_every {
                if i > 0 && i % n == 0 {
                    s = previous_source.clone();
                }
            }
            previous_source = s.clone();
            source.push((i, s));
            target.push((i, t));
        }
        for k in 0..self.source_only {
            let (s, _) = self.verse(&mut dice);
            source.push((self.shared_verses + k, s));
        }
        for k in 0..self.target_only {
            let (_, t) = self.verse(&mut dice);
            target.push((self.shared_verses + self.source_only + k, t));
        }
        (self.xml("ceb", &source), self.xml("tl", &target))
    }

    fn xml(&self, lang: &str, verses: &[(usize, String)]) -> String {
        let mut out = String::from("<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<cesDoc version=\"4.0\">\n");
        out.push_str(&format!("<cesHeader><language iso639=\"{lang}\"/></cesHeader>\n<text><body>\n"));
        out.push_str("<div type=\"book\" id=\"b.GEN\">\n");
        for (index, text) in verses {
            let (c, v) = self.verse_id(*index);
            out.push_str(&format!("<seg id=\"b.GEN.{c}.{v}\" type=\"verse\">\n  {text}\n</seg>\n"));
        }
        out.push_str("</div>\n</body></text>\n</cesDoc>\n");
        out
    }
}

const FILLER: &[&str] = &[
    "ang", "sa", "mga", "nga", "usa", "ka", "lungsod", "lalawigan", "pulo", "dagat", "bukid", "tawo", "lumulupyo",
    "gidak-on", "kilometro", "amihanan", "habagatan", "sidlakan", "kasadpan", "dakbayan", "kabanikanhan", "ilang",
    "pinulongan", "sinultihan", "tubig", "suba", "baybayon", "kinaiyahan", "negosyo", "uma", "humay", "mais",
];
const PLACES: &[&str] = &[
    "Caraga", "Calabarzon", "Mimaropa", "Bicol", "Cordillera", "Ilocos", "Soccsksargen", "Davao", "Zamboanga",
    "Samar", "Leyte", "Bohol", "Negros", "Panay", "Palawan", "Mindoro",
];
const TAILS: &[&str] = &[".", "nga makita sa Mindanao .", "sa Luzon .", ", usa ka dako nga rehiyon .", "nga adunay lima ka lalawigan ."];
const TARGET_FILLER: &[&str] = &[
    "ang", "ng", "mga", "na", "isang", "lungsod", "lalawigan", "pulo", "dagat", "bundok", "tao", "populasyon",
    "hilaga", "timog", "silangan", "kanluran", "wika", "ilog", "baybayin", "kalikasan", "kalakalan", "palay", "mais",
];
const TARGET_TAILS: &[&str] = &[".", "na matatagpuan sa Mindanao .", "sa Luzon .", ", isang malaking rehiyon ."];

/// A category of comparable articles where exactly `planted` source
/// sentences contain `maoy rehiyon sa pilipinas` (and their targets
/// `ay isang rehiyon sa pilipinas`). The words before and after the planted
/// segment vary, so no longer n-gram shares its count.
#[derive(Debug, Clone)]
pub struct RegionsFixture {
    pub category: String,
    pub sentences: usize,
    pub planted: usize,
    pub articles: usize,
    pub seed: u64,
}

impl Default for RegionsFixture {
    fn default() -> Self {
        RegionsFixture { category: "regions".into(), sentences: 1537, planted: 205, articles: 17, seed: 7 }
    }
}

impl RegionsFixture {
    pub const SOURCE_SEGMENT: [&'static str; 4] = ["maoy", "rehiyon", "sa", "pilipinas"];
    pub const TARGET_SEGMENT: [&'static str; 5] = ["ay", "isang", "rehiyon", "sa", "pilipinas"];

    /// Raw `(source, target)` sentences in article order.
    pub fn sentence_pairs(&self) -> Vec<(String, String)> {
        assert!(self.planted <= self.sentences);
        let mut dice = Dice::new(self.seed);
        // Spread the planted sentences evenly.
        let mut planted_at = vec![false; self.sentences];
        for k in 0..self.planted {
            planted_at[k * self.sentences / self.planted.max(1)] = true;
        }
        planted_at
            .into_iter()
            .map(|planted| {
                if planted {
                    let place = dice.pick(PLACES);
                    let lead = dice.pick(&["Ang", "Ang rehiyon sa", "Kini nga", "Ang Administratibong Rehiyon sa"]);
                    let tail = dice.pick(TAILS);
                    let ttail = dice.pick(TARGET_TAILS);
                    (
                        format!("{lead} {place} maoy rehiyon sa Pilipinas {tail}"),
                        format!("Ang {place} ay isang rehiyon sa Pilipinas {ttail}"),
                    )
                } else {
                    let len = 5 + dice.below(12);
                    let s: Vec<&str> = (0..len).map(|_| dice.pick(FILLER)).collect();
                    let t: Vec<&str> = (0..len).map(|_| dice.pick(TARGET_FILLER)).collect();
                    (format!("Ang {} .", s.join(" ")), format!("Ang {} .", t.join(" ")))
                }
            })
            .collect()
    }

    pub fn build(&self, config: &PipelineConfig) -> Vec<ArticlePair> {
        let pairs = self.sentence_pairs();
        let per_article = pairs.len().div_ceil(self.articles.max(1));
        pairs
            .chunks(per_article.max(1))
            .enumerate()
            .map(|(i, chunk)| {
                let source = chunk.iter().map(|(s, _)| Sentence::new(s, config)).collect();
                let target = chunk.iter().map(|(_, t)| Sentence::new(t, config)).collect();
                ArticlePair::new(self.category.clone(), format!("Article_{i}"), source, target)
                    .expect("fixture sentences are non-empty")
            })
            .collect()
    }
}

/// Wraps sentences in a minimal article page with navigation, a script and
/// citation markers, as a fetched page would have.
pub fn article_html(title: &str, sentences: &[String]) -> String {
    let mut body = String::new();
    for (i, chunk) in sentences.chunks(3).enumerate() {
        body.push_str(&format!("<p>{}<sup>[{}]</sup></p>\n", chunk.join(" "), i + 1));
    }
    format!(
        "<!DOCTYPE html><html><head><title>{title}</title><script>var wg = 1;</script></head>\
         <body><div id=\"nav\">Panid</div><h1>{title}</h1>\n{body}</body></html>\n"
    )
}
