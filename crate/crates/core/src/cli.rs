//! The `parcorp` command line.
//!
//! Every subcommand reads and writes explicit paths and leaves a
//! [`RunManifest`] next to its primary output (or `<subcommand>.manifest.json`
//! in the working directory when it has none, or at `--manifest`).
//!
//! Configuration comes from the TOML file named by `--config` or the
//! `PARCORP_CONFIG` environment variable; individual flags override it.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bible::{align_by_verse, dedupe_repetitive, BibleXmlParser, IdScheme, MonolingualDocument};
use crate::consistency::{
    apply_rules, build_translation_table, change_log_jsonl, detect_inconsistencies, parse_rules, select_canonical,
    Inconsistency, TranslationTable,
};
use crate::corpus::{read_articles, read_corpus, read_json, write_articles, write_corpus, write_json, write_text};
use crate::eval::{bleu_corpus, bleu_sentence, export_parallel, import_parallel, split_corpus};
use crate::text::{clean, tokenize, PipelineConfig, SentencePair};
use crate::wiki::{
    extract_all_by_template, fetch_categories, load_offline_articles, mine_topic_segments, HttpPageSource,
    PoliteFetcher, SegmentPair, SentenceSplitter, Side,
};

pub const CONFIG_ENV: &str = "PARCORP_CONFIG";

#[derive(Debug, Parser)]
#[command(name = "parcorp", version, about = "Build, correct, mine and evaluate parallel corpora")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// TOML config file (overrides $PARCORP_CONFIG).
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Where to write the run manifest.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    dice_threshold: Option<f64>,
    #[arg(long, global = true)]
    max_candidates: Option<usize>,
    #[arg(long, global = true)]
    ngram_min: Option<usize>,
    #[arg(long, global = true)]
    ngram_max: Option<usize>,
    #[arg(long, global = true)]
    min_support: Option<usize>,
    /// Keep letter case when tokenizing.
    #[arg(long, global = true)]
    keep_case: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse one verse-indexed XML file into a document JSON.
    IngestBible {
        #[arg(long)]
        xml: PathBuf,
        /// Comma-separated book codes to keep, e.g. GEN.
        #[arg(long, value_delimiter = ',')]
        books: Vec<String>,
        /// Language code to record when the file does not declare one.
        #[arg(long)]
        lang: Option<String>,
        #[arg(long, default_value = "b")]
        id_prefix: String,
        #[arg(long, default_value_t = '.')]
        id_separator: char,
        #[arg(long)]
        out: PathBuf,
    },
    /// Pair two documents by verse id.
    Align {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        report: PathBuf,
        /// Also drop repeated source sentences.
        #[arg(long)]
        dedupe: bool,
    },
    /// Drop pairs whose source repeats an earlier pair's source.
    Dedupe {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the co-occurrence translation table for watched words.
    Table {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        watch: Vec<String>,
        /// File with one watched word per line.
        #[arg(long)]
        watch_file: Option<PathBuf>,
        /// TSV output.
        #[arg(long)]
        out: PathBuf,
        /// Full table as JSON, for `detect`.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List inconsistently translated words from a table JSON.
    Detect {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, default_value_t = 1)]
        min_total: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply canonicalization rules to the target side.
    Canonicalize {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Change log (JSON lines); defaults to `<out>.changes.jsonl`.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// Download article pages into the offline layout.
    WikiFetch {
        #[arg(long, value_delimiter = ',', default_value = "ceb,tl")]
        lang_codes: Vec<String>,
        /// TOML table: category = ["Title", ...]
        #[arg(long)]
        category_file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        delay_ms: u64,
        #[arg(long, default_value_t = 1000)]
        max_requests: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Turn an offline article directory into an article file.
    WikiExtract {
        #[arg(long)]
        root: PathBuf,
        #[arg(long, default_value = "ceb")]
        source_lang: String,
        #[arg(long, default_value = "tl")]
        target_lang: String,
        /// Extra abbreviations, one per line.
        #[arg(long)]
        abbreviations: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Mine frequent topic segments per category.
    MineSegments {
        #[arg(long)]
        articles: PathBuf,
        /// Categories to mine (default: all).
        #[arg(long, value_delimiter = ',')]
        category: Vec<String>,
        /// source, target or both.
        #[arg(long, default_value = "both")]
        side: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Extract sentence pairs that share a segment template.
    ExtractTemplate {
        #[arg(long)]
        articles: PathBuf,
        #[arg(long)]
        segment_pair: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Shuffle and split into train/valid/test corpus files.
    Split {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// train,valid,test
        #[arg(long, value_delimiter = ',')]
        ratios: Vec<f64>,
    },
    /// Write `<prefix>.src` / `<prefix>.tgt`.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        prefix: PathBuf,
    },
    /// Read a line-aligned bitext into a corpus file.
    Import {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        tgt: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Score hypotheses against references, one sentence per line.
    Bleu {
        #[arg(long)]
        hyp: PathBuf,
        #[arg(long = "ref")]
        reference: PathBuf,
        /// Also print smoothed per-sentence scores.
        #[arg(long)]
        sentence: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Pair counts per category (wiki) or book (Bible).
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::IngestBible { .. } => "ingest-bible",
            Command::Align { .. } => "align",
            Command::Dedupe { .. } => "dedupe",
            Command::Table { .. } => "table",
            Command::Detect { .. } => "detect",
            Command::Canonicalize { .. } => "canonicalize",
            Command::WikiFetch { .. } => "wiki-fetch",
            Command::WikiExtract { .. } => "wiki-extract",
            Command::MineSegments { .. } => "mine-segments",
            Command::ExtractTemplate { .. } => "extract-template",
            Command::Split { .. } => "split",
            Command::Export { .. } => "export",
            Command::Import { .. } => "import",
            Command::Bleu { .. } => "bleu",
            Command::Stats { .. } => "stats",
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Counts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_in: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_out: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrections_applied: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segments_mined: Option<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub other: BTreeMap<String, usize>,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub config: PipelineConfig,
    pub inputs: Vec<PathBuf>,
    pub outputs: Vec<PathBuf>,
    pub counts: Counts,
    pub wall_time_ms: u128,
}

#[derive(Default)]
struct Outcome {
    inputs: Vec<PathBuf>,
    outputs: Vec<PathBuf>,
    counts: Counts,
    /// Directory the manifest goes in when there is no single output file.
    manifest_dir: Option<PathBuf>,
}

fn load_config(global: &GlobalArgs) -> anyhow::Result<PipelineConfig> {
    let mut config = match &global.config {
        Some(path) => std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?
            .parse::<PipelineConfig>()
            .with_context(|| format!("in config {}", path.display()))?,
        None => PipelineConfig::default(),
    };
    if let Some(v) = global.seed {
        config.rng_seed = v;
    }
    if let Some(v) = global.dice_threshold {
        config.dice_threshold = v;
    }
    if let Some(v) = global.max_candidates {
        config.max_candidates = v;
    }
    if let Some(v) = global.ngram_min {
        config.ngram_min = v;
    }
    if let Some(v) = global.ngram_max {
        config.ngram_max = v;
    }
    if let Some(v) = global.min_support {
        config.min_support = v;
    }
    if global.keep_case {
        config.lowercase = false;
    }
    config.validate()?;
    Ok(config)
}

fn manifest_path(global: &GlobalArgs, name: &str, outcome: &Outcome) -> PathBuf {
    if let Some(p) = &global.manifest {
        return p.clone();
    }
    if let Some(dir) = &outcome.manifest_dir {
        return dir.join(format!("{name}.manifest.json"));
    }
    match outcome.outputs.first() {
        Some(out) => {
            let mut s = out.as_os_str().to_owned();
            s.push(".manifest.json");
            PathBuf::from(s)
        }
        None => PathBuf::from(format!("{name}.manifest.json")),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}

fn execute(cli: Cli) -> anyhow::Result<()> {
    let config = load_config(&cli.global)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.global.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = pool.build()?;

    let started = Instant::now();
    let name = cli.command.name();
    let outcome = pool.install(|| dispatch(cli.command, &config))?;
    let path = manifest_path(&cli.global, name, &outcome);
    let manifest = RunManifest {
        subcommand: name.to_string(),
        config,
        inputs: outcome.inputs,
        outputs: outcome.outputs,
        counts: outcome.counts,
        wall_time_ms: started.elapsed().as_millis(),
    };
    write_json(&path, &manifest)?;
    Ok(())
}

fn read_lines(path: &Path) -> anyhow::Result<Vec<String>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(text.lines().map(str::to_string).collect())
}

fn tokenized_lines(path: &Path, config: &PipelineConfig) -> anyhow::Result<Vec<Vec<String>>> {
    Ok(read_lines(path)?.iter().map(|l| tokenize(&clean(l), config)).collect())
}

#[derive(Serialize)]
struct DedupeReport {
    pairs_in: usize,
    pairs_out: usize,
    duplicates_dropped: usize,
}

#[derive(Serialize)]
struct DetectedWord<'a> {
    #[serde(flatten)]
    inconsistency: &'a Inconsistency,
    suggested_canonical: Option<String>,
}

#[derive(Serialize)]
struct SentenceScore {
    line: usize,
    score: f64,
}

#[derive(Serialize)]
struct BleuOutput {
    corpus: crate::eval::BleuReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    sentences: Vec<SentenceScore>,
}

fn dispatch(command: Command, config: &PipelineConfig) -> anyhow::Result<Outcome> {
    let mut outcome = Outcome::default();
    match command {
        Command::IngestBible { xml, books, lang, id_prefix, id_separator, out } => {
            let bytes = std::fs::read(&xml).with_context(|| format!("reading {}", xml.display()))?;
            let mut parser =
                BibleXmlParser::new().with_scheme(IdScheme { prefix: id_prefix, separator: id_separator });
            if !books.is_empty() {
                parser = parser.with_books(books);
            }
            let mut doc = parser.parse(&bytes).with_context(|| format!("parsing {}", xml.display()))?;
            if let Some(lang) = lang {
                if doc.language_code == "und" {
                    doc.language_code = lang;
                }
            }
            write_json(&out, &doc)?;
            outcome.counts.other.insert("segments".into(), doc.segments.len());
            outcome.counts.other.insert("skipped_ids".into(), doc.skipped_ids);
            outcome.counts.other.insert("empty_segments".into(), doc.empty_segments);
            outcome.inputs.push(xml);
            outcome.outputs.push(out);
        }
        Command::Align { source, target, out, report, dedupe } => {
            let src: MonolingualDocument = read_json(&source)?;
            let tgt: MonolingualDocument = read_json(&target)?;
            let (mut pairs, mut rep) = align_by_verse(&src, &tgt, config)?;
            if dedupe {
                let (kept, dropped) = dedupe_repetitive(pairs);
                pairs = kept;
                rep.duplicates_dropped = dropped;
            }
            write_corpus(&out, &pairs)?;
            write_json(&report, &rep)?;
            outcome.counts.pairs_in = Some(src.segments.len().min(tgt.segments.len()));
            outcome.counts.pairs_out = Some(pairs.len());
            outcome.counts.other.insert("source_only".into(), rep.source_only.len());
            outcome.counts.other.insert("target_only".into(), rep.target_only.len());
            outcome.counts.other.insert("duplicates_dropped".into(), rep.duplicates_dropped);
            outcome.inputs.extend([source, target]);
            outcome.outputs.extend([out, report]);
        }
        Command::Dedupe { input, out } => {
            let pairs = read_corpus(&input, config)?;
            let pairs_in = pairs.len();
            let (kept, dropped) = dedupe_repetitive(pairs);
            write_corpus(&out, &kept)?;
            println!("{}", serde_json::to_string(&DedupeReport { pairs_in, pairs_out: kept.len(), duplicates_dropped: dropped })?);
            outcome.counts.pairs_in = Some(pairs_in);
            outcome.counts.pairs_out = Some(kept.len());
            outcome.counts.other.insert("duplicates_dropped".into(), dropped);
            outcome.inputs.push(input);
            outcome.outputs.push(out);
        }
        Command::Table { input, watch, watch_file, out, json } => {
            let pairs = read_corpus(&input, config)?;
            let mut watchlist: BTreeSet<String> = watch.into_iter().filter(|w| !w.is_empty()).collect();
            if let Some(path) = &watch_file {
                watchlist.extend(read_lines(path)?.into_iter().map(|l| l.trim().to_string()).filter(|l| !l.is_empty()));
                outcome.inputs.push(path.clone());
            }
            if config.lowercase {
                watchlist = watchlist.into_iter().map(|w| w.to_lowercase()).collect();
            }
            let table = build_translation_table(&pairs, &watchlist, config)?;
            write_text(&out, &table.to_tsv())?;
            for entry in table.entries.values().filter(|e| e.is_absent()) {
                eprintln!("warning: {:?} does not occur in any source sentence", entry.source_word);
            }
            outcome.counts.pairs_in = Some(pairs.len());
            outcome.counts.other.insert("watched_words".into(), table.entries.len());
            outcome.inputs.insert(0, input);
            outcome.outputs.push(out);
            if let Some(json) = json {
                write_json(&json, &table)?;
                outcome.outputs.push(json);
            }
        }
        Command::Detect { table, min_total, out } => {
            let t: TranslationTable = read_json(&table)?;
            let found = detect_inconsistencies(&t, min_total);
            let detected: Vec<DetectedWord<'_>> = found
                .iter()
                .map(|i| DetectedWord { inconsistency: i, suggested_canonical: select_canonical(&t, &i.source_word).ok() })
                .collect();
            for d in &detected {
                let used: Vec<String> = d
                    .inconsistency
                    .candidates
                    .iter()
                    .filter(|c| c.attributed_count > 0)
                    .map(|c| format!("{}:{}", c.target_word, c.attributed_count))
                    .collect();
                println!(
                    "{}\t{}\t{} none:{}\t-> {}",
                    d.inconsistency.source_word,
                    d.inconsistency.total_occurrences,
                    used.join(" "),
                    d.inconsistency.none_count,
                    d.suggested_canonical.as_deref().unwrap_or("?")
                );
            }
            outcome.counts.other.insert("inconsistent_words".into(), detected.len());
            outcome.inputs.push(table);
            if let Some(out) = out {
                write_json(&out, &detected)?;
                outcome.outputs.push(out);
            }
        }
        Command::Canonicalize { rules, input, out, log } => {
            let rule_list = parse_rules(&std::fs::read_to_string(&rules).with_context(|| format!("reading {}", rules.display()))?)
                .with_context(|| format!("in rules file {}", rules.display()))?;
            let pairs = read_corpus(&input, config)?;
            let pairs_in = pairs.len();
            let (pairs, changes) = apply_rules(pairs, &rule_list);
            let log = log.unwrap_or_else(|| {
                let mut s = out.as_os_str().to_owned();
                s.push(".changes.jsonl");
                PathBuf::from(s)
            });
            write_corpus(&out, &pairs)?;
            write_text(&log, &change_log_jsonl(&changes))?;
            outcome.counts.pairs_in = Some(pairs_in);
            outcome.counts.pairs_out = Some(pairs.len());
            outcome.counts.corrections_applied = Some(changes.len());
            outcome.inputs.extend([rules, input]);
            outcome.outputs.extend([out, log]);
        }
        Command::WikiFetch { lang_codes, category_file, delay_ms, max_requests, out_dir } => {
            let text = std::fs::read_to_string(&category_file)
                .with_context(|| format!("reading {}", category_file.display()))?;
            let categories: BTreeMap<String, Vec<String>> =
                toml::from_str(&text).with_context(|| format!("in category file {}", category_file.display()))?;
            let mut fetcher = PoliteFetcher::new(HttpPageSource::new()?, Duration::from_millis(delay_ms), max_requests);
            let summary = fetch_categories(&mut fetcher, &categories, &lang_codes, &out_dir)?;
            for failure in &summary.failed {
                eprintln!("warning: {failure}");
            }
            outcome.counts.other.insert("fetched".into(), summary.fetched.len());
            outcome.counts.other.insert("cached".into(), summary.cached);
            outcome.counts.other.insert("failed".into(), summary.failed.len());
            outcome.counts.other.insert("skipped_by_cap".into(), summary.skipped_by_cap);
            outcome.inputs.push(category_file);
            outcome.outputs.extend(summary.fetched);
            outcome.manifest_dir = Some(out_dir);
        }
        Command::WikiExtract { root, source_lang, target_lang, abbreviations, out } => {
            let mut splitter = SentenceSplitter::default();
            if let Some(path) = &abbreviations {
                for line in read_lines(path)? {
                    if !line.trim().is_empty() {
                        splitter = splitter.with_abbreviation(line.trim());
                    }
                }
                outcome.inputs.push(path.clone());
            }
            let (articles, report) = load_offline_articles(&root, &source_lang, &target_lang, &splitter, config)?;
            for skipped in &report.skipped {
                eprintln!("warning: skipped {skipped}");
            }
            write_articles(&out, &articles)?;
            outcome.counts.other.insert("articles".into(), articles.len());
            outcome.counts.other.insert("skipped".into(), report.skipped.len());
            outcome.counts.other.insert(
                "source_sentences".into(),
                articles.iter().map(|a| a.source_sentences.len()).sum(),
            );
            outcome.counts.other.insert(
                "target_sentences".into(),
                articles.iter().map(|a| a.target_sentences.len()).sum(),
            );
            outcome.inputs.insert(0, root);
            outcome.outputs.push(out);
        }
        Command::MineSegments { articles, category, side, out } => {
            let list = read_articles(&articles, config)?;
            let categories: BTreeSet<String> = if category.is_empty() {
                list.iter().map(|a| a.category.clone()).collect()
            } else {
                category.into_iter().collect()
            };
            let sides = match side.as_str() {
                "both" => vec![Side::Source, Side::Target],
                other => vec![other.parse::<Side>()?],
            };
            let mut segments = Vec::new();
            for c in &categories {
                for &s in &sides {
                    segments.extend(mine_topic_segments(&list, c, s, config)?);
                }
            }
            write_json(&out, &segments)?;
            outcome.counts.segments_mined = Some(segments.len());
            outcome.inputs.push(articles);
            outcome.outputs.push(out);
        }
        Command::ExtractTemplate { articles, segment_pair, out } => {
            let list = read_articles(&articles, config)?;
            let mut template: SegmentPair = read_json(&segment_pair)?;
            if config.lowercase {
                for t in template.source_ngram.iter_mut().chain(template.target_ngram.iter_mut()) {
                    *t = t.to_lowercase();
                }
            }
            let extraction = extract_all_by_template(&list, &template)?;
            write_corpus(&out, &extraction.pairs)?;
            outcome.counts.pairs_out = Some(extraction.pairs.len());
            outcome.counts.other.insert("unpaired_source".into(), extraction.unpaired_source);
            outcome.counts.other.insert("unpaired_target".into(), extraction.unpaired_target);
            outcome.inputs.extend([articles, segment_pair]);
            outcome.outputs.push(out);
        }
        Command::Split { input, out_dir, ratios } => {
            let ratios: [f64; 3] = match ratios.len() {
                0 => config.split_ratios,
                3 => [ratios[0], ratios[1], ratios[2]],
                n => bail!("--ratios needs three values, got {n}"),
            };
            let pairs = read_corpus(&input, config)?;
            let pairs_in = pairs.len();
            let split = split_corpus(pairs, ratios, config.rng_seed)?;
            for (name, part) in [("train", &split.train), ("valid", &split.valid), ("test", &split.test)] {
                let path = out_dir.join(format!("{name}.jsonl"));
                write_corpus(&path, part)?;
                outcome.counts.other.insert(name.into(), part.len());
                outcome.outputs.push(path);
            }
            outcome.counts.pairs_in = Some(pairs_in);
            outcome.counts.pairs_out = Some(pairs_in);
            outcome.inputs.push(input);
            outcome.manifest_dir = Some(out_dir);
        }
        Command::Export { input, prefix } => {
            let pairs = read_corpus(&input, config)?;
            let (src, tgt) = export_parallel(&pairs, &prefix)?;
            outcome.counts.pairs_in = Some(pairs.len());
            outcome.counts.pairs_out = Some(pairs.len());
            outcome.inputs.push(input);
            outcome.outputs.extend([src, tgt]);
        }
        Command::Import { src, tgt, out } => {
            let pairs = import_parallel(&src, &tgt, config)?;
            write_corpus(&out, &pairs)?;
            outcome.counts.pairs_out = Some(pairs.len());
            outcome.inputs.extend([src, tgt]);
            outcome.outputs.push(out);
        }
        Command::Bleu { hyp, reference, sentence, json } => {
            let hyps = tokenized_lines(&hyp, config)?;
            let refs = tokenized_lines(&reference, config)?;
            let corpus = bleu_corpus(&hyps, &refs)?;
            let mut sentences = Vec::new();
            if sentence {
                for (i, (h, r)) in hyps.iter().zip(&refs).enumerate() {
                    let report = bleu_sentence(h, r).with_context(|| format!("line {}", i + 1))?;
                    println!("{}\t{}", i + 1, report.display_score());
                    sentences.push(SentenceScore { line: i + 1, score: report.score });
                }
            }
            println!("{corpus}");
            outcome.counts.pairs_in = Some(hyps.len());
            outcome.inputs.extend([hyp, reference]);
            if let Some(json) = json {
                write_json(&json, &BleuOutput { corpus, sentences })?;
                outcome.outputs.push(json);
            }
        }
        Command::Stats { input, json } => {
            let pairs = read_corpus(&input, config)?;
            let stats = corpus_stats(&pairs);
            for (group, n) in &stats {
                println!("{group}\t{n}");
            }
            println!("total\t{}", pairs.len());
            outcome.counts.pairs_in = Some(pairs.len());
            outcome.inputs.push(input);
            if let Some(json) = json {
                write_json(&json, &stats)?;
                outcome.outputs.push(json);
            }
        }
    }
    Ok(outcome)
}

/// Pair count per origin group, sorted by group name.
pub fn corpus_stats(pairs: &[SentencePair]) -> BTreeMap<String, usize> {
    let mut counts = BTreeMap::new();
    for p in pairs {
        *counts.entry(p.origin.group().to_string()).or_default() += 1;
    }
    counts
}
