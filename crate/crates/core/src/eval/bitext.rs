use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::text::{detokenize, Origin, PipelineConfig, Sentence, SentencePair};

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

/// Writes `<prefix>.src` and `<prefix>.tgt`: UTF-8, one space-joined
/// sentence per line, every line terminated by LF.
pub fn export_parallel(pairs: &[SentencePair], prefix: &Path) -> Result<(PathBuf, PathBuf)> {
    let src_path = with_suffix(prefix, ".src");
    let tgt_path = with_suffix(prefix, ".tgt");
    let mut src = String::new();
    let mut tgt = String::new();
    for pair in pairs {
        src.push_str(&detokenize(pair.source.tokens()));
        src.push('\n');
        tgt.push_str(&detokenize(pair.target.tokens()));
        tgt.push('\n');
    }
    fs::write(&src_path, src).map_err(|e| Error::io(&src_path, e))?;
    fs::write(&tgt_path, tgt).map_err(|e| Error::io(&tgt_path, e))?;
    Ok((src_path, tgt_path))
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let text = String::from_utf8(bytes).map_err(|e| Error::Format {
        path: path.to_path_buf(),
        line: 0,
        message: format!("invalid UTF-8 at byte offset {}", e.utf8_error().valid_up_to()),
    })?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(&text);
    Ok(text.lines().map(str::to_string).collect())
}

/// Reads a line-aligned bitext back into pairs, re-cleaning and
/// re-tokenizing every line.
pub fn import_parallel(src_path: &Path, tgt_path: &Path, config: &PipelineConfig) -> Result<Vec<SentencePair>> {
    let src = read_lines(src_path)?;
    let tgt = read_lines(tgt_path)?;
    if src.len() != tgt.len() {
        return Err(Error::LineCount { source_lines: src.len(), target_lines: tgt.len() });
    }
    src.into_iter()
        .zip(tgt)
        .enumerate()
        .map(|(i, (s, t))| {
            let (source, target) = (Sentence::new(s, config), Sentence::new(t, config));
            for (sentence, path) in [(&source, src_path), (&target, tgt_path)] {
                if sentence.is_empty() {
                    return Err(Error::Format { path: path.to_path_buf(), line: i + 1, message: "empty sentence".into() });
                }
            }
            SentencePair::new(i, Origin::Imported { line: i + 1 }, source, target)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(rows: &[(&str, &str)]) -> Vec<SentencePair> {
        let config = PipelineConfig::default();
        rows.iter()
            .enumerate()
            .map(|(i, (s, t))| {
                SentencePair::new(i, Origin::Imported { line: i + 1 }, Sentence::new(*s, &config), Sentence::new(*t, &config))
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn three_pairs_three_lines() {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("test");
        let input = pairs(&[("Ug mitubag si jose:", "At sinabi ni jose,"), ("b", "c"), ("d", "e")]);
        let (src, tgt) = export_parallel(&input, &prefix).unwrap();
        assert_eq!(src, dir.path().join("test.src"));
        let text = fs::read_to_string(&src).unwrap();
        assert_eq!(text, "ug mitubag si jose :\nb\nd\n");
        assert_eq!(fs::read_to_string(&tgt).unwrap().lines().count(), 3);

        let back = import_parallel(&src, &tgt, &PipelineConfig::default()).unwrap();
        assert_eq!(back.len(), 3);
        for (a, b) in input.iter().zip(&back) {
            assert_eq!(a.source.tokens(), b.source.tokens());
            assert_eq!(a.target.tokens(), b.target.tokens());
        }
        assert_eq!(back[2].origin, Origin::Imported { line: 3 });
    }

    #[test]
    fn empty_export() {
        let dir = tempfile::tempdir().unwrap();
        let (src, tgt) = export_parallel(&[], &dir.path().join("e")).unwrap();
        assert_eq!(fs::metadata(src).unwrap().len(), 0);
        assert_eq!(fs::metadata(tgt).unwrap().len(), 0);
    }

    #[test]
    fn unequal_lines() {
        let dir = tempfile::tempdir().unwrap();
        let (s, t) = (dir.path().join("a.src"), dir.path().join("a.tgt"));
        fs::write(&s, "1\n2\n3\n4\n5\n").unwrap();
        fs::write(&t, "1\n2\n3\n4\n").unwrap();
        let err = import_parallel(&s, &t, &PipelineConfig::default()).unwrap_err();
        assert!(err.to_string().contains("(5, 4)"), "{err}");
    }

    #[test]
    fn five_lines_five_pairs_and_empty_line_error() {
        let dir = tempfile::tempdir().unwrap();
        let (s, t) = (dir.path().join("a.src"), dir.path().join("a.tgt"));
        fs::write(&s, "a\nb\nc\nd\ne\n").unwrap();
        fs::write(&t, "a\nb\nc\nd\ne").unwrap();
        assert_eq!(import_parallel(&s, &t, &PipelineConfig::default()).unwrap().len(), 5);
        fs::write(&t, "a\nb\n\nd\ne\n").unwrap();
        assert!(matches!(
            import_parallel(&s, &t, &PipelineConfig::default()),
            Err(Error::Format { line: 3, .. })
        ));
    }
}
