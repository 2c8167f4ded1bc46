//! File loading for the lexicon, gold roots, gold maps, and count tables.
//!
//! All files are UTF-8. Root-list files hold one root per line with `#`
//! comments; tab-separated files carry `word<TAB>root` (gold map) or
//! `root<TAB>count` (count tables).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rootpipe_core::eval::GoldRootSet;
use rootpipe_core::lexicon::{MalformedRoot, RootLexicon};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Unreadable {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    BadRoot {
        path: String,
        source: MalformedRoot,
    },
    #[error("{path} line {line}: expected two tab-separated fields")]
    BadRow { path: String, line: usize },
    #[error("{path} line {line}: bad count {value:?}")]
    BadCount {
        path: String,
        line: usize,
        value: String,
    },
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Unreadable {
        path: path.display().to_string(),
        source,
    })
}

/// Reads a corpus file as plain text.
pub fn read_corpus(path: &Path) -> Result<String, LoadError> {
    read(path)
}

/// Loads and parses a root lexicon file.
pub fn load_lexicon(path: &Path) -> Result<RootLexicon, LoadError> {
    let text = read(path)?;
    RootLexicon::parse(&text, &path.display().to_string()).map_err(|source| LoadError::BadRoot {
        path: path.display().to_string(),
        source,
    })
}

/// Loads a gold root set (same line format as the lexicon).
pub fn load_gold_roots(path: &Path) -> Result<GoldRootSet, LoadError> {
    let text = read(path)?;
    GoldRootSet::parse(&text).map_err(|source| LoadError::BadRoot {
        path: path.display().to_string(),
        source,
    })
}

fn parse_rows(path: &Path) -> Result<Vec<(usize, String, String)>, LoadError> {
    let text = read(path)?;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (left, right) = line.split_once('\t').ok_or_else(|| LoadError::BadRow {
            path: path.display().to_string(),
            line: idx + 1,
        })?;
        rows.push((idx + 1, left.trim().to_string(), right.trim().to_string()));
    }
    Ok(rows)
}

/// Loads a `word<TAB>root` gold map.
pub fn load_gold_map(path: &Path) -> Result<BTreeMap<String, String>, LoadError> {
    Ok(parse_rows(path)?
        .into_iter()
        .map(|(_, word, root)| (word, root))
        .collect())
}

/// Loads a `root<TAB>count` table.
pub fn load_counts(path: &Path) -> Result<BTreeMap<String, u64>, LoadError> {
    let mut counts = BTreeMap::new();
    for (line, root, value) in parse_rows(path)? {
        let count = value.parse().map_err(|_| LoadError::BadCount {
            path: path.display().to_string(),
            line,
            value,
        })?;
        counts.insert(root, count);
    }
    Ok(counts)
}
