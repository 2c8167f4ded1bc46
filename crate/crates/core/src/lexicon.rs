//! Length-partitioned storage of known verb roots with ordered lookup.
//!
//! Roots are normalized with the same pipeline as input words, so membership
//! comparison is byte-exact. Each length partition is a sorted, deduplicated
//! vector searched by binary subdivision, keeping membership at O(log n)
//! comparisons.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::word::{normalize_word, NormalizeError, NormalizedWord};

/// Sorted sets of known roots, partitioned by length (2, 3, or 4 letters).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RootLexicon {
    bilateral: Vec<String>,
    trilateral: Vec<String>,
    quadrilateral: Vec<String>,
    source: String,
}

/// Cardinality of each partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LexiconStats {
    pub bilateral: usize,
    pub trilateral: usize,
    pub quadrilateral: usize,
    pub total: usize,
}

/// A lexicon line that is not a usable root, with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MalformedRoot {
    pub line: usize,
    pub text: String,
    pub cause: RootDefect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootDefect {
    /// Normalized length outside 2..=4.
    Length(usize),
    Normalize(NormalizeError),
}

impl fmt::Display for MalformedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: root {:?}: ", self.line, self.text)?;
        match &self.cause {
            RootDefect::Length(n) => write!(f, "length {n} is outside 2..=4"),
            RootDefect::Normalize(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MalformedRoot {}

impl RootLexicon {
    /// Parses lexicon text: one root per line, `#` comments and blank lines
    /// ignored, duplicates collapsed. `source` is a provenance label carried
    /// for reporting.
    pub fn parse(text: &str, source: &str) -> Result<Self, MalformedRoot> {
        let mut lex = Self {
            source: source.to_string(),
            ..Self::default()
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |cause| MalformedRoot {
                line: idx + 1,
                text: line.to_string(),
                cause,
            };
            let word = normalize_word(line).map_err(|e| malformed(RootDefect::Normalize(e)))?;
            let partition = match word.len() {
                2 => &mut lex.bilateral,
                3 => &mut lex.trilateral,
                4 => &mut lex.quadrilateral,
                n => return Err(malformed(RootDefect::Length(n))),
            };
            partition.push(word.to_string());
        }
        for partition in [
            &mut lex.bilateral,
            &mut lex.trilateral,
            &mut lex.quadrilateral,
        ] {
            partition.sort_unstable();
            partition.dedup();
        }
        Ok(lex)
    }

    /// Provenance label supplied at parse time.
    pub fn source(&self) -> &str {
        &self.source
    }

    fn partition(&self, len: usize) -> Option<&[String]> {
        match len {
            2 => Some(&self.bilateral),
            3 => Some(&self.trilateral),
            4 => Some(&self.quadrilateral),
            _ => None,
        }
    }

    /// True iff the stem is a known root of its length. Stems with length
    /// outside 2..=4 are never members.
    pub fn contains(&self, stem: &NormalizedWord) -> bool {
        self.lookup(stem).0
    }

    /// Membership plus the number of string comparisons the ordered search
    /// performed; exposes the logarithmic-lookup contract to diagnostics.
    pub fn lookup(&self, stem: &NormalizedWord) -> (bool, usize) {
        let Some(partition) = self.partition(stem.len()) else {
            return (false, 0);
        };
        let needle = stem.to_string();
        let mut lo = 0;
        let mut hi = partition.len();
        let mut comparisons = 0;
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            comparisons += 1;
            match partition[mid].as_str().cmp(needle.as_str()) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return (true, comparisons),
            }
        }
        (false, comparisons)
    }

    pub fn stats(&self) -> LexiconStats {
        LexiconStats {
            bilateral: self.bilateral.len(),
            trilateral: self.trilateral.len(),
            quadrilateral: self.quadrilateral.len(),
            total: self.bilateral.len() + self.trilateral.len() + self.quadrilateral.len(),
        }
    }

    /// All roots of one partition in sorted order; empty for lengths
    /// outside 2..=4.
    pub fn roots_of_len(&self, len: usize) -> &[String] {
        self.partition(len).unwrap_or(&[])
    }
}
