//! Corpus evaluation: root-type accuracy, per-root frequency counting, and
//! count-table comparison.
//!
//! The headline metric is root-type accuracy: the fraction of distinct gold
//! roots the extractor produced at least once over the corpus. Tokens that
//! fail normalization count as failures, never as skips, so the metric is
//! conservative.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::lexicon::{MalformedRoot, RootDefect, RootLexicon};
use crate::stemmer::{extract_root, ExtractError, ExtractOptions};
use crate::tokenize::tokenize;
use crate::word::normalize_word;

/// The distinct roots a corpus is expected to yield, with optional
/// occurrence counts carried for reporting layers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GoldRootSet {
    pub roots: BTreeSet<String>,
    pub expected_counts: Option<BTreeMap<String, u64>>,
}

impl GoldRootSet {
    /// Parses gold-root text in the lexicon file format (one root per line,
    /// `#` comments, blanks ignored); every root must be a well-formed
    /// 2..=4-letter word.
    pub fn parse(text: &str) -> Result<Self, MalformedRoot> {
        let mut roots = BTreeSet::new();
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
            if !(2..=4).contains(&word.len()) {
                return Err(malformed(RootDefect::Length(word.len())));
            }
            roots.insert(word.to_string());
        }
        Ok(Self {
            roots,
            expected_counts: None,
        })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Why a token produced no root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    NotFound,
    Error(ExtractError),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotFound => write!(f, "notFound"),
            Self::Error(e) => write!(f, "{e}"),
        }
    }
}

/// Token-level scoring against a word-to-root gold map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TokenLevel {
    pub mapped_tokens: usize,
    pub correct: usize,
}

impl TokenLevel {
    pub fn accuracy(&self) -> f64 {
        if self.mapped_tokens == 0 {
            0.0
        } else {
            self.correct as f64 / self.mapped_tokens as f64
        }
    }
}

/// Aggregated corpus results.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalReport {
    pub gold_root_count: usize,
    /// Distinct gold roots produced at least once.
    pub extracted_gold_roots: usize,
    /// Extraction occurrences per root, over all tokens.
    pub per_root_counts: BTreeMap<String, u64>,
    pub failures: Vec<(String, FailureReason)>,
    pub truncation_events: u64,
    pub token_count: usize,
    pub succeeded: usize,
    pub token_level: Option<TokenLevel>,
}

impl EvalReport {
    /// extracted gold roots / gold root count; rounding happens only at
    /// display time.
    pub fn root_type_accuracy(&self) -> f64 {
        if self.gold_root_count == 0 {
            0.0
        } else {
            self.extracted_gold_roots as f64 / self.gold_root_count as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    EmptyGold,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyGold => write!(f, "gold root set is empty"),
        }
    }
}

impl core::error::Error for EvalError {}

/// Stems every token of the corpus text and scores the extractions against
/// the gold set. When a word-to-root map is supplied, tokens found in it are
/// additionally scored at token level.
pub fn evaluate_text(
    text: &str,
    gold: &GoldRootSet,
    lexicon: &RootLexicon,
    options: &ExtractOptions,
    gold_map: Option<&BTreeMap<String, String>>,
) -> Result<EvalReport, EvalError> {
    if gold.is_empty() {
        return Err(EvalError::EmptyGold);
    }
    let mut report = EvalReport {
        gold_root_count: gold.len(),
        token_level: gold_map.map(|_| TokenLevel {
            mapped_tokens: 0,
            correct: 0,
        }),
        ..Default::default()
    };

    for token in tokenize(text) {
        report.token_count += 1;
        let extracted = match extract_root(token, lexicon, options) {
            Ok(result) => {
                if result.candidates.truncated {
                    report.truncation_events += 1;
                }
                match result.root {
                    Some(root) => {
                        report.succeeded += 1;
                        let root = root.to_string();
                        *report.per_root_counts.entry(root.clone()).or_insert(0) += 1;
                        Some(root)
                    }
                    None => {
                        report
                            .failures
                            .push((token.to_string(), FailureReason::NotFound));
                        None
                    }
                }
            }
            Err(e) => {
                report
                    .failures
                    .push((token.to_string(), FailureReason::Error(e)));
                None
            }
        };
        if let (Some(map), Some(level)) = (gold_map, report.token_level.as_mut()) {
            if let Some(expected) = map.get(token) {
                level.mapped_tokens += 1;
                if extracted.as_deref() == Some(expected.as_str()) {
                    level.correct += 1;
                }
            }
        }
    }

    report.extracted_gold_roots = report
        .per_root_counts
        .keys()
        .filter(|root| gold.roots.contains(*root))
        .count();
    Ok(report)
}

/// Extraction occurrences per root over all tokens, sorted by descending
/// count, ties broken by root.
pub fn frequency_table(
    text: &str,
    lexicon: &RootLexicon,
    options: &ExtractOptions,
) -> Vec<(String, u64)> {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for token in tokenize(text) {
        if let Ok(result) = extract_root(token, lexicon, options) {
            if let Some(root) = result.root {
                *counts.entry(root.to_string()).or_insert(0) += 1;
            }
        }
    }
    let mut table: Vec<(String, u64)> = counts.into_iter().collect();
    table.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    table
}

/// One row of a count-table comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffRow {
    pub root: String,
    pub mine: u64,
    pub reference: u64,
    pub actual: u64,
    /// |mine - reference| / actual, as a percentage.
    pub abs_pct_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompareError {
    MissingActualCount { root: String },
}

impl fmt::Display for CompareError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingActualCount { root } => {
                write!(f, "no actual count for root {root}")
            }
        }
    }
}

impl core::error::Error for CompareError {}

/// Compares two count tables root by root, normalizing the absolute
/// difference by the actual occurrence count. Roots appearing in either
/// table are compared (a missing side counts as zero); every compared root
/// must have an actual count. Rows come back sorted by descending actual
/// count, ties broken by root.
pub fn compare_reports(
    mine: &BTreeMap<String, u64>,
    reference: &BTreeMap<String, u64>,
    actual: &BTreeMap<String, u64>,
) -> Result<Vec<DiffRow>, CompareError> {
    let keys: BTreeSet<&String> = mine.keys().chain(reference.keys()).collect();
    let mut rows = Vec::with_capacity(keys.len());
    for root in keys {
        let actual_count = *actual
            .get(root)
            .ok_or_else(|| CompareError::MissingActualCount { root: root.clone() })?;
        let mine_count = mine.get(root).copied().unwrap_or(0);
        let reference_count = reference.get(root).copied().unwrap_or(0);
        rows.push(DiffRow {
            root: root.clone(),
            mine: mine_count,
            reference: reference_count,
            actual: actual_count,
            abs_pct_diff: mine_count.abs_diff(reference_count) as f64 / actual_count as f64
                * 100.0,
        });
    }
    rows.sort_by(|a, b| b.actual.cmp(&a.actual).then_with(|| a.root.cmp(&b.root)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lexicon() -> RootLexicon {
        RootLexicon::parse("درس\nلعب\nكتب\nقول\nحج\nدحرج\n", "fixture").unwrap()
    }

    fn gold(roots: &str) -> GoldRootSet {
        GoldRootSet::parse(roots).unwrap()
    }

    #[test]
    fn gold_set_parsing() {
        let g = gold("# roots\nدرس\nحج\nدحرج\n");
        assert_eq!(g.len(), 3);
        assert!(GoldRootSet::parse("abcd\n").is_err());
        assert!(GoldRootSet::parse("درسدر\n").is_err());
    }

    #[test]
    fn empty_gold_is_rejected() {
        let lex = lexicon();
        assert_eq!(
            evaluate_text("درس", &gold(""), &lex, &Default::default(), None),
            Err(EvalError::EmptyGold)
        );
    }

    #[test]
    fn counts_and_accuracy() {
        let lex = lexicon();
        let report = evaluate_text(
            "درس سيلعبون قال هذا",
            &gold("درس\nلعب\nقول\nحج\n"),
            &lex,
            &Default::default(),
            None,
        )
        .unwrap();
        assert_eq!(report.token_count, 4);
        assert_eq!(report.succeeded, 3);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.extracted_gold_roots, 3);
        assert_eq!(report.gold_root_count, 4);
        assert!((report.root_type_accuracy() - 0.75).abs() < 1e-12);
        assert_eq!(report.per_root_counts["قول"], 1);
    }

    #[test]
    fn token_conservation() {
        let lex = lexicon();
        let report = evaluate_text(
            "درس hello قال إن درسدرسدرسدرسدرسد",
            &gold("درس\n"),
            &lex,
            &Default::default(),
            None,
        )
        .unwrap();
        assert_eq!(
            report.token_count,
            report.succeeded + report.failures.len()
        );
        assert_eq!(report.failures.len(), 3);
    }

    #[test]
    fn normalization_failures_are_failures() {
        let lex = lexicon();
        let report = evaluate_text(
            "hello",
            &gold("درس\n"),
            &lex,
            &Default::default(),
            None,
        )
        .unwrap();
        assert!(matches!(
            report.failures[0].1,
            FailureReason::Error(ExtractError::Normalize(_))
        ));
    }

    #[test]
    fn token_level_scoring() {
        let lex = lexicon();
        let mut map = BTreeMap::new();
        map.insert("درس".to_string(), "درس".to_string());
        map.insert("قال".to_string(), "قول".to_string());
        map.insert("سيلعبون".to_string(), "كتب".to_string()); // deliberately wrong
        let report = evaluate_text(
            "درس قال سيلعبون هذا",
            &gold("درس\n"),
            &lex,
            &Default::default(),
            Some(&map),
        )
        .unwrap();
        let level = report.token_level.unwrap();
        assert_eq!(level.mapped_tokens, 3);
        assert_eq!(level.correct, 2);
    }

    #[test]
    fn frequency_table_counts_occurrences() {
        let lex = lexicon();
        let corpus = "سيلعبون سيلعبون سيلعبون سيلعبون سيلعبون قال قال";
        let table = frequency_table(corpus, &lex, &Default::default());
        assert_eq!(
            table,
            vec![("لعب".to_string(), 5), ("قول".to_string(), 2)]
        );
        assert!(frequency_table("", &lex, &Default::default()).is_empty());
    }

    #[test]
    fn infix_toggle_only_adds_roots() {
        let lex = lexicon();
        let g = gold("درس\nلعب\nقول\nحج\n");
        let corpus = "درس سيلعبون قال حاج";
        let with = evaluate_text(corpus, &g, &lex, &Default::default(), None).unwrap();
        let without = evaluate_text(
            corpus,
            &g,
            &lex,
            &ExtractOptions {
                infix_processing: false,
                ..Default::default()
            },
            None,
        )
        .unwrap();
        assert_eq!(with.extracted_gold_roots, 4);
        assert_eq!(without.extracted_gold_roots, 2);
        assert!(with.extracted_gold_roots >= without.extracted_gold_roots);
    }

    #[test]
    fn deterministic_reports() {
        let lex = lexicon();
        let g = gold("درس\nلعب\n");
        let corpus = "درس سيلعبون قال درس";
        let a = evaluate_text(corpus, &g, &lex, &Default::default(), None).unwrap();
        let b = evaluate_text(corpus, &g, &lex, &Default::default(), None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compare_reports_rows() {
        let mut mine = BTreeMap::new();
        let mut reference = BTreeMap::new();
        let mut actual = BTreeMap::new();
        mine.insert("قول".to_string(), 1022);
        reference.insert("قول".to_string(), 1195);
        actual.insert("قول".to_string(), 1722);
        let rows = compare_reports(&mine, &reference, &actual).unwrap();
        assert_eq!(rows.len(), 1);
        assert!((rows[0].abs_pct_diff - 10.046).abs() < 0.01);

        let identical = compare_reports(&reference, &reference, &actual).unwrap();
        assert_eq!(identical[0].abs_pct_diff, 0.0);

        actual.clear();
        assert_eq!(
            compare_reports(&mine, &reference, &actual),
            Err(CompareError::MissingActualCount {
                root: "قول".to_string()
            })
        );
    }

    #[test]
    fn empty_extraction_set_scores_zero() {
        let lex = lexicon();
        let report = evaluate_text(
            "هذا abc",
            &gold("درس\nلعب\n"),
            &lex,
            &Default::default(),
            None,
        )
        .unwrap();
        assert_eq!(report.extracted_gold_roots, 0);
        assert_eq!(report.root_type_accuracy(), 0.0);
        assert!(report.per_root_counts.is_empty());
    }

    #[test]
    fn synthetic_accuracy_is_a_plain_ratio() {
        let report = EvalReport {
            gold_root_count: 1767,
            extracted_gold_roots: 1549,
            ..Default::default()
        };
        assert!((report.root_type_accuracy() - 1549.0 / 1767.0).abs() < 1e-15);
    }
}
