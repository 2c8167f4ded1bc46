//! The five-stage root extraction algorithm.
//!
//! Stage 1 computes per-position affix membership bits, stage 2 masks them
//! into valid boundary sets, stage 3 truncates the word at every boundary
//! pair into trilateral and quadrilateral stem candidates, stage 4 compares
//! candidates against the root lexicon, and stage 5 attempts infix repair
//! when the comparison comes up empty.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::infix::{self, FallbackMethod, FallbackOutcome};
use crate::letters::{romanize, LetterClasses, INFIX_FULL, INFIX_VOWELS};
use crate::lexicon::RootLexicon;
use crate::word::{normalize_word, NormalizeError, NormalizedWord};

/// Stem-list capacity of the hardware counter (indices 0..=5).
pub const DEFAULT_CAPACITY: usize = 6;

/// How many leading positions are examined for prefix letters.
pub const PREFIX_WINDOW: usize = 5;

/// Per-position affix membership bits. Prefix bits cover only the first
/// five positions; suffix bits cover every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionBits {
    pub prefix: Vec<bool>,
    pub suffix: Vec<bool>,
}

fn pattern(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl PositionBits {
    /// Prefix bits as a 0/1 string in logical order (index 0 first).
    pub fn prefix_pattern(&self) -> String {
        pattern(&self.prefix)
    }

    /// Suffix bits as a 0/1 string in logical order.
    pub fn suffix_pattern(&self) -> String {
        pattern(&self.suffix)
    }

    /// Suffix bits in visual right-to-left order, the way a waveform viewer
    /// shows the register (last letter first).
    pub fn suffix_visual_pattern(&self) -> String {
        self.suffix
            .iter()
            .rev()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

/// Computes membership bits with the stock letter classes.
pub fn check_positions(word: &NormalizedWord) -> PositionBits {
    check_positions_with(word, &LetterClasses::default())
}

/// Computes membership bits against a caller-supplied class bundle.
pub fn check_positions_with(word: &NormalizedWord, classes: &LetterClasses) -> PositionBits {
    let letters = word.letters();
    PositionBits {
        prefix: letters
            .iter()
            .take(PREFIX_WINDOW)
            .map(|&c| classes.is_prefix_letter(c))
            .collect(),
        suffix: letters
            .iter()
            .map(|&c| classes.is_suffix_letter(c))
            .collect(),
    }
}

/// Valid truncation indices after masking.
///
/// `prefix_ends` holds every index p such that letters 0..=p are all prefix
/// letters, plus -1 for the empty prefix. `suffix_starts` holds every index s
/// such that letters s.. are all suffix letters, plus the word length for the
/// empty suffix. Positions beyond the first non-affix letter are masked out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySets {
    pub prefix_ends: Vec<i32>,
    pub suffix_starts: Vec<usize>,
}

/// Masks the membership bits into boundary sets: the prefix side keeps the
/// maximal run of set bits from the start, the suffix side the maximal run
/// up to the end.
pub fn produce_boundaries(bits: &PositionBits, word: &NormalizedWord) -> BoundarySets {
    let len = word.len();
    let mut prefix_ends = Vec::with_capacity(PREFIX_WINDOW + 1);
    prefix_ends.push(-1);
    for (i, &bit) in bits.prefix.iter().enumerate() {
        if !bit {
            break;
        }
        prefix_ends.push(i as i32);
    }

    let mut run_start = len;
    for (j, &bit) in bits.suffix.iter().enumerate().rev() {
        if !bit {
            break;
        }
        run_start = j;
    }
    let suffix_starts = (run_start..=len).collect();

    BoundarySets {
        prefix_ends,
        suffix_starts,
    }
}

/// Capacity-bounded lists of generated stems, in generation order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StemCandidates {
    pub tri: Vec<NormalizedWord>,
    pub quad: Vec<NormalizedWord>,
    /// Set when a list hit its capacity and later stems were dropped.
    pub truncated: bool,
}

/// Truncates the word at every boundary pair whose enclosed substring has
/// three or four letters. The outer loop walks prefix ends ascending, the
/// inner loop suffix starts from the highest index downward. Once a list is
/// full, further entries for it are dropped and the truncation flag is set.
pub fn generate_stems(
    word: &NormalizedWord,
    bounds: &BoundarySets,
    capacity: usize,
) -> StemCandidates {
    let mut out = StemCandidates::default();
    for &p in &bounds.prefix_ends {
        for &s in bounds.suffix_starts.iter().rev() {
            let len = s as i32 - p - 1;
            let list = match len {
                3 => &mut out.tri,
                4 => &mut out.quad,
                _ => continue,
            };
            if list.len() < capacity {
                list.push(word.sub((p + 1) as usize, s));
            } else {
                out.truncated = true;
            }
        }
    }
    out
}

/// First trilateral and first quadrilateral candidate (in generation order)
/// that the lexicon validates.
pub fn compare_and_extract(
    candidates: &StemCandidates,
    lexicon: &RootLexicon,
) -> (Option<NormalizedWord>, Option<NormalizedWord>) {
    let first_match = |list: &[NormalizedWord]| list.iter().find(|s| lexicon.contains(s)).cloned();
    (first_match(&candidates.tri), first_match(&candidates.quad))
}

/// Root size classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeClass {
    Bilateral,
    Trilateral,
    Quadrilateral,
    None,
}

impl SizeClass {
    fn for_len(len: usize) -> Self {
        match len {
            2 => Self::Bilateral,
            3 => Self::Trilateral,
            4 => Self::Quadrilateral,
            _ => Self::None,
        }
    }

    /// Letter count, or `None` for the no-root class.
    pub fn letter_count(&self) -> Option<usize> {
        match self {
            Self::Bilateral => Some(2),
            Self::Trilateral => Some(3),
            Self::Quadrilateral => Some(4),
            Self::None => None,
        }
    }
}

impl fmt::Display for SizeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.letter_count() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "-"),
        }
    }
}

/// Which stage produced (or failed to produce) the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Direct,
    InfixRemoved,
    RestoredForm,
    NotFound,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Direct => "direct",
            Self::InfixRemoved => "infixRemoved",
            Self::RestoredForm => "restoredForm",
            Self::NotFound => "notFound",
        })
    }
}

/// Extraction configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Run the stage-5 repair procedures when the direct comparison misses.
    pub infix_processing: bool,
    /// Stem-list capacity; the hardware bound is 6.
    pub capacity: usize,
    /// Record a per-stage trace on the result.
    pub trace: bool,
    /// Use the full five-letter infix mnemonic for the repair test instead
    /// of the three vowel letters.
    pub full_infix_set: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            infix_processing: true,
            capacity: DEFAULT_CAPACITY,
            trace: false,
            full_infix_set: false,
        }
    }
}

impl ExtractOptions {
    pub(crate) fn infix_letters(&self) -> &'static [char] {
        if self.full_infix_set {
            INFIX_FULL
        } else {
            INFIX_VOWELS
        }
    }
}

/// Per-stage record kept when tracing is enabled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub bits: PositionBits,
    pub bounds: BoundarySets,
    pub root3: Option<NormalizedWord>,
    pub root4: Option<NormalizedWord>,
    pub fallback: Option<FallbackOutcome>,
}

/// Outcome of a full extraction run over one token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionResult {
    pub root: Option<NormalizedWord>,
    pub size_class: SizeClass,
    pub stage: Stage,
    pub candidates: StemCandidates,
    pub trace: Option<TraceRecord>,
}

/// Why extraction could not even begin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractError {
    Normalize(NormalizeError),
    /// Fewer than three letters: no stem can be generated and no fallback
    /// applies.
    NotAWord { letters: usize },
}

impl fmt::Display for ExtractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Normalize(e) => write!(f, "{e}"),
            Self::NotAWord { letters } => {
                write!(f, "not a stemmable word: {letters} letters")
            }
        }
    }
}

impl core::error::Error for ExtractError {}

impl From<NormalizeError> for ExtractError {
    fn from(e: NormalizeError) -> Self {
        Self::Normalize(e)
    }
}

pub(crate) fn word_for_extraction(token: &str) -> Result<NormalizedWord, ExtractError> {
    let word = normalize_word(token)?;
    if word.len() < 3 {
        return Err(ExtractError::NotAWord {
            letters: word.len(),
        });
    }
    Ok(word)
}

pub(crate) fn assemble_result(
    candidates: StemCandidates,
    root3: Option<NormalizedWord>,
    root4: Option<NormalizedWord>,
    fallback: Option<FallbackOutcome>,
    bits: PositionBits,
    bounds: BoundarySets,
    options: &ExtractOptions,
) -> ExtractionResult {
    // Both sizes may match; the trilateral root wins and both stay in the trace.
    let (root, stage) = if let Some(r) = root3.clone().or_else(|| root4.clone()) {
        (Some(r), Stage::Direct)
    } else if let Some(outcome) = &fallback {
        match (&outcome.root, &outcome.method) {
            (Some(r), Some(FallbackMethod::RestoredForm)) => {
                (Some(r.clone()), Stage::RestoredForm)
            }
            (Some(r), Some(FallbackMethod::InfixRemoved)) => {
                (Some(r.clone()), Stage::InfixRemoved)
            }
            _ => (None, Stage::NotFound),
        }
    } else {
        (None, Stage::NotFound)
    };
    let size_class = root
        .as_ref()
        .map_or(SizeClass::None, |r| SizeClass::for_len(r.len()));
    let trace = if options.trace {
        Some(TraceRecord {
            bits,
            bounds,
            root3,
            root4,
            fallback,
        })
    } else {
        None
    };
    ExtractionResult {
        root,
        size_class,
        stage,
        candidates,
        trace,
    }
}

/// Runs the whole extraction over a raw token: normalize, check positions,
/// produce boundaries, generate stems, compare, and (when enabled) repair.
pub fn extract_root(
    token: &str,
    lexicon: &RootLexicon,
    options: &ExtractOptions,
) -> Result<ExtractionResult, ExtractError> {
    let word = word_for_extraction(token)?;
    let bits = check_positions(&word);
    let bounds = produce_boundaries(&bits, &word);
    let candidates = generate_stems(&word, &bounds, options.capacity);
    let (root3, root4) = compare_and_extract(&candidates, lexicon);
    let fallback = (root3.is_none() && root4.is_none() && options.infix_processing).then(|| {
        infix::fallback_extract(&candidates, lexicon, options.infix_letters())
    });
    Ok(assemble_result(
        candidates, root3, root4, fallback, bits, bounds, options,
    ))
}

fn render_word(word: &NormalizedWord, latin: bool) -> String {
    if latin {
        romanize(word.letters())
    } else {
        word.to_string()
    }
}

fn render_opt(word: &Option<NormalizedWord>, latin: bool) -> String {
    word.as_ref()
        .map_or_else(|| "-".to_string(), |w| render_word(w, latin))
}

fn render_list(words: &[NormalizedWord], latin: bool) -> String {
    let mut out = String::from("[");
    for (i, w) in words.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&render_word(w, latin));
    }
    out.push(']');
    out
}

impl BoundarySets {
    fn render(&self) -> (String, String) {
        let join_i32 = |v: &[i32]| {
            let items: Vec<String> = v.iter().map(|p| p.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        let items: Vec<String> = self.suffix_starts.iter().map(|s| s.to_string()).collect();
        (join_i32(&self.prefix_ends), format!("{{{}}}", items.join(",")))
    }
}

impl ExtractionResult {
    /// One line per stage, in the trace format the command-line tool prints.
    /// Empty when the result was produced without tracing.
    pub fn render_trace(&self, latin: bool) -> Vec<String> {
        let Some(trace) = &self.trace else {
            return Vec::new();
        };
        let (p, s) = trace.bounds.render();
        let mut lines = Vec::with_capacity(5);
        lines.push(format!(
            "S1 prefixBits={} suffixBits={}",
            trace.bits.prefix_pattern(),
            trace.bits.suffix_pattern()
        ));
        lines.push(format!("S2 P={p} S={s}"));
        let truncated = if self.candidates.truncated {
            " truncated=1"
        } else {
            ""
        };
        lines.push(format!(
            "S3 tri={} quad={}{truncated}",
            render_list(&self.candidates.tri, latin),
            render_list(&self.candidates.quad, latin)
        ));
        lines.push(format!(
            "S4 root3={} root4={}",
            render_opt(&trace.root3, latin),
            render_opt(&trace.root4, latin)
        ));
        let s5 = match &trace.fallback {
            None => "fallback=skipped".to_string(),
            Some(outcome) => {
                let attempted = render_list(&outcome.attempted, latin);
                match (&outcome.root, &outcome.method) {
                    (Some(r), Some(m)) => {
                        let stage = match m {
                            FallbackMethod::RestoredForm => Stage::RestoredForm,
                            FallbackMethod::InfixRemoved => Stage::InfixRemoved,
                        };
                        format!(
                            "fallback={stage} root={} attempted={attempted}",
                            render_word(r, latin)
                        )
                    }
                    _ => format!("fallback=none attempted={attempted}"),
                }
            }
        };
        lines.push(format!("S5 {s5}"));
        lines
    }

    /// Root rendered as Arabic or romanized names; `-` when absent.
    pub fn render_root(&self, latin: bool) -> String {
        render_opt(&self.root, latin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn word(s: &str) -> NormalizedWord {
        normalize_word(s).unwrap()
    }

    fn fixture() -> RootLexicon {
        RootLexicon::parse("درس\nلعب\nسقي\nدحرج\nقول\nحج\nكتب\n", "fixture").unwrap()
    }

    fn strings(list: &[NormalizedWord]) -> Vec<String> {
        list.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn check_positions_examples() {
        let bits = check_positions(&word("يكتبون"));
        assert_eq!(bits.suffix, vec![true, true, true, false, true, true]);
        assert_eq!(bits.suffix_visual_pattern(), "110111");

        let bits = check_positions(&word("سيلعبون"));
        assert_eq!(bits.prefix, vec![true, true, true, false, false]);

        let bits = check_positions(&word("درس"));
        assert_eq!(bits.prefix, vec![false, false, true]);
        assert_eq!(bits.prefix.len(), 3);
    }

    #[test]
    fn prefix_window_is_five_positions() {
        let bits = check_positions(&word("أفاستسقيناكموها"));
        assert_eq!(bits.prefix.len(), 5);
        assert_eq!(bits.suffix.len(), 15);
    }

    #[test]
    fn produce_boundaries_examples() {
        let w = word("يكتبون");
        let b = produce_boundaries(&check_positions(&w), &w);
        assert_eq!(b.suffix_starts, vec![4, 5, 6]);

        let w = word("سيلعبون");
        let b = produce_boundaries(&check_positions(&w), &w);
        assert_eq!(b.prefix_ends, vec![-1, 0, 1, 2]);
        assert_eq!(b.suffix_starts, vec![5, 6, 7]);

        let w = word("دحض");
        let b = produce_boundaries(&check_positions(&w), &w);
        assert_eq!(b.prefix_ends, vec![-1]);
        assert_eq!(b.suffix_starts, vec![3]);
    }

    #[test]
    fn generate_stems_examples() {
        let w = word("سيلعبون");
        let b = produce_boundaries(&check_positions(&w), &w);
        let c = generate_stems(&w, &b, DEFAULT_CAPACITY);
        assert_eq!(strings(&c.tri), ["لعب", "عبو"]);
        assert_eq!(strings(&c.quad), ["يلعب", "لعبو", "عبون"]);
        assert!(!c.truncated);

        let w = word("تدحرجون");
        let b = produce_boundaries(&check_positions(&w), &w);
        let c = generate_stems(&w, &b, DEFAULT_CAPACITY);
        assert_eq!(strings(&c.tri), Vec::<String>::new());
        assert_eq!(strings(&c.quad), ["دحرج"]);

        let w = word("درس");
        let b = produce_boundaries(&check_positions(&w), &w);
        let c = generate_stems(&w, &b, DEFAULT_CAPACITY);
        assert_eq!(strings(&c.tri), ["درس"]);
        assert!(c.quad.is_empty());
    }

    #[test]
    fn capacity_saturates_and_flags() {
        let w = word("أفاستسقيناكموها");
        let b = produce_boundaries(&check_positions(&w), &w);
        let full = generate_stems(&w, &b, DEFAULT_CAPACITY);
        assert_eq!(strings(&full.tri), ["تسق", "سقي"]);
        assert_eq!(strings(&full.quad), ["ستسق", "تسقي", "سقين"]);

        let cut = generate_stems(&w, &b, 1);
        assert_eq!(cut.tri.len(), 1);
        assert_eq!(cut.quad.len(), 1);
        assert!(cut.truncated);
        assert_eq!(cut.tri[0], full.tri[0]);
    }

    #[test]
    fn default_capacity_never_overflows() {
        // At most one stem of each size exists per prefix end, and there are
        // at most six prefix ends.
        let w = word("يتياتياتياتيتين");
        let b = produce_boundaries(&check_positions(&w), &w);
        let c = generate_stems(&w, &b, DEFAULT_CAPACITY);
        assert!(c.tri.len() <= 6 && c.quad.len() <= 6);
        assert!(!c.truncated);
    }

    #[test]
    fn compare_and_extract_examples() {
        let lex = fixture();
        let w = word("سيلعبون");
        let b = produce_boundaries(&check_positions(&w), &w);
        let c = generate_stems(&w, &b, DEFAULT_CAPACITY);
        let (root3, root4) = compare_and_extract(&c, &lex);
        assert_eq!(root3, Some(word("لعب")));
        assert_eq!(root4, None);

        let w = word("تدحرجون");
        let b = produce_boundaries(&check_positions(&w), &w);
        let c = generate_stems(&w, &b, DEFAULT_CAPACITY);
        let (root3, root4) = compare_and_extract(&c, &lex);
        assert_eq!(root3, None);
        assert_eq!(root4, Some(word("دحرج")));

        let (root3, root4) = compare_and_extract(&StemCandidates::default(), &lex);
        assert_eq!((root3, root4), (None, None));
    }

    #[test]
    fn extract_golden_words() {
        let lex = fixture();
        let opts = ExtractOptions::default();

        let r = extract_root("سيلعبون", &lex, &opts).unwrap();
        assert_eq!(r.root, Some(word("لعب")));
        assert_eq!(r.stage, Stage::Direct);
        assert_eq!(r.size_class, SizeClass::Trilateral);

        let r = extract_root("أفاستسقيناكموها", &lex, &opts).unwrap();
        assert_eq!(r.root, Some(word("سقي")));
        assert_eq!(r.stage, Stage::Direct);

        let r = extract_root("قال", &lex, &opts).unwrap();
        assert_eq!(r.root, Some(word("قول")));
        assert_eq!(r.stage, Stage::RestoredForm);

        let r = extract_root("حاج", &lex, &opts).unwrap();
        assert_eq!(r.root, Some(word("حج")));
        assert_eq!(r.stage, Stage::InfixRemoved);
        assert_eq!(r.size_class, SizeClass::Bilateral);

        let r = extract_root("كاتب", &lex, &opts).unwrap();
        assert_eq!(r.root, Some(word("كتب")));
        assert_eq!(r.stage, Stage::InfixRemoved);
    }

    #[test]
    fn extract_not_found_without_infix() {
        let lex = fixture();
        let opts = ExtractOptions {
            infix_processing: false,
            ..Default::default()
        };
        let r = extract_root("قال", &lex, &opts).unwrap();
        assert_eq!(r.root, None);
        assert_eq!(r.stage, Stage::NotFound);
        assert_eq!(r.size_class, SizeClass::None);
    }

    #[test]
    fn extract_error_paths() {
        let lex = fixture();
        let opts = ExtractOptions::default();
        assert!(matches!(
            extract_root("", &lex, &opts),
            Err(ExtractError::Normalize(NormalizeError::EmptyAfterNormalization))
        ));
        assert!(matches!(
            extract_root("حج", &lex, &opts),
            Err(ExtractError::NotAWord { letters: 2 })
        ));
    }

    #[test]
    fn trilateral_preferred_when_both_match() {
        let lex = RootLexicon::parse("درس\nيدرس\n", "both").unwrap();
        let r = extract_root("يدرس", &lex, &ExtractOptions { trace: true, ..Default::default() })
            .unwrap();
        assert_eq!(r.root, Some(word("درس")));
        let trace = r.trace.as_ref().unwrap();
        assert_eq!(trace.root3, Some(word("درس")));
        assert_eq!(trace.root4, Some(word("يدرس")));
    }

    #[test]
    fn direct_root_is_a_candidate() {
        let lex = fixture();
        let r = extract_root("سيلعبون", &lex, &ExtractOptions::default()).unwrap();
        let root = r.root.unwrap();
        assert!(r.candidates.tri.contains(&root) || r.candidates.quad.contains(&root));
    }

    #[test]
    fn trace_lines_cover_all_stages() {
        let lex = fixture();
        let opts = ExtractOptions {
            trace: true,
            ..Default::default()
        };
        let r = extract_root("قال", &lex, &opts).unwrap();
        let lines = r.render_trace(false);
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("S1 prefixBits=011 suffixBits=010"));
        assert_eq!(lines[1], "S2 P={-1} S={3}");
        assert_eq!(lines[2], "S3 tri=[قال] quad=[]");
        assert_eq!(lines[3], "S4 root3=- root4=-");
        assert!(lines[4].contains("restoredForm"));

        let latin = r.render_trace(true);
        assert!(latin[2].contains("Qaf-Alef-Lam"));
    }

    #[test]
    fn no_trace_without_flag() {
        let lex = fixture();
        let r = extract_root("درس", &lex, &ExtractOptions::default()).unwrap();
        assert!(r.trace.is_none());
        assert!(r.render_trace(false).is_empty());
    }
}
