//! Stage-5 repair procedures, run when the direct lexicon comparison misses.
//!
//! Two single-pass repairs operate on the stage-3 candidates: restoring the
//! original form rewrites a trilateral stem whose middle letter is alef back
//! to the waw spelling (the common alef-for-waw surface change), and infix
//! removal drops an infix letter from the second position, reducing
//! trilaterals to bilaterals and quadrilaterals to trilaterals. Restoration
//! is tried first: a stem like قال satisfies both rules, and the restored
//! قول must win over the reduced قل.

use alloc::vec::Vec;

use crate::lexicon::RootLexicon;
use crate::stemmer::StemCandidates;
use crate::word::NormalizedWord;

/// Stems produced by [`remove_infix`], per reduced size.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepairedStems {
    /// Two-letter words reduced from trilateral stems.
    pub bilateral: Vec<NormalizedWord>,
    /// Three-letter words reduced from quadrilateral stems.
    pub trilateral: Vec<NormalizedWord>,
}

fn second_letter(stem: &NormalizedWord) -> char {
    stem.letters()[1]
}

fn drop_second(stem: &NormalizedWord) -> NormalizedWord {
    let mut letters = stem.letters().to_vec();
    letters.remove(1);
    NormalizedWord::from_letters(letters)
}

/// Drops the second letter of every candidate whose second letter is an
/// infix letter. Candidate order is preserved; non-matching stems contribute
/// nothing.
pub fn remove_infix(candidates: &StemCandidates, infix_letters: &[char]) -> RepairedStems {
    let reduce = |list: &[NormalizedWord]| {
        list.iter()
            .filter(|s| infix_letters.contains(&second_letter(s)))
            .map(drop_second)
            .collect()
    };
    RepairedStems {
        bilateral: reduce(&candidates.tri),
        trilateral: reduce(&candidates.quad),
    }
}

/// Rewrites each trilateral stem whose second letter is alef with waw in
/// that position; other stems contribute nothing.
pub fn restore_original_form(tri_candidates: &[NormalizedWord]) -> Vec<NormalizedWord> {
    tri_candidates
        .iter()
        .filter(|s| second_letter(s) == '\u{0627}')
        .map(|s| {
            let mut letters = s.letters().to_vec();
            letters[1] = '\u{0648}';
            NormalizedWord::from_letters(letters)
        })
        .collect()
}

/// Which repair produced the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FallbackMethod {
    RestoredForm,
    InfixRemoved,
}

/// Result of the stage-5 repairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FallbackOutcome {
    pub root: Option<NormalizedWord>,
    pub method: Option<FallbackMethod>,
    /// Every repaired stem tried against the lexicon, in order, up to and
    /// including the match.
    pub attempted: Vec<NormalizedWord>,
}

/// Tries restoration first, then infix removal (bilateral repairs before
/// trilateral ones, mirroring the shorter-first order of the direct
/// comparison); the first repaired stem the lexicon validates becomes the
/// root.
pub fn fallback_extract(
    candidates: &StemCandidates,
    lexicon: &RootLexicon,
    infix_letters: &[char],
) -> FallbackOutcome {
    let mut outcome = FallbackOutcome::default();

    let restored = restore_original_form(&candidates.tri);
    for stem in restored {
        outcome.attempted.push(stem.clone());
        if lexicon.contains(&stem) {
            outcome.root = Some(stem);
            outcome.method = Some(FallbackMethod::RestoredForm);
            return outcome;
        }
    }

    let reduced = remove_infix(candidates, infix_letters);
    for stem in reduced.bilateral.into_iter().chain(reduced.trilateral) {
        outcome.attempted.push(stem.clone());
        if lexicon.contains(&stem) {
            outcome.root = Some(stem);
            outcome.method = Some(FallbackMethod::InfixRemoved);
            return outcome;
        }
    }

    outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::{INFIX_FULL, INFIX_VOWELS};
    use crate::word::normalize_word;
    use alloc::string::{String, ToString};
    use alloc::vec;
    use alloc::vec::Vec;

    fn word(s: &str) -> NormalizedWord {
        normalize_word(s).unwrap()
    }

    fn tri_candidates(stems: &[&str]) -> StemCandidates {
        StemCandidates {
            tri: stems.iter().map(|s| word(s)).collect(),
            ..Default::default()
        }
    }

    fn quad_candidates(stems: &[&str]) -> StemCandidates {
        StemCandidates {
            quad: stems.iter().map(|s| word(s)).collect(),
            ..Default::default()
        }
    }

    fn strings(list: &[NormalizedWord]) -> Vec<String> {
        list.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn remove_infix_examples() {
        let r = remove_infix(&tri_candidates(&["حاج"]), INFIX_VOWELS);
        assert_eq!(strings(&r.bilateral), ["حج"]);
        assert!(r.trilateral.is_empty());

        let r = remove_infix(&quad_candidates(&["كاتب"]), INFIX_VOWELS);
        assert_eq!(strings(&r.trilateral), ["كتب"]);

        let r = remove_infix(&tri_candidates(&["درس"]), INFIX_VOWELS);
        assert!(r.bilateral.is_empty());
    }

    #[test]
    fn remove_infix_shortens_by_one() {
        let cands = tri_candidates(&["حاج", "نور", "سيد"]);
        let r = remove_infix(&cands, INFIX_VOWELS);
        for (src, out) in cands.tri.iter().zip(&r.bilateral) {
            assert_eq!(out.len(), src.len() - 1);
        }
        assert_eq!(r.bilateral.len(), 3);
    }

    #[test]
    fn restore_examples() {
        assert_eq!(strings(&restore_original_form(&[word("قال")])), ["قول"]);
        assert!(restore_original_form(&[word("درس")]).is_empty());
        // Mechanical rule: the repaired form of باع is بوع even though the
        // true root has ي; it simply fails lookup.
        assert_eq!(strings(&restore_original_form(&[word("باع")])), ["بوع"]);
    }

    #[test]
    fn restore_preserves_length() {
        for s in ["قال", "نام", "صام"] {
            let out = restore_original_form(&[word(s)]);
            assert_eq!(out[0].len(), 3);
        }
    }

    #[test]
    fn repairs_differ_at_exactly_position_one() {
        let restored = restore_original_form(&[word("قال")]);
        let src: Vec<char> = word("قال").letters().to_vec();
        let out: Vec<char> = restored[0].letters().to_vec();
        assert_eq!(src[0], out[0]);
        assert_eq!(src[2], out[2]);
        assert_ne!(src[1], out[1]);
    }

    #[test]
    fn fallback_examples() {
        let lex = RootLexicon::parse("قول\nحج\n", "f").unwrap();

        let o = fallback_extract(&tri_candidates(&["قال"]), &lex, INFIX_VOWELS);
        assert_eq!(o.root, Some(word("قول")));
        assert_eq!(o.method, Some(FallbackMethod::RestoredForm));

        let o = fallback_extract(&tri_candidates(&["حاج"]), &lex, INFIX_VOWELS);
        assert_eq!(o.root, Some(word("حج")));
        assert_eq!(o.method, Some(FallbackMethod::InfixRemoved));

        let o = fallback_extract(&tri_candidates(&["درس"]), &lex, INFIX_VOWELS);
        assert_eq!(o.root, None);
        assert_eq!(o.method, None);
        assert!(o.attempted.is_empty());
    }

    #[test]
    fn restoration_wins_over_removal() {
        // قال matches both rules; with both قول and قل listed, the restored
        // form must be chosen.
        let lex = RootLexicon::parse("قول\nقل\n", "f").unwrap();
        let o = fallback_extract(&tri_candidates(&["قال"]), &lex, INFIX_VOWELS);
        assert_eq!(o.root, Some(word("قول")));
        assert_eq!(o.method, Some(FallbackMethod::RestoredForm));
    }

    #[test]
    fn full_mnemonic_is_opt_in() {
        // The second letter of حتج is an infix letter only in the full set.
        let lex = RootLexicon::parse("حج\n", "f").unwrap();
        let cands = tri_candidates(&["حتج"]);
        let o = fallback_extract(&cands, &lex, INFIX_VOWELS);
        assert_eq!(o.root, None);
        let o = fallback_extract(&cands, &lex, INFIX_FULL);
        assert_eq!(o.root, Some(word("حج")));
        assert_eq!(o.method, Some(FallbackMethod::InfixRemoved));
    }

    #[test]
    fn attempted_lists_every_tried_stem() {
        let lex = RootLexicon::parse("كتب\n", "f").unwrap();
        let cands = StemCandidates {
            tri: vec![word("قال")],
            quad: vec![word("كاتب")],
            truncated: false,
        };
        let o = fallback_extract(&cands, &lex, INFIX_VOWELS);
        // قول tried (restore), then قل (removal), then كتب matches.
        assert_eq!(strings(&o.attempted), ["قول", "قل", "كتب"]);
        assert_eq!(o.root, Some(word("كتب")));
    }
}
