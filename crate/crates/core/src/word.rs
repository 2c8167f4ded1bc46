//! Normalization of raw tokens into fixed-width analyzer words.
//!
//! A [`NormalizedWord`] is what the extraction stages operate on: at most 15
//! letters (the register-file width of the hardware model), each a base
//! Arabic letter representable in a single 16-bit code unit, with all
//! diacritics stripped and alef-hamza-below folded to bare alef.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::letters::{is_arabic_letter, is_diacritic};

/// Maximum word length in letters, matching the 15-slot register file.
pub const MAX_WORD_LEN: usize = 15;

/// A diacritic-free, hamza-normalized word of 1..=15 Arabic letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalizedWord {
    letters: Vec<char>,
}

impl NormalizedWord {
    pub(crate) fn from_letters(letters: Vec<char>) -> Self {
        debug_assert!(!letters.is_empty() && letters.len() <= MAX_WORD_LEN);
        Self { letters }
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in logical order (index 0 is the first letter).
    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// Contiguous sub-word over `[start, end)`.
    pub(crate) fn sub(&self, start: usize, end: usize) -> Self {
        Self::from_letters(self.letters[start..end].to_vec())
    }
}

impl fmt::Display for NormalizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalizedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Why a token could not be normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizeError {
    /// Nothing left once diacritics were removed.
    EmptyAfterNormalization,
    /// More letters than the 15-slot word width.
    WordTooLong { letters: usize },
    /// A character outside the base Arabic alphabet.
    NonArabicCharacter { found: char },
}

impl fmt::Display for NormalizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyAfterNormalization => write!(f, "empty after normalization"),
            Self::WordTooLong { letters } => {
                write!(f, "word too long: {letters} letters (limit {MAX_WORD_LEN})")
            }
            Self::NonArabicCharacter { found } => {
                write!(f, "non-Arabic character U+{:04X}", *found as u32)
            }
        }
    }
}

impl core::error::Error for NormalizeError {}

/// Normalization switches beyond the always-on rules.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NormalizeOptions {
    /// Fold alef-madda (U+0622) to bare alef. Off by default.
    pub fold_alef_madda: bool,
}

/// Removes the diacritic marks, leaving base letters and their order intact.
pub fn strip_diacritics(text: &str) -> String {
    text.chars().filter(|&c| !is_diacritic(c)).collect()
}

/// Folds alef-hamza-below (U+0625) to bare alef. Alef-hamza-above (U+0623)
/// is a prefix letter in its own right and is left alone.
pub fn normalize_hamza(text: &str) -> String {
    text.chars()
        .map(|c| if c == '\u{0625}' { '\u{0627}' } else { c })
        .collect()
}

/// Strips diacritics, normalizes hamza, and validates the result.
pub fn normalize_word(token: &str) -> Result<NormalizedWord, NormalizeError> {
    normalize_word_with(token, &NormalizeOptions::default())
}

pub fn normalize_word_with(
    token: &str,
    options: &NormalizeOptions,
) -> Result<NormalizedWord, NormalizeError> {
    let text = normalize_hamza(&strip_diacritics(token));
    let mut letters = Vec::new();
    for c in text.chars() {
        let c = if options.fold_alef_madda && c == '\u{0622}' {
            '\u{0627}'
        } else {
            c
        };
        if !is_arabic_letter(c) {
            return Err(NormalizeError::NonArabicCharacter { found: c });
        }
        letters.push(c);
    }
    if letters.is_empty() {
        return Err(NormalizeError::EmptyAfterNormalization);
    }
    if letters.len() > MAX_WORD_LEN {
        return Err(NormalizeError::WordTooLong {
            letters: letters.len(),
        });
    }
    Ok(NormalizedWord::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn strip_diacritics_examples() {
        assert_eq!(strip_diacritics("دَرَسَ"), "درس");
        assert_eq!(strip_diacritics("درس"), "درس");
        assert_eq!(strip_diacritics("يَدْرُسُونَ"), "يدرسون");
    }

    #[test]
    fn strip_preserves_base_letter_count() {
        let input = "يَدْرُسُونَ";
        let base = input.chars().filter(|&c| !is_diacritic(c)).count();
        assert_eq!(strip_diacritics(input).chars().count(), base);
    }

    #[test]
    fn hamza_examples() {
        assert_eq!(normalize_hamza("إلى"), "الى");
        assert_eq!(normalize_hamza("أدرس"), "أدرس");
        assert_eq!(normalize_hamza("درس"), "درس");
    }

    #[test]
    fn normalize_word_examples() {
        assert_eq!(normalize_word("دَرَسْتُ").unwrap().to_string(), "درست");
        assert_eq!(
            normalize_word(""),
            Err(NormalizeError::EmptyAfterNormalization)
        );
        // All-diacritic input also empties out.
        assert_eq!(
            normalize_word("َُ"),
            Err(NormalizeError::EmptyAfterNormalization)
        );
        let sixteen = "ب".repeat(16);
        assert_eq!(
            normalize_word(&sixteen),
            Err(NormalizeError::WordTooLong { letters: 16 })
        );
        assert_eq!(
            normalize_word("abc"),
            Err(NormalizeError::NonArabicCharacter { found: 'a' })
        );
    }

    #[test]
    fn fifteen_letters_is_the_boundary() {
        let fifteen = "ب".repeat(15);
        assert_eq!(normalize_word(&fifteen).unwrap().len(), 15);
    }

    #[test]
    fn alef_madda_fold_is_opt_in() {
        assert_eq!(normalize_word("آمن").unwrap().to_string(), "آمن");
        let opts = NormalizeOptions {
            fold_alef_madda: true,
        };
        assert_eq!(normalize_word_with("آمن", &opts).unwrap().to_string(), "امن");
    }

    #[test]
    fn alef_maksura_left_untouched() {
        assert_eq!(normalize_word("سقى").unwrap().to_string(), "سقى");
    }

    #[test]
    fn idempotent_on_normalized_output() {
        for token in ["دَرَسْتُ", "إلى", "أفاستسقيناكموها"] {
            let once = normalize_word(token).unwrap();
            let twice = normalize_word(&once.to_string()).unwrap();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn letters_fit_one_utf16_code_unit() {
        let w = normalize_word("أفاستسقيناكموها").unwrap();
        assert_eq!(w.len(), 15);
        for &c in w.letters() {
            assert!((c as u32) <= 0xFFFF);
        }
    }
}
