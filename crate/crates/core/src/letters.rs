//! Letter classification for the Arabic alphabet.
//!
//! Affix membership is decided against fixed letter sets: seven letters can
//! start a prefix run, eight distinct letters can form a suffix run, and a
//! small set of letters can appear as infixes inside a root. The stock prefix
//! set additionally admits the bare alef, which survives hamza normalization
//! and occurs in interrogative/conjunctive prefix runs; the seven-letter
//! mnemonic set without it is available via [`LetterClasses::mnemonic_strict`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// The seven prefix letters plus bare alef.
pub const PREFIX_LETTERS: &[char] = &[
    '\u{0623}', // AlefHamza
    '\u{0627}', // Alef
    '\u{062A}', // Teh
    '\u{0633}', // Sin
    '\u{0641}', // Feh
    '\u{0644}', // Lam
    '\u{0646}', // Noon
    '\u{064A}', // Yeh
];

/// The seven-letter prefix mnemonic, without the bare-alef extension.
pub const PREFIX_LETTERS_MNEMONIC: &[char] = &[
    '\u{0623}', '\u{062A}', '\u{0633}', '\u{0641}', '\u{0644}', '\u{0646}', '\u{064A}',
];

/// The eight distinct letters of the suffix mnemonic.
pub const SUFFIX_LETTERS: &[char] = &[
    '\u{0627}', // Alef
    '\u{062A}', // Teh
    '\u{0643}', // Kaf
    '\u{0645}', // Meem
    '\u{0646}', // Noon
    '\u{0647}', // Heh
    '\u{0648}', // Waw
    '\u{064A}', // Yeh
];

/// The three vowel letters the infix rules focus on.
pub const INFIX_VOWELS: &[char] = &['\u{0627}', '\u{0648}', '\u{064A}'];

/// The full five-letter infix mnemonic.
pub const INFIX_FULL: &[char] = &[
    '\u{0627}', '\u{062A}', '\u{0646}', '\u{0648}', '\u{064A}',
];

/// Short-vowel and gemination marks stripped before analysis:
/// tanween (Fathatan, Dammatan, Kasratan), Fatha, Damma, Kasra, Shadda, Sukun.
pub fn is_diacritic(c: char) -> bool {
    matches!(c, '\u{064B}'..='\u{0652}')
}

/// Base Arabic letters: hamza forms through Yeh, skipping the
/// non-letter gap (extended letters and tatweel) at U+063B..=U+0640.
pub fn is_arabic_letter(c: char) -> bool {
    matches!(c, '\u{0621}'..='\u{063A}' | '\u{0641}'..='\u{064A}')
}

/// Membership flags of one letter against the three affix classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterClass {
    pub is_prefix_letter: bool,
    pub is_suffix_letter: bool,
    pub is_infix_vowel: bool,
}

/// Classifies a letter against the stock letter sets. Total and deterministic.
pub fn classify(letter: char) -> LetterClass {
    LetterClass {
        is_prefix_letter: PREFIX_LETTERS.contains(&letter),
        is_suffix_letter: SUFFIX_LETTERS.contains(&letter),
        is_infix_vowel: INFIX_VOWELS.contains(&letter),
    }
}

/// A configurable bundle of affix letter sets.
///
/// [`LetterClasses::default`] yields the stock sets used by the extractor;
/// custom bundles exist so boundary production can be probed with reduced
/// alphabets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterClasses {
    pub prefix: Vec<char>,
    pub suffix: Vec<char>,
    pub infix_vowels: Vec<char>,
    pub infix_full: Vec<char>,
}

impl Default for LetterClasses {
    fn default() -> Self {
        Self {
            prefix: PREFIX_LETTERS.to_vec(),
            suffix: SUFFIX_LETTERS.to_vec(),
            infix_vowels: INFIX_VOWELS.to_vec(),
            infix_full: INFIX_FULL.to_vec(),
        }
    }
}

impl LetterClasses {
    /// The strict seven-letter prefix mnemonic, without the bare-alef
    /// extension. Words whose prefix run passes through a bare alef will not
    /// validate past it under this bundle.
    pub fn mnemonic_strict() -> Self {
        Self {
            prefix: PREFIX_LETTERS_MNEMONIC.to_vec(),
            ..Self::default()
        }
    }

    pub fn is_prefix_letter(&self, c: char) -> bool {
        self.prefix.contains(&c)
    }

    pub fn is_suffix_letter(&self, c: char) -> bool {
        self.suffix.contains(&c)
    }
}

const LETTER_NAMES: &str = include_str!("../data/letter_names.tsv");

/// A codepoint with no entry in the display-name table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownLetter(pub char);

impl fmt::Display for UnknownLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no display name for U+{:04X}", self.0 as u32)
    }
}

impl core::error::Error for UnknownLetter {}

fn name_entries() -> impl Iterator<Item = (char, &'static str)> {
    LETTER_NAMES.lines().filter_map(|line| {
        let (hex, name) = line.split_once('\t')?;
        let cp = u32::from_str_radix(hex, 16).ok()?;
        Some((char::from_u32(cp)?, name))
    })
}

/// Romanized display name of a single letter, e.g. Sin for U+0633.
pub fn display_name(letter: char) -> Result<&'static str, UnknownLetter> {
    name_entries()
        .find(|(c, _)| *c == letter)
        .map(|(_, name)| name)
        .ok_or(UnknownLetter(letter))
}

/// Inverse of [`display_name`].
pub fn letter_for_name(name: &str) -> Option<char> {
    name_entries().find(|(_, n)| *n == name).map(|(c, _)| c)
}

/// Renders a letter sequence as dash-joined display names, e.g. Lam-Ain-Beh.
pub fn romanize(letters: &[char]) -> String {
    let mut out = String::new();
    for (i, &c) in letters.iter().enumerate() {
        if i > 0 {
            out.push('-');
        }
        out.push_str(display_name(c).unwrap_or("?"));
    }
    out
}
