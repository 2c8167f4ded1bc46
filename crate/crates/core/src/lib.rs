//! Core engine for Arabic verb-root extraction.
//!
//! The crate is organized around the five processing stages of the extractor:
//! per-position affix checks ([`stemmer::check_positions`]), boundary
//! production with masking ([`stemmer::produce_boundaries`]), stem generation
//! by substring truncation ([`stemmer::generate_stems`]), lexicon comparison
//! ([`stemmer::compare_and_extract`]), and infix repair ([`infix`]). On top of
//! that sit a cycle-level timing model of the non-pipelined and pipelined
//! five-stage processors ([`pipeline`]) and a corpus evaluation harness
//! ([`eval`]).
//!
//! The crate is `no_std` (with `alloc`); file access, rendering, and the
//! command-line front end live in the companion `rootpipe` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod eval;
pub mod infix;
pub mod letters;
pub mod lexicon;
pub mod pipeline;
pub mod stemmer;
pub mod tokenize;
pub mod word;

pub use letters::{classify, LetterClass, LetterClasses};
pub use lexicon::{LexiconStats, MalformedRoot, RootLexicon};
pub use stemmer::{
    extract_root, ExtractError, ExtractOptions, ExtractionResult, SizeClass, Stage,
    StemCandidates,
};
pub use tokenize::tokenize;
pub use word::{normalize_word, NormalizeError, NormalizedWord};
