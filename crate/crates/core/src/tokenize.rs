//! Whitespace tokenization with edge punctuation removal.

use alloc::vec::Vec;

fn is_edge_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '\u{060C}' // Arabic comma
                | '\u{061B}' // Arabic semicolon
                | '\u{061F}' // Arabic question mark
                | '\u{06D4}' // Arabic full stop
                | '\u{00AB}'
                | '\u{00BB}'
                | '\u{2018}'
                | '\u{2019}'
                | '\u{201C}'
                | '\u{201D}'
                | '\u{2026}'
        )
}

/// Splits on Unicode whitespace, trims punctuation from token edges, and
/// drops tokens that end up empty. Order is preserved.
pub fn tokenize(text: &str) -> Vec<&str> {
    text.split_whitespace()
        .map(|t| t.trim_matches(is_edge_punctuation))
        .filter(|t| !t.is_empty())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn splits_on_whitespace() {
        assert_eq!(tokenize("قال الرجل"), vec!["قال", "الرجل"]);
    }

    #[test]
    fn strips_edge_punctuation() {
        assert_eq!(tokenize("درس، ثم كتب."), vec!["درس", "ثم", "كتب"]);
        assert_eq!(tokenize("«قال»"), vec!["قال"]);
    }

    #[test]
    fn empty_input_and_pure_punctuation() {
        assert_eq!(tokenize(""), Vec::<&str>::new());
        assert_eq!(tokenize(" ،، . "), Vec::<&str>::new());
    }

    #[test]
    fn preserves_order_across_lines() {
        assert_eq!(tokenize("درس\nلعب\tكتب"), vec!["درس", "لعب", "كتب"]);
    }
}
