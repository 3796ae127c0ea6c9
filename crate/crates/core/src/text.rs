//! Text forms of permutations and words.
//!
//! A permutation of degree at most 9 prints as a digit string (`2341`),
//! otherwise as comma-separated values. A word whose ambient degree is at
//! most 10 prints as a digit string (`123212`), otherwise as
//! comma-separated letters (`1,2,13,12`). The empty word prints as the
//! empty string. Parsing accepts either form.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;

fn join(values: impl Iterator<Item = usize>, compact: bool) -> String {
    let parts: Vec<String> = values.map(|v| v.to_string()).collect();
    parts.join(if compact { "" } else { "," })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.degree() <= 9;
        f.write_str(&join(self.entries().into_iter(), compact))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.degree() <= 10;
        f.write_str(&join(self.letters().into_iter(), compact))
    }
}

fn malformed(text: &str, reason: impl Into<String>) -> Error {
    Error::Malformed {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// Splits `text` into integers: comma-separated when a comma is present,
/// otherwise one integer per digit.
fn split_integers(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        text.split(',')
            .enumerate()
            .map(|(k, part)| {
                let part = part.trim();
                part.parse::<usize>().map_err(|_| {
                    malformed(
                        text,
                        format!("entry {:?} at position {} is not an integer", part, k + 1),
                    )
                })
            })
            .collect()
    } else {
        text.chars()
            .enumerate()
            .map(|(k, c)| {
                c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                    malformed(
                        text,
                        format!("character {:?} at position {} is not a digit", c, k + 1),
                    )
                })
            })
            .collect()
    }
}

/// Parses one-line notation, either `2341` or `7,2,6,5,4,1,3`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let values = split_integers(text)?;
    if values.is_empty() {
        return Err(malformed(text, "empty permutation"));
    }
    Permutation::new(&values)
}

/// Parses a word of `S_n`, either `123212` or `1,2,13,12`.
///
/// Above degree 10 a comma-free string is a single letter, since that is
/// how a one-letter word prints there.
pub fn parse_word(text: &str, n: usize) -> Result<Word> {
    let trimmed = text.trim();
    let letters = if n > 10 && !trimmed.is_empty() && !trimmed.contains(',') {
        let letter = trimmed
            .parse::<usize>()
            .map_err(|_| malformed(text, "expected a letter or comma-separated letters"))?;
        vec![letter]
    } else {
        split_integers(trimmed)?
    };
    Word::new(&letters, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn permutations() {
        assert_eq!(
            parse_permutation("2341").unwrap().entries(),
            vec![2, 3, 4, 1]
        );
        let p = parse_permutation("7,2,6,5,4,1,3").unwrap();
        assert_eq!(p.to_string(), "7265413");
        assert_eq!(
            parse_permutation("2331").unwrap_err().to_string(),
            "value 3 repeated"
        );
        assert!(parse_permutation("").is_err());
        assert!(parse_permutation("12a").is_err());
        let big = parse_permutation("2,1,3,4,5,6,7,8,9,10").unwrap();
        assert_eq!(big.to_string(), "2,1,3,4,5,6,7,8,9,10");
    }

    #[test]
    fn words() {
        assert_eq!(
            parse_word("123212", 4).unwrap().letters(),
            vec![1, 2, 3, 2, 1, 2]
        );
        let w = parse_word("4345654321234543", 7).unwrap();
        assert_eq!(w.len(), 16);
        assert_eq!(
            parse_word("15", 4).unwrap_err().to_string(),
            "letter 5 exceeds n-1 = 3 at position 2"
        );
        let w = parse_word("1,2,13,12", 14).unwrap();
        assert_eq!(w.to_string(), "1,2,13,12");
        assert_eq!(parse_word("9", 10).unwrap().to_string(), "9");
        assert_eq!(parse_word("12", 14).unwrap().letters(), vec![12]);
        assert_eq!(parse_word("", 3).unwrap(), Word::empty(3).unwrap());
        assert_eq!(Word::empty(3).unwrap().to_string(), "");
    }

    fn any_permutation() -> impl Strategy<Value = Permutation> {
        (1usize..14).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(&v).unwrap())
        })
    }

    fn any_word() -> impl Strategy<Value = Word> {
        (2usize..14).prop_flat_map(|n| {
            proptest::collection::vec(1..n, 0..12).prop_map(move |v| Word::new(&v, n).unwrap())
        })
    }

    proptest! {
        #[test]
        fn permutation_round_trip(p in any_permutation()) {
            let text = p.to_string();
            let back = parse_permutation(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn word_round_trip(w in any_word()) {
            let text = w.to_string();
            let back = parse_word(&text, w.degree()).unwrap();
            prop_assert_eq!(&back, &w);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
