use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid degree {0}: expected 1 ≤ n ≤ 255")]
    InvalidDegree(usize),
    #[error("value {value} out of range 1..={degree} at position {position}")]
    ValueOutOfRange {
        value: usize,
        degree: usize,
        position: usize,
    },
    #[error("value {value} repeated")]
    RepeatedValue { value: usize },
    #[error("{}", letter_message(*letter, *degree, *position))]
    LetterOutOfRange {
        letter: usize,
        degree: usize,
        position: Option<usize>,
    },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("adjacent entries at positions {position} and {} are equal", position + 1)]
    AdjacentEqual { position: usize },
    #[error("sequence is empty")]
    EmptySequence,
    #[error("malformed input {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error("word cap of {cap} exceeded after {seen} reduced words")]
    CapExceeded { cap: usize, seen: usize },
    #[error("degree {n} exceeds the sweep bound {bound}")]
    SweepBoundExceeded { n: usize, bound: usize },
    #[error("count overflowed 128 bits")]
    CountOverflow,
    #[error("zig-zag needs 1 ≤ i < j ≤ n-1, got i = {i}, j = {j}, n = {n}")]
    InvalidZigzag { i: usize, j: usize, n: usize },
}

fn letter_message(letter: usize, degree: usize, position: Option<usize>) -> String {
    let what = if letter == 0 {
        "letter 0 is below 1".to_string()
    } else {
        format!("letter {letter} exceeds n-1 = {}", degree.saturating_sub(1))
    };
    match position {
        Some(p) => format!("{what} at position {p}"),
        None => what,
    }
}
