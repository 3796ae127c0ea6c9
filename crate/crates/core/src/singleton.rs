//! Reduced words that form their own commutation class.
//!
//! A reduced word supports no commutation move exactly when every pair of
//! adjacent letters differs by one, so `C(w)` is found by a depth-first
//! walk that only ever steps to a neighboring letter. This never touches
//! the rest of `R(w)`.

use std::collections::BTreeMap;

use crate::classes::ReducedWords;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::profile::{is_vee, is_wedge, pinnacle_vale, PinnacleValeProfile};
use crate::word::Word;

/// `C(p)` in lexicographic order. The identity yields the empty word.
pub fn singleton_words(p: &Permutation) -> Vec<Word> {
    ReducedWords::unit_steps(p).collect()
}

/// The word `123⋯(n−1)⋯321 234⋯(n−2)⋯432 ⋯` for the long element: block
/// `k` climbs from `k` to `n − k` and falls back to `k`.
pub fn long_element_singleton(n: usize) -> Result<Word> {
    if n < 2 {
        return Err(Error::InvalidDegree(n));
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..=n / 2 {
        letters.extend(k..=n - k);
        letters.extend((k..n - k).rev());
    }
    Word::new(&letters, n)
}

/// The symmetries of [`long_element_singleton`], sorted.
pub fn long_element_class(n: usize) -> Result<Vec<Word>> {
    Ok(long_element_singleton(n)?.symmetries())
}

/// Which of the five necessary conditions for membership in `C(w)` a word
/// satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub word: Word,
    /// `p(s)` is a wedge.
    pub prop_a: bool,
    /// `v(s)` is a vee.
    pub prop_b: bool,
    /// At least one of them is strict.
    pub prop_c: bool,
    /// Some minimum and some maximum of `pv(s)` are adjacent in `pv(s)`.
    pub prop_d: bool,
    /// Every repeated pinnacle or vale value has an occurrence at an
    /// endpoint of `s`.
    pub prop_e: bool,
    pub all_pass: bool,
}

fn repeated_values_touch_endpoint(
    entries: &[(usize, u8)],
    profile: &PinnacleValeProfile<u8>,
) -> bool {
    let mut by_value: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
    for &(pos, v) in entries {
        by_value.entry(v).or_default().push(pos);
    }
    by_value
        .values()
        .filter(|positions| positions.len() >= 2)
        .all(|positions| positions.iter().any(|&p| profile.is_endpoint(p)))
}

fn extremes_adjacent(profile: &PinnacleValeProfile<u8>) -> bool {
    let values = profile.pv_values();
    let (Some(&lo), Some(&hi)) = (values.iter().min(), values.iter().max()) else {
        return true;
    };
    if values.len() == 1 {
        return true;
    }
    values
        .windows(2)
        .any(|w| (w[0] == lo && w[1] == hi) || (w[0] == hi && w[1] == lo))
}

/// Evaluates properties (a) to (e) on the pinnacle/vale profile of `w`.
///
/// Meant for members of `C(w)`, but runs on any word without adjacent equal
/// letters. The empty word passes vacuously.
pub fn check_theorem_properties(w: &Word) -> TheoremReport {
    let pass = |prop_a, prop_b, prop_c, prop_d, prop_e| TheoremReport {
        word: w.clone(),
        prop_a,
        prop_b,
        prop_c,
        prop_d,
        prop_e,
        all_pass: prop_a && prop_b && prop_c && prop_d && prop_e,
    };
    if w.is_empty() {
        return pass(true, true, true, true, true);
    }
    let Ok(profile) = pinnacle_vale(w.raw()) else {
        return pass(false, false, false, false, false);
    };
    // Nonempty strings always have at least one pinnacle and one vale.
    let wedge = is_wedge(&profile.pinnacle_values()).expect("nonempty");
    let vee = is_vee(&profile.vale_values()).expect("nonempty");
    pass(
        wedge.holds,
        vee.holds,
        wedge.strict || vee.strict,
        extremes_adjacent(&profile),
        repeated_values_touch_endpoint(&profile.pinnacles, &profile)
            && repeated_values_touch_endpoint(&profile.vales, &profile),
    )
}

/// Every maximal stretch of `w` running between nearest occurrences of two
/// letters `x < y` must be the run of consecutive values from one to the
/// other. Returns the `(x, y)` pairs for which some stretch is not.
pub fn increasing_run_violations(w: &Word) -> Vec<(usize, usize)> {
    let s = w.raw();
    let mut letters: Vec<u8> = s.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut out = Vec::new();
    for (a, &x) in letters.iter().enumerate() {
        for &y in &letters[a + 1..] {
            let marks: Vec<usize> = (0..s.len()).filter(|&k| s[k] == x || s[k] == y).collect();
            let bad = marks.windows(2).any(|m| {
                let (from, to) = (m[0], m[1]);
                if s[from] == s[to] {
                    return false;
                }
                let rising = s[from] == x;
                s[from..=to].windows(2).any(|pair| {
                    if rising {
                        pair[1] != pair[0] + 1
                    } else {
                        pair[0] != pair[1] + 1
                    }
                })
            });
            if bad {
                out.push((x as usize, y as usize));
            }
        }
    }
    out
}

/// Outcome of building the zig-zag word `i(i+1)⋯j⋯(i+1)i(i+1)⋯j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagReport {
    pub word: Word,
    pub reduced: bool,
    pub evaluated_length: usize,
    pub permutation: Permutation,
    /// The evaluation fixes everything outside positions `i..=j+1` and reads
    /// `(j+1) (i+2) (i+3) ⋯ j i (i+1)` inside them.
    pub window_matches: bool,
    /// Reducedness of the reverse, complement and reverse complement.
    pub symmetries_reduced: [bool; 3],
}

impl ZigzagReport {
    /// Everything the lemma predicts: the word and its symmetries are not
    /// reduced, the word has `3j − 3i + 1` letters and its evaluation has
    /// length `3j − 3i − 1` with the expected window.
    pub fn lemma_holds(&self, i: usize, j: usize) -> bool {
        !self.reduced
            && self.symmetries_reduced.iter().all(|r| !r)
            && self.word.len() == 3 * (j - i) + 1
            && self.evaluated_length == 3 * (j - i) - 1
            && self.window_matches
    }
}

pub fn zigzag_word(i: usize, j: usize, n: usize) -> Result<Word> {
    if i == 0 || i >= j || j >= n {
        return Err(Error::InvalidZigzag { i, j, n });
    }
    let letters: Vec<usize> = (i..=j).chain((i..j).rev()).chain(i + 1..=j).collect();
    Word::new(&letters, n)
}

fn zigzag_window(i: usize, j: usize, n: usize) -> Vec<usize> {
    let mut expected: Vec<usize> = (1..=n).collect();
    let window: Vec<usize> = std::iter::once(j + 1)
        .chain(i + 2..=j)
        .chain([i, i + 1])
        .collect();
    expected.splice(i - 1..=j, window);
    expected
}

pub fn check_zigzag_lemma(i: usize, j: usize, n: usize) -> Result<ZigzagReport> {
    let word = zigzag_word(i, j, n)?;
    let permutation = word.evaluate();
    let complement = word.complement();
    Ok(ZigzagReport {
        reduced: word.is_reduced(),
        evaluated_length: permutation.length(),
        window_matches: permutation.entries() == zigzag_window(i, j, n),
        symmetries_reduced: [
            word.reverse().is_reduced(),
            complement.is_reduced(),
            complement.reverse().is_reduced(),
        ],
        permutation,
        word,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PeakKind {
    Pinnacle,
    Vale,
}

/// Which endpoint of the word the repeated value sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaCase {
    pub value: usize,
    pub side: Side,
    pub kind: PeakKind,
    pub conclusion_holds: bool,
}

/// For each value `x` repeated among the pinnacles (or vales) of `w` with
/// one occurrence at an endpoint and another not at the opposite endpoint,
/// checks that `w` has the predicted descent.
///
/// With `σ = σ_{x−1}` for pinnacles and `σ_{x+1}` for vales, a right
/// endpoint predicts `ℓ(wσ) < ℓ(w)` and a left endpoint predicts
/// `ℓ(σw) < ℓ(w)`. A value occurring two or more times counts as repeated.
pub fn check_repeated_pinnacle_lemma(w: &Word) -> Vec<LemmaCase> {
    let Ok(profile) = pinnacle_vale(w.raw()) else {
        return Vec::new();
    };
    let perm = w.evaluate();
    let t = w.len();
    let mut cases = Vec::new();
    for (kind, entries) in [
        (PeakKind::Pinnacle, &profile.pinnacles),
        (PeakKind::Vale, &profile.vales),
    ] {
        let mut by_value: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
        for &(pos, v) in entries {
            by_value.entry(v).or_default().push(pos);
        }
        for (&value, positions) in by_value.iter().filter(|(_, p)| p.len() >= 2) {
            let value = value as usize;
            // σ_0 and σ_n do not exist; such a case would count as a failure.
            let letter = match kind {
                PeakKind::Pinnacle => value.checked_sub(1),
                PeakKind::Vale => Some(value + 1),
            }
            .filter(|&l| l >= 1 && l < perm.degree());
            for (side, at, opposite) in [(Side::Left, 1, t), (Side::Right, t, 1)] {
                let matches =
                    positions.contains(&at) && positions.iter().any(|&p| p != at && p != opposite);
                if !matches {
                    continue;
                }
                let conclusion_holds = letter.is_some_and(|l| match side {
                    Side::Right => perm.is_right_descent(l),
                    Side::Left => perm.is_left_descent(l),
                });
                cases.push(LemmaCase {
                    value,
                    side,
                    kind,
                    conclusion_holds,
                });
            }
        }
    }
    cases
}
