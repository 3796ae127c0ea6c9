//! Permutations of `{1, …, n}` in one-line notation.
//!
//! Composition follows the right-action convention: `p.apply_simple(i)` is
//! `p·σ_i`, which exchanges the entries in positions `i` and `i + 1`. A word
//! `⟨s₁…s_t⟩` therefore evaluates to `((e·σ_{s₁})·σ_{s₂})⋯σ_{s_t}`, and
//! `⟨123⟩` evaluates to `2341`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree. Entries and letters are stored as `u8`.
pub const MAX_DEGREE: usize = u8::MAX as usize;

/// An element of the symmetric group `S_n`, stored in one-line notation.
///
/// All public interfaces are 1-indexed: entries are values in `1..=n` and
/// positions run from `1` to `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u8>,
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidDegree(n));
    }
    Ok(())
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the
    /// entries form a bijection on `{1, …, n}`.
    pub fn new(entries: &[usize]) -> Result<Self> {
        let n = entries.len();
        check_degree(n)?;
        let mut seen = vec![false; n + 1];
        for (idx, &value) in entries.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::ValueOutOfRange {
                    value,
                    degree: n,
                    position: idx + 1,
                });
            }
            if std::mem::replace(&mut seen[value], true) {
                return Err(Error::RepeatedValue { value });
            }
        }
        Ok(Self {
            entries: entries.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Trusted constructor for entries already known to be a bijection.
    pub(crate) fn from_raw(entries: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&entries));
        Self { entries }
    }

    /// The identity `12⋯n`.
    pub fn identity(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(Self::from_raw((1..=n as u8).collect()))
    }

    /// The long element `n(n−1)⋯21`.
    pub fn longest_element(n: usize) -> Result<Self> {
        check_degree(n)?;
        Ok(Self::from_raw((1..=n as u8).rev().collect()))
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// One-line notation as 1-indexed values.
    pub fn entries(&self) -> Vec<usize> {
        self.entries.iter().map(|&v| v as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.entries
    }

    /// Value at 1-indexed `position`.
    pub fn get(&self, position: usize) -> usize {
        self.entries[position - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.degree() {
            return Err(Error::LetterOutOfRange {
                letter: i,
                degree: self.degree(),
                position: None,
            });
        }
        Ok(())
    }

    /// `p·σ_i`: swaps the entries in positions `i` and `i + 1`.
    pub fn apply_simple(&self, i: usize) -> Result<Self> {
        self.check_letter(i)?;
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(Self { entries })
    }

    /// `σ_i·p`: swaps the values `i` and `i + 1` wherever they occur.
    pub fn apply_simple_left(&self, i: usize) -> Result<Self> {
        self.check_letter(i)?;
        let (a, b) = (i as u8, i as u8 + 1);
        let entries = self
            .entries
            .iter()
            .map(|&v| match v {
                v if v == a => b,
                v if v == b => a,
                v => v,
            })
            .collect();
        Ok(Self { entries })
    }

    /// The composition `p·q`, i.e. the map `k ↦ p(q(k))`. With this
    /// convention `p.multiply(σ_i) == p.apply_simple(i)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let entries = other
            .entries
            .iter()
            .map(|&q| self.entries[q as usize - 1])
            .collect();
        Ok(Self { entries })
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0u8; self.degree()];
        for (pos, &value) in self.entries.iter().enumerate() {
            entries[value as usize - 1] = pos as u8 + 1;
        }
        Self { entries }
    }

    /// Number of inversions, which is the length of every reduced word.
    pub fn length(&self) -> usize {
        let e = &self.entries;
        (0..e.len())
            .map(|a| e[a + 1..].iter().filter(|&&b| b < e[a]).count())
            .sum()
    }

    /// Letters `i` with `ℓ(p·σ_i) < ℓ(p)`, in increasing order.
    pub fn right_descents(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Letters `i` with `ℓ(σ_i·p) < ℓ(p)`: the values `i` for which `i + 1`
    /// appears to the left of `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.degree() && self.entries[i - 1] > self.entries[i]
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        if i == 0 || i >= self.degree() {
            return false;
        }
        let pos = |v: u8| self.entries.iter().position(|&x| x == v);
        pos(i as u8 + 1) < pos(i as u8)
    }

    /// Conjugation by the long element, `w₀·p·w₀`.
    pub fn conjugate_by_longest(&self) -> Self {
        let n = self.degree() as u8;
        let entries = self.entries.iter().rev().map(|&v| n + 1 - v).collect();
        Self { entries }
    }
}

fn is_bijection(entries: &[u8]) -> bool {
    let mut seen = vec![false; entries.len() + 1];
    entries.iter().all(|&v| {
        let v = v as usize;
        v >= 1 && v <= entries.len() && !std::mem::replace(&mut seen[v], true)
    })
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
