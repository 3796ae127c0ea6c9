//! Words over the alphabet `{1, …, n−1}` of simple-reflection subscripts.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

/// A finite sequence of letters in `[1, n−1]` together with its ambient
/// degree `n`.
///
/// The degree is explicit so that the same letter string in different
/// `S_n` is a different word (complementation depends on `n`). Ordering is
/// lexicographic on the letters, then by degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    degree: usize,
}

impl Word {
    pub fn new(letters: &[usize], degree: usize) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidDegree(degree));
        }
        for (idx, &letter) in letters.iter().enumerate() {
            if letter == 0 || letter >= degree {
                return Err(Error::LetterOutOfRange {
                    letter,
                    degree,
                    position: Some(idx + 1),
                });
            }
        }
        Ok(Self {
            letters: letters.iter().map(|&l| l as u8).collect(),
            degree,
        })
    }

    pub fn empty(degree: usize) -> Result<Self> {
        Self::new(&[], degree)
    }

    pub(crate) fn from_raw(letters: Vec<u8>, degree: usize) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && (l as usize) < degree));
        Self { letters, degree }
    }

    pub fn letters(&self) -> Vec<usize> {
        self.letters.iter().map(|&l| l as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product of the letters' simple reflections, applied on the right
    /// of the identity in reading order.
    pub fn evaluate(&self) -> Permutation {
        let mut entries: Vec<u8> = (1..=self.degree as u8).collect();
        for &l in &self.letters {
            entries.swap(l as usize - 1, l as usize);
        }
        Permutation::from_raw(entries)
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }

    pub fn reverse(&self) -> Self {
        let letters = self.letters.iter().rev().copied().collect();
        Self::from_raw(letters, self.degree)
    }

    /// Replaces each letter `i` by `n − i`.
    pub fn complement(&self) -> Self {
        let n = self.degree as u8;
        let letters = self.letters.iter().map(|&l| n - l).collect();
        Self::from_raw(letters, self.degree)
    }

    /// `{w, rev w, w̄, rev w̄}` without duplicates, sorted.
    pub fn symmetries(&self) -> Vec<Self> {
        let complement = self.complement();
        let mut out = vec![
            self.clone(),
            self.reverse(),
            complement.reverse(),
            complement,
        ];
        out.sort();
        out.dedup();
        out
    }

    /// Whether some adjacent pair of letters differs by at least 2.
    pub fn supports_commutation_move(&self) -> bool {
        self.letters.windows(2).any(|w| w[0].abs_diff(w[1]) >= 2)
    }

    /// Whether every adjacent pair of letters differs by exactly 1.
    pub fn has_unit_steps(&self) -> bool {
        self.letters.windows(2).all(|w| w[0].abs_diff(w[1]) == 1)
    }

    /// Concatenation; both words must live in the same `S_n`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_raw(letters, self.degree))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩_{}", self.degree)
    }
}
