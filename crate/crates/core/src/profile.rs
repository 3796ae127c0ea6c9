//! Pinnacles, vales, wedges and vees of strings.
//!
//! A pinnacle is an entry strictly larger than each of its immediate
//! neighbors and a vale is an entry strictly smaller than each of them.
//! Endpoints qualify, so the first and last entries are always classified.
//! A single-entry string is both a pinnacle and a vale.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extremum {
    Pinnacle,
    Vale,
    /// Only for a string of length one.
    Both,
}

/// One entry of `pv(s)`. Positions are 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PvEntry<T> {
    pub position: usize,
    pub value: T,
    pub kind: Extremum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinnacleValeProfile<T> {
    /// `(position, value)` pairs in position order.
    pub pinnacles: Vec<(usize, T)>,
    pub vales: Vec<(usize, T)>,
    /// Pinnacles and vales merged by position.
    pub pv: Vec<PvEntry<T>>,
    /// Length of the underlying string.
    pub len: usize,
}

impl<T: Copy> PinnacleValeProfile<T> {
    pub fn pinnacle_values(&self) -> Vec<T> {
        self.pinnacles.iter().map(|&(_, v)| v).collect()
    }

    pub fn vale_values(&self) -> Vec<T> {
        self.vales.iter().map(|&(_, v)| v).collect()
    }

    pub fn pv_values(&self) -> Vec<T> {
        self.pv.iter().map(|e| e.value).collect()
    }

    /// Whether a 1-indexed position is the first or last of the string.
    pub fn is_endpoint(&self, position: usize) -> bool {
        position == 1 || position == self.len
    }
}

/// Classifies every entry of `s` as pinnacle, vale or neither.
///
/// Adjacent equal entries are rejected; the classification is undefined
/// for them.
pub fn pinnacle_vale<T: Ord + Copy>(s: &[T]) -> Result<PinnacleValeProfile<T>> {
    if let Some(k) = s.windows(2).position(|w| w[0] == w[1]) {
        return Err(Error::AdjacentEqual { position: k + 1 });
    }
    let mut profile = PinnacleValeProfile {
        pinnacles: Vec::new(),
        vales: Vec::new(),
        pv: Vec::new(),
        len: s.len(),
    };
    for (k, &value) in s.iter().enumerate() {
        let left = k.checked_sub(1).map(|j| s[j]);
        let right = s.get(k + 1).copied();
        let above = left.is_none_or(|x| value > x) && right.is_none_or(|x| value > x);
        let below = left.is_none_or(|x| value < x) && right.is_none_or(|x| value < x);
        let position = k + 1;
        let kind = match (above, below) {
            (true, true) => Extremum::Both,
            (true, false) => Extremum::Pinnacle,
            (false, true) => Extremum::Vale,
            (false, false) => continue,
        };
        if above {
            profile.pinnacles.push((position, value));
        }
        if below {
            profile.vales.push((position, value));
        }
        profile.pv.push(PvEntry {
            position,
            value,
            kind,
        });
    }
    Ok(profile)
}

/// Outcome of a wedge or vee test. `strict` is only meaningful when
/// `holds` is true and is false otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeCheck {
    pub holds: bool,
    pub strict: bool,
}

impl ShapeCheck {
    const NO: Self = Self {
        holds: false,
        strict: false,
    };
}

fn unimodal<T, F>(s: &[T], rising: F) -> Result<ShapeCheck>
where
    T: Ord,
    F: Fn(&T, &T) -> bool,
{
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let t = s.len();
    let mut k = 0;
    while k + 1 < t && rising(&s[k], &s[k + 1]) {
        k += 1;
    }
    let strict = !(k + 1 < t && s[k] == s[k + 1]);
    if !strict {
        k += 1;
    }
    while k + 1 < t && rising(&s[k + 1], &s[k]) {
        k += 1;
    }
    if k + 1 == t {
        Ok(ShapeCheck {
            holds: true,
            strict,
        })
    } else {
        Ok(ShapeCheck::NO)
    }
}

/// `s₁ < ⋯ < s_i = s_j > ⋯ > s_t` with `j ∈ {i, i + 1}`; strict when `i = j`.
pub fn is_wedge<T: Ord>(s: &[T]) -> Result<ShapeCheck> {
    unimodal(s, |a, b| a < b)
}

/// `s₁ > ⋯ > s_i = s_j < ⋯ < s_t` with `j ∈ {i, i + 1}`; strict when `i = j`.
pub fn is_vee<T: Ord>(s: &[T]) -> Result<ShapeCheck> {
    unimodal(s, |a, b| a > b)
}
