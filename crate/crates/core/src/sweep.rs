//! Exhaustive sweeps over `S_n`.
//!
//! Work is split across permutations with rayon; results are collected in
//! one-line-notation order, so the output does not depend on the number of
//! worker threads.

use itertools::Itertools;
use rayon::prelude::*;

use crate::classes::DEFAULT_MAX_WORDS;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::singleton::{
    check_repeated_pinnacle_lemma, check_theorem_properties, check_zigzag_lemma,
    increasing_run_violations, singleton_words,
};
use crate::word::Word;

/// Bounds that keep desk-scale runs finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `|R(w)|` a quotient computation may materialize.
    pub max_words: usize,
    /// Largest degree an exhaustive sweep over `S_n` may visit.
    pub sweep_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_words: DEFAULT_MAX_WORDS,
            sweep_bound: 7,
        }
    }
}

impl Limits {
    fn check_sweep(&self, n: usize) -> Result<()> {
        if n > self.sweep_bound {
            return Err(Error::SweepBoundExceeded {
                n,
                bound: self.sweep_bound,
            });
        }
        Ok(())
    }
}

/// All permutations of degree `n` in lexicographic order of one-line
/// notation.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    let base = Permutation::identity(n)?;
    Ok(base
        .entries()
        .into_iter()
        .permutations(n)
        .map(|v| Permutation::new(&v).expect("rearrangement of the identity"))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub degree: usize,
    pub target_count: usize,
    /// Sorted by one-line notation, each with its sorted `C(w)`.
    pub permutations: Vec<(Permutation, Vec<Word>)>,
}

/// Every `w ∈ S_n` with exactly `k` singleton commutation classes.
pub fn search_by_class_count(n: usize, k: usize, limits: &Limits) -> Result<SearchResult> {
    limits.check_sweep(n)?;
    let permutations = all_permutations(n)?
        .into_par_iter()
        .filter_map(|p| {
            let words = singleton_words(&p);
            (words.len() == k).then_some((p, words))
        })
        .collect();
    Ok(SearchResult {
        degree: n,
        target_count: k,
        permutations,
    })
}

/// The check a violation was found by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    PropertyA,
    PropertyB,
    PropertyC,
    PropertyD,
    PropertyE,
    IncreasingRun,
    RepeatedPinnacleLemma,
    ZigzagLemma,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::PropertyA => "property-a",
            Check::PropertyB => "property-b",
            Check::PropertyC => "property-c",
            Check::PropertyD => "property-d",
            Check::PropertyE => "property-e",
            Check::IncreasingRun => "increasing-run",
            Check::RepeatedPinnacleLemma => "repeated-pinnacle-lemma",
            Check::ZigzagLemma => "zigzag-lemma",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub permutation: Permutation,
    pub word: Word,
}

/// Outcome of an exhaustive sweep. A clean run has no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub max_n: usize,
    pub permutations_checked: usize,
    /// Nonempty singleton words put through every check.
    pub words_checked: usize,
    /// Identity permutations, whose only singleton word is empty.
    pub degenerate: usize,
    /// Hypotheses of the repeated-pinnacle lemma that matched.
    pub lemma_cases: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(&mut self, other: VerificationReport) {
        self.permutations_checked += other.permutations_checked;
        self.words_checked += other.words_checked;
        self.degenerate += other.degenerate;
        self.lemma_cases += other.lemma_cases;
        self.violations.extend(other.violations);
    }
}

fn check_permutation(p: &Permutation) -> VerificationReport {
    let mut report = VerificationReport {
        permutations_checked: 1,
        ..Default::default()
    };
    if p.is_identity() {
        report.degenerate = 1;
        return report;
    }
    for word in singleton_words(p) {
        report.words_checked += 1;
        let mut flag = |check| {
            report.violations.push(Violation {
                check,
                permutation: p.clone(),
                word: word.clone(),
            })
        };
        let t = check_theorem_properties(&word);
        for (ok, check) in [
            (t.prop_a, Check::PropertyA),
            (t.prop_b, Check::PropertyB),
            (t.prop_c, Check::PropertyC),
            (t.prop_d, Check::PropertyD),
            (t.prop_e, Check::PropertyE),
        ] {
            if !ok {
                flag(check);
            }
        }
        if !increasing_run_violations(&word).is_empty() {
            flag(Check::IncreasingRun);
        }
        let cases = check_repeated_pinnacle_lemma(&word);
        if cases.iter().any(|c| !c.conclusion_holds) {
            flag(Check::RepeatedPinnacleLemma);
        }
        report.lemma_cases += cases.len();
    }
    report
}

/// Runs the theorem, increasing-run and repeated-pinnacle checks on every
/// singleton word of every `w ∈ S_n`, `n ≤ max_n`.
pub fn verify_theorem_sweep(max_n: usize, limits: &Limits) -> Result<VerificationReport> {
    limits.check_sweep(max_n)?;
    let mut report = VerificationReport {
        max_n,
        ..Default::default()
    };
    for n in 1..=max_n {
        let parts: Vec<VerificationReport> = all_permutations(n)?
            .par_iter()
            .map(check_permutation)
            .collect();
        for part in parts {
            report.merge(part);
        }
    }
    Ok(report)
}

/// Summary of the zig-zag check over every valid `(i, j, n)`, `n ≤ max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZigzagSweep {
    pub max_n: usize,
    pub cases: usize,
    /// `(i, j, n)` triples where some prediction failed.
    pub failures: Vec<(usize, usize, usize)>,
}

pub fn verify_zigzag_sweep(max_n: usize) -> Result<ZigzagSweep> {
    let mut sweep = ZigzagSweep {
        max_n,
        ..Default::default()
    };
    for n in 3..=max_n {
        for i in 1..n - 1 {
            for j in i + 1..n {
                sweep.cases += 1;
                if !check_zigzag_lemma(i, j, n)?.lemma_holds(i, j) {
                    sweep.failures.push((i, j, n));
                }
            }
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        let v: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
        Permutation::new(&v).unwrap()
    }

    #[test]
    fn permutations_in_order() {
        let all = all_permutations(3).unwrap();
        let text: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(text, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(5).unwrap().len(), 120);
    }

    #[test]
    fn searches() {
        let limits = Limits::default();
        let r = search_by_class_count(3, 2, &limits).unwrap();
        assert_eq!(r.permutations.len(), 1);
        assert_eq!(r.permutations[0].0, perm("321"));
        let r = search_by_class_count(4, 0, &limits).unwrap();
        assert!(r.permutations.iter().any(|(p, _)| *p == perm("2143")));
        assert!(r.permutations.iter().all(|(_, w)| w.is_empty()));
        assert_eq!(
            search_by_class_count(8, 4, &limits),
            Err(Error::SweepBoundExceeded { n: 8, bound: 7 })
        );
    }

    #[test]
    fn small_sweeps_are_clean() {
        let limits = Limits::default();
        let r = verify_theorem_sweep(3, &limits).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.permutations_checked, 1 + 2 + 6);
        assert_eq!(r.degenerate, 3);
        let r = verify_theorem_sweep(4, &limits).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert!(verify_theorem_sweep(9, &limits).is_err());
    }

    #[test]
    fn zigzag_sweep() {
        let z = verify_zigzag_sweep(5).unwrap();
        assert_eq!(z.cases, 1 + 3 + 6);
        assert!(z.failures.is_empty());
    }
}
