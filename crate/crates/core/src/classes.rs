//! Reduced words of a permutation and their commutation classes.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;

/// Default cap on the number of reduced words a quotient computation may
/// materialize.
pub const DEFAULT_MAX_WORDS: usize = 10_000_000;

/// Depth-first walk over prefix-reduced words of a fixed permutation.
///
/// Words are built left to right. The next letter must be a left descent of
/// the factor that remains, so every branch ends in a distinct reduced word
/// and the output comes out in lexicographic order. The remaining factor is
/// tracked through its inverse, where left multiplication by `σ_i` becomes
/// an adjacent swap.
#[derive(Debug, Clone)]
pub struct ReducedWords {
    degree: usize,
    target_len: usize,
    /// Inverse of the factor still to be written, 1-indexed values.
    remaining_inv: Vec<u8>,
    word: Vec<u8>,
    /// Smallest letter still to try at each depth.
    cursor: Vec<u8>,
    unit_steps: bool,
    done: bool,
}

impl ReducedWords {
    /// Every reduced word of `p`.
    pub fn new(p: &Permutation) -> Self {
        Self::with_mode(p, false)
    }

    /// Only the reduced words of `p` whose adjacent letters differ by
    /// exactly one.
    pub fn unit_steps(p: &Permutation) -> Self {
        Self::with_mode(p, true)
    }

    fn with_mode(p: &Permutation, unit_steps: bool) -> Self {
        let target_len = p.length();
        Self {
            degree: p.degree(),
            target_len,
            remaining_inv: p.inverse().raw().to_vec(),
            word: Vec::with_capacity(target_len),
            cursor: vec![1],
            unit_steps,
            done: false,
        }
    }

    fn swap(&mut self, letter: u8) {
        let i = letter as usize;
        self.remaining_inv.swap(i - 1, i);
    }

    fn is_descent(&self, letter: u8) -> bool {
        let i = letter as usize;
        self.remaining_inv[i - 1] > self.remaining_inv[i]
    }

    fn next_candidate(&self) -> Option<u8> {
        let depth = self.word.len();
        let top = (self.degree - 1) as u8;
        let (lo, hi) = match (self.unit_steps, self.word.last()) {
            (true, Some(&prev)) => (
                self.cursor[depth].max(prev.saturating_sub(1)),
                (prev + 1).min(top),
            ),
            _ => (self.cursor[depth], top),
        };
        (lo.max(1)..=hi).find(|&l| self.is_descent(l))
    }

    fn backtrack(&mut self) -> bool {
        match self.word.pop() {
            Some(letter) => {
                self.swap(letter);
                self.cursor.pop();
                true
            }
            None => false,
        }
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            if self.word.len() == self.target_len {
                let out = Word::from_raw(self.word.clone(), self.degree);
                if !self.backtrack() {
                    self.done = true;
                }
                return Some(out);
            }
            match self.next_candidate() {
                Some(letter) => {
                    let depth = self.word.len();
                    self.cursor[depth] = letter + 1;
                    self.swap(letter);
                    self.word.push(letter);
                    self.cursor.push(1);
                }
                None => {
                    if !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Streams `R(p)` in lexicographic order.
pub fn enumerate_reduced_words(p: &Permutation) -> ReducedWords {
    ReducedWords::new(p)
}

/// `|R(p)|`, by memoized recursion on left descents. Nothing is
/// materialized beyond one count per visited permutation.
pub fn count_reduced_words(p: &Permutation) -> Result<u128> {
    fn go(inv: &mut Vec<u8>, memo: &mut HashMap<Vec<u8>, u128>) -> Result<u128> {
        if let Some(&c) = memo.get(inv.as_slice()) {
            return Ok(c);
        }
        let mut total: u128 = 0;
        let mut any = false;
        for i in 1..inv.len() {
            if inv[i - 1] > inv[i] {
                any = true;
                inv.swap(i - 1, i);
                let sub = go(inv, memo);
                inv.swap(i - 1, i);
                total = total.checked_add(sub?).ok_or(Error::CountOverflow)?;
            }
        }
        if !any {
            total = 1;
        }
        memo.insert(inv.clone(), total);
        Ok(total)
    }
    let mut inv = p.inverse().raw().to_vec();
    go(&mut inv, &mut HashMap::new())
}

fn require_reduced(w: &Word) -> Result<()> {
    if w.is_reduced() {
        Ok(())
    } else {
        Err(Error::NotReduced(w.to_string()))
    }
}

fn commutation_moves(letters: &[u8]) -> impl Iterator<Item = Vec<u8>> + '_ {
    (0..letters.len().saturating_sub(1))
        .filter(|&k| letters[k].abs_diff(letters[k + 1]) >= 2)
        .map(|k| {
            let mut v = letters.to_vec();
            v.swap(k, k + 1);
            v
        })
}

fn braid_moves(letters: &[u8]) -> impl Iterator<Item = Vec<u8>> + '_ {
    (0..letters.len().saturating_sub(2))
        .filter(|&k| letters[k] == letters[k + 2] && letters[k].abs_diff(letters[k + 1]) == 1)
        .map(|k| {
            let mut v = letters.to_vec();
            let (a, b) = (letters[k], letters[k + 1]);
            v[k] = b;
            v[k + 1] = a;
            v[k + 2] = b;
            v
        })
}

/// Words reachable from `w` by one commutation move `ij ↔ ji`, `|i − j| ≥ 2`,
/// in order of the position of the swapped pair.
pub fn commutation_neighbors(w: &Word) -> Result<Vec<Word>> {
    require_reduced(w)?;
    Ok(commutation_moves(w.raw())
        .map(|v| Word::from_raw(v, w.degree()))
        .collect())
}

/// Words reachable from `w` by one braid move `i(i+1)i ↔ (i+1)i(i+1)`.
pub fn braid_neighbors(w: &Word) -> Result<Vec<Word>> {
    require_reduced(w)?;
    Ok(braid_moves(w.raw())
        .map(|v| Word::from_raw(v, w.degree()))
        .collect())
}

/// A set of reduced words closed under commutation moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationClass {
    /// Sorted lexicographically; the first member is the representative.
    pub members: Vec<Word>,
    pub permutation: Permutation,
}

impl CommutationClass {
    pub fn representative(&self) -> &Word {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

/// Breadth-first closure of `{w}` under commutation moves.
pub fn commutation_class(w: &Word) -> Result<CommutationClass> {
    require_reduced(w)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.raw().to_vec());
    queue.push_back(w.raw().to_vec());
    while let Some(cur) = queue.pop_front() {
        for next in commutation_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut members: Vec<Word> = seen
        .into_iter()
        .map(|v| Word::from_raw(v, w.degree()))
        .collect();
    members.sort();
    Ok(CommutationClass {
        members,
        permutation: w.evaluate(),
    })
}

/// `R(p)` split into commutation classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub permutation: Permutation,
    /// Sorted by representative.
    pub classes: Vec<CommutationClass>,
    pub total_words: usize,
}

impl ClassPartition {
    pub fn singleton_classes(&self) -> impl Iterator<Item = &CommutationClass> {
        self.classes.iter().filter(|c| c.is_singleton())
    }
}

/// Collects `R(p)`, failing once more than `max_words` words have appeared.
pub fn collect_reduced_words(p: &Permutation, max_words: usize) -> Result<Vec<Word>> {
    let mut words = Vec::new();
    for w in enumerate_reduced_words(p) {
        if words.len() == max_words {
            return Err(Error::CapExceeded {
                cap: max_words,
                seen: words.len() + 1,
            });
        }
        words.push(w);
    }
    Ok(words)
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            // Keep the smaller index as root so roots are lexicographic minima.
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }
}

fn components<F>(words: &[Word], moves: F) -> DisjointSets
where
    F: Fn(&[u8]) -> Vec<Vec<u8>>,
{
    let index: HashMap<&[u8], usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.raw(), i))
        .collect();
    let mut sets = DisjointSets::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for next in moves(w.raw()) {
            let j = index[next.as_slice()];
            sets.union(i, j);
        }
    }
    sets
}

/// Partitions the full enumeration of `R(p)` into commutation classes.
pub fn class_partition(p: &Permutation, max_words: usize) -> Result<ClassPartition> {
    let words = collect_reduced_words(p, max_words)?;
    let mut sets = components(&words, |w| commutation_moves(w).collect());
    let mut slot: HashMap<usize, usize> = HashMap::new();
    let mut groups: Vec<Vec<Word>> = Vec::new();
    let total_words = words.len();
    // Words arrive sorted, so classes come out ordered by their least member.
    for (i, w) in words.into_iter().enumerate() {
        let root = sets.find(i);
        let k = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(w);
    }
    let classes = groups
        .into_iter()
        .map(|members| CommutationClass {
            members,
            permutation: p.clone(),
        })
        .collect();
    Ok(ClassPartition {
        permutation: p.clone(),
        classes,
        total_words,
    })
}

/// Whether `R(p)` is connected under commutation and braid moves together.
pub fn is_connected_under_all_moves(p: &Permutation, max_words: usize) -> Result<bool> {
    let words = collect_reduced_words(p, max_words)?;
    let mut sets = components(&words, |w| {
        commutation_moves(w).chain(braid_moves(w)).collect()
    });
    Ok((0..words.len()).all(|i| sets.find(i) == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str, n: usize) -> Word {
        let v: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
        Word::new(&v, n).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        let v: Vec<usize> = s.bytes().map(|b| (b - b'0') as usize).collect();
        Permutation::new(&v).unwrap()
    }

    fn words(list: &[&str], n: usize) -> Vec<Word> {
        list.iter().map(|s| word(s, n)).collect()
    }

    #[test]
    fn small_enumerations() {
        let r: Vec<Word> = enumerate_reduced_words(&perm("321")).collect();
        assert_eq!(r, words(&["121", "212"], 3));
        let r: Vec<Word> = enumerate_reduced_words(&perm("2143")).collect();
        assert_eq!(r, words(&["13", "31"], 4));
        assert_eq!(enumerate_reduced_words(&perm("4321")).count(), 16);
        let r: Vec<Word> = enumerate_reduced_words(&perm("1234")).collect();
        assert_eq!(r, words(&[""], 4));
    }

    #[test]
    fn counts() {
        assert_eq!(count_reduced_words(&perm("4321")).unwrap(), 16);
        assert_eq!(count_reduced_words(&perm("54321")).unwrap(), 768);
        assert_eq!(count_reduced_words(&perm("12345")).unwrap(), 1);
    }

    #[test]
    fn neighbors() {
        assert_eq!(
            commutation_neighbors(&word("13", 4)).unwrap(),
            words(&["31"], 4)
        );
        assert!(commutation_neighbors(&word("123212", 4))
            .unwrap()
            .is_empty());
        assert_eq!(
            commutation_neighbors(&word("1323", 4)).unwrap(),
            words(&["3123"], 4)
        );
        assert_eq!(
            commutation_neighbors(&word("1212", 3)),
            Err(Error::NotReduced("1212".into()))
        );
        assert_eq!(
            braid_neighbors(&word("121", 3)).unwrap(),
            words(&["212"], 3)
        );
        assert!(braid_neighbors(&word("13", 4)).unwrap().is_empty());
        let b = braid_neighbors(&word("123212", 4)).unwrap();
        assert!(b.contains(&word("123121", 4)));
        assert!(b.iter().all(|w| w.evaluate() == perm("4321")));
        assert!(braid_neighbors(&word("1212", 3)).is_err());
    }

    #[test]
    fn classes_of_small_words() {
        let c = commutation_class(&word("13", 4)).unwrap();
        assert_eq!(c.members, words(&["13", "31"], 4));
        assert_eq!(c.representative(), &word("13", 4));
        assert!(commutation_class(&word("123212", 4))
            .unwrap()
            .is_singleton());
        assert!(commutation_class(&word("121", 3)).unwrap().is_singleton());
    }

    #[test]
    fn partitions() {
        let part = class_partition(&perm("321"), DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(part.classes.len(), 2);
        assert!(part.classes.iter().all(|c| c.is_singleton()));
        let part = class_partition(&perm("4321"), DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(part.classes.len(), 8);
        assert_eq!(part.total_words, 16);
        assert_eq!(part.singleton_classes().count(), 4);
        let part = class_partition(&perm("2143"), DEFAULT_MAX_WORDS).unwrap();
        assert_eq!(part.classes.len(), 1);
        assert_eq!(part.classes[0].len(), 2);
        let reps: Vec<&Word> = part.classes.iter().map(|c| c.representative()).collect();
        let mut sorted = reps.clone();
        sorted.sort();
        assert_eq!(reps, sorted);
    }

    #[test]
    fn cap_is_an_error() {
        assert_eq!(
            class_partition(&perm("4321"), 10),
            Err(Error::CapExceeded { cap: 10, seen: 11 })
        );
        assert!(class_partition(&perm("4321"), 16).is_ok());
        assert!(is_connected_under_all_moves(&perm("4321"), 3).is_err());
    }

    #[test]
    fn connectivity() {
        for p in ["321", "4321", "1234", "2143"] {
            assert!(is_connected_under_all_moves(&perm(p), DEFAULT_MAX_WORDS).unwrap());
        }
    }

    #[test]
    fn unit_step_walk() {
        let c: Vec<Word> = ReducedWords::unit_steps(&perm("4321")).collect();
        assert_eq!(c, words(&["123212", "212321", "232123", "321232"], 4));
        assert_eq!(ReducedWords::unit_steps(&perm("2143")).count(), 0);
    }
}
