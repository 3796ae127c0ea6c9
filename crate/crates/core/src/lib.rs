//! Reduced words of permutations in the symmetric group, their commutation
//! classes, and the reduced words that are alone in their class.
//!
//! Letters are 1-indexed and a word `⟨s₁…s_t⟩` evaluates to
//! `e·σ_{s₁}⋯σ_{s_t}`, where right multiplication by `σ_i` swaps positions
//! `i` and `i + 1`. With this convention `⟨123⟩` is a reduced word of
//! `2341`.

pub mod classes;
mod error;
pub mod perm;
pub mod profile;
pub mod singleton;
pub mod sweep;
pub mod text;
pub mod word;

pub use classes::{
    braid_neighbors, class_partition, commutation_class, commutation_neighbors,
    count_reduced_words, enumerate_reduced_words, is_connected_under_all_moves, ClassPartition,
    CommutationClass, ReducedWords, DEFAULT_MAX_WORDS,
};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use profile::{is_vee, is_wedge, pinnacle_vale, PinnacleValeProfile, ShapeCheck};
pub use singleton::{
    check_repeated_pinnacle_lemma, check_theorem_properties, check_zigzag_lemma,
    increasing_run_violations, long_element_class, long_element_singleton, singleton_words,
    TheoremReport, ZigzagReport,
};
pub use sweep::{
    search_by_class_count, verify_theorem_sweep, verify_zigzag_sweep, Limits, SearchResult,
    VerificationReport,
};
pub use text::{parse_permutation, parse_word};
pub use word::Word;
