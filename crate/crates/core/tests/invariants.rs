use proptest::prelude::*;

use redword::classes::collect_reduced_words;
use redword::sweep::all_permutations;
use redword::{
    braid_neighbors, check_zigzag_lemma, class_partition, commutation_class, commutation_neighbors,
    count_reduced_words, enumerate_reduced_words, is_connected_under_all_moves, long_element_class,
    long_element_singleton, pinnacle_vale, singleton_words, Permutation, Word, DEFAULT_MAX_WORDS,
};

fn each_permutation(max_n: usize, mut f: impl FnMut(&Permutation)) {
    for n in 1..=max_n {
        for p in all_permutations(n).unwrap() {
            f(&p);
        }
    }
}

#[test]
fn simple_reflections_change_length_by_one() {
    each_permutation(6, |p| {
        for i in 1..p.degree() {
            let q = p.apply_simple(i).unwrap();
            assert_eq!(q.length().abs_diff(p.length()), 1);
            assert_eq!(p.is_right_descent(i), q.length() < p.length());
            let q = p.apply_simple_left(i).unwrap();
            assert_eq!(p.is_left_descent(i), q.length() < p.length());
        }
        assert_eq!(p.length(), p.inverse().length());
        assert!(p.multiply(&p.inverse()).unwrap().is_identity());
        let n = p.degree();
        let top = n * (n - 1) / 2;
        assert!(p.length() <= top);
        assert_eq!(
            p.length() == top,
            *p == Permutation::longest_element(n).unwrap()
        );
        assert_eq!(p.left_descents(), p.inverse().right_descents());
    });
}

#[test]
fn enumeration_contracts() {
    each_permutation(5, |p| {
        let words: Vec<Word> = enumerate_reduced_words(p).collect();
        assert_eq!(words.len() as u128, count_reduced_words(p).unwrap());
        assert!(words.windows(2).all(|w| w[0] < w[1]), "not strictly sorted");
        for w in &words {
            assert!(w.is_reduced());
            assert_eq!(&w.evaluate(), p);
        }
    });
}

#[test]
fn symmetry_contracts() {
    each_permutation(5, |p| {
        let w0 = Permutation::longest_element(p.degree()).unwrap();
        let conj = w0.multiply(p).unwrap().multiply(&w0).unwrap();
        for w in enumerate_reduced_words(p) {
            assert_eq!(w.reverse().evaluate(), p.inverse());
            assert_eq!(w.complement().evaluate(), conj);
            assert!(w.symmetries().iter().all(Word::is_reduced));
        }
    });
}

#[test]
fn move_relations_are_symmetric_and_preserve_the_permutation() {
    each_permutation(5, |p| {
        for w in enumerate_reduced_words(p) {
            for u in commutation_neighbors(&w).unwrap() {
                assert_eq!(&u.evaluate(), p);
                assert!(commutation_neighbors(&u).unwrap().contains(&w));
            }
            for u in braid_neighbors(&w).unwrap() {
                assert_eq!(&u.evaluate(), p);
                assert!(braid_neighbors(&u).unwrap().contains(&w));
            }
            assert_eq!(
                commutation_neighbors(&w).unwrap().is_empty(),
                !w.supports_commutation_move()
            );
        }
    });
}

#[test]
fn partitions_are_commutation_components() {
    each_permutation(5, |p| {
        let part = class_partition(p, DEFAULT_MAX_WORDS).unwrap();
        let total: usize = part.classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, part.total_words);
        assert_eq!(
            total,
            collect_reduced_words(p, DEFAULT_MAX_WORDS).unwrap().len()
        );
        let reps: Vec<&Word> = part.classes.iter().map(|c| c.representative()).collect();
        assert!(reps.windows(2).all(|r| r[0] < r[1]));
        for class in &part.classes {
            assert_eq!(&commutation_class(class.representative()).unwrap(), class);
            let mut letters = class.members[0].letters();
            letters.sort_unstable();
            for m in &class.members {
                let mut other = m.letters();
                other.sort_unstable();
                assert_eq!(other, letters);
            }
            assert_eq!(
                class.is_singleton(),
                !class.representative().supports_commutation_move()
            );
        }
    });
}

#[test]
fn move_graph_is_connected() {
    each_permutation(5, |p| {
        assert!(
            is_connected_under_all_moves(p, DEFAULT_MAX_WORDS).unwrap(),
            "{p}"
        );
    });
}

#[test]
fn singleton_words_are_closed_under_symmetry() {
    each_permutation(5, |p| {
        let conj = p.conjugate_by_longest();
        let c_inv = singleton_words(&p.inverse());
        let c_conj = singleton_words(&conj);
        for w in singleton_words(p) {
            assert!(c_inv.contains(&w.reverse()));
            assert!(c_conj.contains(&w.complement()));
        }
    });
}

#[test]
fn long_element_word_is_a_singleton() {
    for n in 2..=8 {
        let w0 = Permutation::longest_element(n).unwrap();
        let c = singleton_words(&w0);
        assert!(c.contains(&long_element_singleton(n).unwrap()));
        assert_eq!(c, long_element_class(n).unwrap());
        let expected = match n {
            2 => 1,
            3 => 2,
            _ => 4,
        };
        assert_eq!(c.len(), expected, "n = {n}");
    }
}

#[test]
fn zigzag_words_are_never_reduced() {
    for n in 3..=8 {
        for i in 1..n - 1 {
            for j in i + 1..n {
                let r = check_zigzag_lemma(i, j, n).unwrap();
                assert!(r.lemma_holds(i, j), "i = {i}, j = {j}, n = {n}: {r:?}");
            }
        }
    }
}

fn permutation_strategy() -> impl Strategy<Value = Permutation> {
    (1usize..=9).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(&v).unwrap())
    })
}

fn unit_step_string() -> impl Strategy<Value = Vec<u8>> {
    (1u8..20, proptest::collection::vec(any::<bool>(), 0..30)).prop_map(|(start, steps)| {
        let mut v = vec![start + 30];
        for up in steps {
            let last = *v.last().unwrap();
            v.push(if up { last + 1 } else { last - 1 });
        }
        v
    })
}

proptest! {
    #[test]
    fn multiply_is_associative(a in permutation_strategy(), seed in any::<u64>()) {
        let n = a.degree();
        let mut rot: Vec<usize> = (1..=n).collect();
        rot.rotate_left((seed as usize) % n);
        let b = Permutation::new(&rot).unwrap();
        let c = a.inverse();
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn profile_alternates_and_keeps_endpoints(s in unit_step_string()) {
        let profile = pinnacle_vale(&s).unwrap();
        prop_assert_eq!(profile.pv.first().unwrap().position, 1);
        prop_assert_eq!(profile.pv.last().unwrap().position, s.len());
        for pair in profile.pv.windows(2) {
            prop_assert_ne!(pair[0].kind, pair[1].kind);
            prop_assert!(pair[0].position < pair[1].position);
        }
    }

    #[test]
    fn reduced_iff_symmetries_reduced(n in 2usize..7, letters in proptest::collection::vec(1usize..6, 0..10)) {
        let letters: Vec<usize> = letters.into_iter().map(|l| (l - 1) % (n - 1) + 1).collect();
        let w = Word::new(&letters, n).unwrap();
        for s in w.symmetries() {
            prop_assert_eq!(s.is_reduced(), w.is_reduced());
        }
    }
}
