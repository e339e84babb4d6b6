mod common;

use brickforge::bruhat::bruhat_leq;
use brickforge::coxeter::{parse_word, CoxeterSystem, GroupElement};
use brickforge::geometry::rational::{int_vec, sub};
use common::{bruhat_below, cartan, length_of, positive_roots, word_matrix, Mat};
use proptest::prelude::*;

fn matrix_of(w: &GroupElement) -> Mat {
    let n = w.rank();
    (0..n).map(|i| (0..n).map(|j| w.entry(i, j)).collect()).collect()
}

const SYSTEMS: [&str; 6] = ["A2", "B2", "G2", "A3", "B3", "C3"];

#[test]
fn positive_roots_match_orbit_oracle() {
    for name in SYSTEMS {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        let mine: std::collections::BTreeSet<Vec<i64>> = sys.positive_roots().iter().cloned().collect();
        assert_eq!(mine, positive_roots(&cartan(&sys)), "{name}");
        assert_eq!(mine.len(), sys.positive_roots().len(), "{name}: duplicates");
    }
}

#[test]
fn every_element_matches_its_canonical_word() {
    for name in SYSTEMS {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        let a = cartan(&sys);
        for w in sys.elements() {
            let word = sys.canonical_word(w);
            assert_eq!(word_matrix(&a, &word), matrix_of(w), "{name}");
            assert_eq!(length_of(&a, &matrix_of(w)), w.length(), "{name}");
            assert_eq!(word.len(), w.length(), "{name}");
        }
    }
}

/// Bruhat recursion against the subword-deletion oracle on all pairs.
#[test]
fn bruhat_order_matches_subword_oracle_on_a3_and_b3() {
    for name in ["A3", "B3"] {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        let a = cartan(&sys);
        let mut pairs = 0;
        for y in sys.elements() {
            let below = bruhat_below(&a, &sys.canonical_word(y));
            for x in sys.elements() {
                assert_eq!(
                    bruhat_leq(&sys, x, y),
                    below.contains(&matrix_of(x)),
                    "{name}: {} ≤ {}",
                    sys.format_element(x),
                    sys.format_element(y)
                );
                pairs += 1;
            }
        }
        assert_eq!(pairs, sys.elements().len().pow(2));
    }
}

#[test]
fn weights_are_dual_to_simple_coroots() {
    for name in SYSTEMS {
        let sys = CoxeterSystem::from_preset(name).unwrap();
        for s in 0..sys.rank() {
            let g = sys.generator(s);
            for t in 0..sys.rank() {
                let image = g.apply_rational(&sys.weights()[t]);
                let expected = if s == t {
                    sub(&sys.weights()[t], &int_vec(&sys.simple_root(s)))
                } else {
                    sys.weights()[t].clone()
                };
                assert_eq!(image, expected, "{name}: s{}(ω{})", s + 1, t + 1);
            }
        }
    }
}

fn system_and_word() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..SYSTEMS.len()).prop_flat_map(|i| {
        let rank: usize = if i < 3 { 2 } else { 3 };
        (Just(i), prop::collection::vec(0..rank, 0..12))
    })
}

proptest! {
    #[test]
    fn words_multiply_like_matrices((i, word) in system_and_word()) {
        let sys = CoxeterSystem::from_preset(SYSTEMS[i]).unwrap();
        let a = cartan(&sys);
        let w = sys.element_from_word(&word).unwrap();
        prop_assert_eq!(matrix_of(&w), word_matrix(&a, &word));
        prop_assert_eq!(sys.is_reduced(&word).unwrap(), length_of(&a, &word_matrix(&a, &word)) == word.len());
        prop_assert_eq!(sys.inversion_set(&w).len(), w.length());
        prop_assert_eq!(sys.mul(&w, &sys.inverse(&w)), sys.identity().clone());
    }

    #[test]
    fn weak_order_is_inversion_containment((i, word) in system_and_word(), j in 0usize..48) {
        let sys = CoxeterSystem::from_preset(SYSTEMS[i]).unwrap();
        let x = sys.element_from_word(&word).unwrap();
        let y = &sys.elements()[j % sys.elements().len()];
        let ix = sys.inversion_set(&x);
        let iy = sys.inversion_set(y);
        prop_assert_eq!(sys.weak_leq(&x, y), ix.iter().all(|r| iy.contains(r)));
    }

    #[test]
    fn parse_and_format_round_trip((i, word) in system_and_word()) {
        let sys = CoxeterSystem::from_preset(SYSTEMS[i]).unwrap();
        let w = sys.element_from_word(&word).unwrap();
        let text = sys.format_element(&w);
        prop_assert_eq!(sys.parse_element(&text).unwrap(), w.clone());
        let canonical = parse_word(&text, sys.rank()).unwrap_or_default();
        // the canonical word is the lexicographically smallest reduced word
        let a = cartan(&sys);
        prop_assume!(w.length() <= 6);
        for other in common::all_words(sys.rank(), w.length()).into_iter().filter(|v| v.len() == w.length()) {
            if word_matrix(&a, &other) == matrix_of(&w) {
                prop_assert!(canonical <= other);
            }
        }
    }
}
