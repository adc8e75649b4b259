use std::collections::BTreeSet;

use proptest::prelude::*;
use qhecke::comb_core::compositions;
use qhecke::greene::{
    inc_k_tuples, knuth_invariance_check, longest_k_increasing, longest_k_increasing_by_antichains, mies,
    mies_exhaustive, predict_shape, predict_shape_detailed,
};
use qhecke::insertion::{p_hat, rsk};
use qhecke::permutation::{all_perms, leq_l};
use qhecke::tableaux::enumerate;
use qhecke::{Composition, Family, Perm};

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

/// Greene's theorem: `i_k` is the sum of the first `k` rows of the Schensted shape.
#[test]
fn k_increasing_matches_greene_on_permutations() {
    for sigma in all_perms(7).into_iter().step_by(7) {
        let shape = rsk(&sigma).0.shape();
        for k in 1..=7 {
            let want: usize = shape.parts().iter().take(k).sum();
            assert_eq!(longest_k_increasing(sigma.word(), k), want, "{sigma} k={k}");
        }
    }
}

#[test]
fn mies_agrees_with_exhaustive_search() {
    for sigma in all_perms(6) {
        for k in 1..=4 {
            assert_eq!(mies(sigma.word(), k).unwrap(), mies_exhaustive(sigma.word(), k).unwrap(), "{sigma} k={k}");
        }
    }
}

#[test]
fn full_mies_is_the_first_column() {
    for sigma in all_perms(6) {
        let ph = p_hat(sigma.word());
        let col: BTreeSet<usize> = ph.column(1).into_iter().collect();
        assert_eq!(mies(sigma.word(), ph.num_rows()).unwrap(), col, "{sigma}");
    }
}

#[test]
fn predicted_shape_matches_insertion() {
    for n in 1..=7 {
        for sigma in all_perms(n) {
            assert_eq!(predict_shape(sigma.word()).unwrap(), p_hat(sigma.word()).shape(), "{sigma}");
        }
    }
}

#[test]
fn immaculate_reading_words_keep_their_length() {
    for alpha in compositions(6) {
        for t in enumerate(Family::Sit, &alpha).unwrap() {
            let w: Vec<usize> = t.row_word().into_iter().rev().collect();
            assert_eq!(p_hat(&w).num_rows(), alpha.len(), "{t}");
            let first: BTreeSet<usize> = t.column(1).into_iter().collect();
            for k in 1..=alpha.len() {
                assert!(mies(&w, k).unwrap().is_subset(&first), "{t} k={k}");
            }
        }
    }
}

#[test]
fn weak_order_lowers_shape_within_a_recording_class() {
    for alpha in compositions(6) {
        let words: Vec<Perm> = enumerate(Family::Sit, &alpha)
            .unwrap()
            .iter()
            .map(|t| Perm::from_word(&t.row_word()).unwrap())
            .collect();
        for a in &words {
            for b in &words {
                if a == b || rsk(a).1 != rsk(b).1 || !leq_l(a, b).unwrap() {
                    continue;
                }
                let sa = p_hat(a.times_w0().word()).shape();
                let sb = p_hat(b.times_w0().word()).shape();
                assert!(sa >= sb, "{a} ⪯ {b}: {sa} < {sb}");
            }
        }
    }
}

#[test]
fn mies_is_a_knuth_invariant() {
    for sigma in all_perms(6).into_iter().step_by(11) {
        for k in 1..=3 {
            assert!(knuth_invariance_check(&sigma, k).unwrap(), "{sigma} k={k}");
        }
    }
}

#[test]
fn small_worked_examples() {
    let w = [6, 3, 7];
    let tuples = inc_k_tuples(&w, 1).unwrap();
    assert_eq!(tuples.len(), 2);
    assert_eq!(mies(&w, 1).unwrap(), set(&[6]));
    assert_eq!(mies(&w, 2).unwrap(), set(&[3, 6]));
    assert_eq!(mies(&w, 3).unwrap(), set(&[3, 6, 7]));
    let d = predict_shape_detailed(&[5, 2, 7, 8, 3, 1, 4, 6]).unwrap();
    assert_eq!(d.chain[1..], [set(&[2]), set(&[2, 5]), set(&[1, 2, 5])]);
    assert_eq!(d.shape, Composition::from_slice(&[1, 4, 3]));
    assert!(mies(&[1, 2], 3).is_err());
    assert!(predict_shape(&[1, 1]).is_err());
}

proptest! {
    #[test]
    fn two_algorithms_for_k_increasing(
        w in prop::collection::vec(1usize..=8, 0..=8),
        k in 1usize..=4,
    ) {
        prop_assert_eq!(longest_k_increasing(&w, k), longest_k_increasing_by_antichains(&w, k));
    }
}
