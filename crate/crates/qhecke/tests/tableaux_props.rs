use std::collections::{BTreeMap, BTreeSet};

use qhecke::comb_core::{compositions, partitions};
use qhecke::permutation::all_perms;
use qhecke::tableaux::{canonical, enumerate, is_se_decreasing, revmap, validate, Canonical};
use qhecke::{Composition, Family, Filling};

/// Every standard filling of the diagram, by distributing a permutation row by row.
fn all_fillings(alpha: &Composition) -> Vec<Filling> {
    all_perms(alpha.size())
        .into_iter()
        .map(|g| {
            let mut w = g.word().iter().copied();
            let rows = alpha.parts().iter().map(|&l| w.by_ref().take(l).collect()).collect();
            Filling::new(rows).unwrap()
        })
        .collect()
}

fn at(t: &Filling, r: usize, c: usize) -> Option<usize> {
    t.rows().get(r).and_then(|row| row.get(c)).copied()
}

fn rows_increase(t: &Filling) -> bool {
    t.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
}

fn first_column_increases(t: &Filling) -> bool {
    t.rows().windows(2).all(|w| w[0][0] < w[1][0])
}

/// Every column, read bottom to top across gaps, increases.
fn columns_increase(t: &Filling) -> bool {
    let width = t.rows().iter().map(Vec::len).max().unwrap_or(0);
    (0..width).all(|c| {
        let col: Vec<usize> = (0..t.num_rows()).filter_map(|r| at(t, r, c)).collect();
        col.windows(2).all(|w| w[0] < w[1])
    })
}

/// The Young triple rule, read directly off the definition (0-based here).
fn young_triple(t: &Filling) -> bool {
    let rows = t.num_rows();
    for i in 0..rows {
        for j in i + 1..rows {
            for k in 0..t.rows()[j].len() {
                let (Some(low), Some(high)) = (at(t, i, k + 1), at(t, j, k)) else { continue };
                if low >= high && !at(t, j, k + 1).is_some_and(|x| low > x) {
                    return false;
                }
            }
        }
    }
    true
}

fn is_syct(t: &Filling) -> bool {
    rows_increase(t) && first_column_increases(t) && young_triple(t)
}

fn hook_count(lambda: &Composition) -> usize {
    let parts = lambda.parts();
    let n = lambda.size();
    let mut hooks = 1usize;
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= arm + leg + 1;
        }
    }
    (1..=n).product::<usize>() / hooks
}

fn brute(alpha: &Composition, pred: impl Fn(&Filling) -> bool) -> BTreeSet<Filling> {
    all_fillings(alpha).into_iter().filter(|t| pred(t)).collect()
}

fn set_of(v: Vec<Filling>) -> BTreeSet<Filling> {
    v.into_iter().collect()
}

#[test]
fn enumerators_match_definitions() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let got = |f| set_of(enumerate(f, &alpha).unwrap());
            assert_eq!(got(Family::Sit), brute(&alpha, |t| rows_increase(t) && first_column_increases(t)), "SIT {alpha}");
            assert_eq!(got(Family::Set), brute(&alpha, |t| rows_increase(t) && columns_increase(t)), "SET {alpha}");
            assert_eq!(got(Family::Syct), brute(&alpha, is_syct), "SYCT {alpha}");
            assert_eq!(got(Family::SyctC), brute(&alpha, |t| is_syct(t) && columns_increase(t)), "SYCT_C {alpha}");
            assert_eq!(
                got(Family::Nsyct),
                brute(&alpha, |t| rows_increase(t) && columns_increase(t) && is_se_decreasing(t)),
                "nSYCT {alpha}"
            );
            for family in Family::ALL {
                for t in enumerate(family, &alpha).unwrap() {
                    assert!(validate(family, &t).unwrap());
                }
            }
        }
    }
}

#[test]
fn composition_tableaux_match_definition() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let sct = set_of(enumerate(Family::Sct, &alpha).unwrap());
            let direct: BTreeSet<Filling> = all_fillings(&alpha)
                .into_iter()
                .filter(|t| validate(Family::Sct, t).unwrap())
                .collect();
            assert_eq!(sct, direct, "{alpha}");
        }
    }
}

#[test]
fn young_composition_tableaux_refine_syt() {
    for n in 1..=7 {
        let mut by_lambda: BTreeMap<Composition, usize> = BTreeMap::new();
        for alpha in compositions(n) {
            *by_lambda.entry(alpha.lambda_sort()).or_default() += enumerate(Family::Syct, &alpha).unwrap().len();
        }
        for lambda in partitions(n) {
            let f = hook_count(&lambda);
            assert_eq!(enumerate(Family::Syt, &lambda).unwrap().len(), f);
            assert_eq!(by_lambda[&lambda], f, "{lambda}");
        }
    }
}

#[test]
fn extended_equals_young_on_partitions() {
    for n in 1..=7 {
        for lambda in partitions(n) {
            assert_eq!(enumerate(Family::Set, &lambda).unwrap(), enumerate(Family::Syt, &lambda).unwrap());
        }
    }
}

#[test]
fn family_containments() {
    for n in 1..=7 {
        for alpha in compositions(n) {
            let e = |f| set_of(enumerate(f, &alpha).unwrap());
            let (sit, set, nsyct) = (e(Family::Sit), e(Family::Set), e(Family::Nsyct));
            let (syct, syct_c) = (e(Family::Syct), e(Family::SyctC));
            assert!(set.is_subset(&sit) && nsyct.is_subset(&set), "{alpha}");
            assert!(syct_c.is_subset(&syct), "{alpha}");
        }
    }
}

#[test]
fn revmap_is_a_bijection_between_composition_families() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let sct = enumerate(Family::Sct, &alpha).unwrap();
            let syct = set_of(enumerate(Family::Syct, &alpha).unwrap());
            let image: BTreeSet<Filling> = sct.iter().map(revmap).collect();
            assert_eq!(image.len(), sct.len());
            assert_eq!(image, syct, "{alpha}");
        }
    }
}

#[test]
fn canonical_fillings_are_standard_and_in_family() {
    for n in 1..=7 {
        for alpha in compositions(n) {
            let t = canonical(Canonical::CalT, &alpha);
            assert!(validate(Family::Sit, &t).unwrap());
            assert!(validate(Family::Sit, &canonical(Canonical::CalTPrime, &alpha)).unwrap());
            assert!(validate(Family::Set, &canonical(Canonical::SfTPrime, &alpha)).unwrap());
            assert_eq!(canonical(Canonical::SfT, &alpha), t);
        }
    }
    let a = Composition::from_slice(&[2, 3, 1]);
    assert_eq!(canonical(Canonical::CalTPrime, &a), Filling::from_rows(&[&[1, 6], &[2, 4, 5], &[3]]));
    assert_eq!(canonical(Canonical::SfTPrime, &a), Filling::from_rows(&[&[1, 4], &[2, 5, 6], &[3]]));
}

#[test]
fn filling_json_round_trip() {
    for alpha in compositions(5) {
        for t in enumerate(Family::Sit, &alpha).unwrap() {
            let back: Filling = serde_json::from_value(t.to_json()).unwrap();
            assert_eq!(back, t);
        }
    }
    let bad = serde_json::json!({"shape": [2], "rows": [[1, 2, 3]]});
    assert!(serde_json::from_value::<Filling>(bad).is_err());
}

#[test]
fn oversized_enumeration_is_refused() {
    assert!(enumerate(Family::Sit, &Composition::from_slice(&[13])).is_err());
}
