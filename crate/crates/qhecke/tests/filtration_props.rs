use std::collections::BTreeSet;

use qhecke::comb_core::compositions;
use qhecke::filtration::{
    a_alpha, appendix_report, closure_check, filtration_v_with, filtration_x, inv_c, interval_v, iota, k_alpha,
    k_characterizations, m_equiv, m_equiv_via_rsk, seq12, surjection_chain, tau_prime, top_tableaux_se_decreasing,
    v_layers_sum, x_layers_sum, y_module, Tiebreak,
};
use qhecke::hecke::{interval_module, ModuleMap};
use qhecke::insertion::rsk;
use qhecke::permutation::{all_perms, leq_l};
use qhecke::qsym::young_quasischur_f;
use qhecke::tableaux::enumerate;
use qhecke::{Cell, Composition, Family, Filling, Perm};

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

fn c(s: &[usize]) -> Composition {
    Composition::from_slice(s)
}

fn shuffles(n: usize) -> impl Iterator<Item = Composition> {
    compositions(n).into_iter().filter(Composition::is_shuffle_of_partition_and_ones)
}

#[test]
fn m_equivalence_refines_dual_knuth() {
    let all = all_perms(5);
    for a in &all {
        for b in &all {
            let m = m_equiv(a, b);
            assert_eq!(m, m_equiv_via_rsk(a, b), "{a} {b}");
            if m {
                assert_eq!(rsk(a).1, rsk(b).1, "{a} {b}");
            }
        }
    }
}

#[test]
fn reversed_intervals_are_unions_of_classes() {
    for alpha in compositions(6) {
        let s: BTreeSet<Perm> = interval_v(&alpha).unwrap().elements.iter().map(Perm::times_w0).collect();
        assert!(closure_check(&s).unwrap(), "{alpha}");
    }
}

/// Brute-force classes: group `S_n` by insertion shape and column recording tableau.
fn brute_closed(s: &BTreeSet<Perm>) -> bool {
    let n = s.iter().next().unwrap().n();
    let key = |g: &Perm| {
        let (ph, qh) = qhecke::insertion::pq_hat(g);
        (ph.shape(), qh)
    };
    all_perms(n).iter().all(|g| s.contains(g) || s.iter().all(|h| key(h) != key(g)))
}

#[test]
fn closure_under_the_four_translates() {
    let s: BTreeSet<Perm> = [p("3124"), p("4123")].into_iter().collect();
    let w0 = qhecke::permutation::w0(4);
    let right: BTreeSet<Perm> = s.iter().map(Perm::times_w0).collect();
    let left: BTreeSet<Perm> = s.iter().map(|g| w0.compose(g)).collect();
    let both: BTreeSet<Perm> = left.iter().map(Perm::times_w0).collect();
    for t in [&s, &right, &left, &both] {
        assert_eq!(closure_check(t).unwrap(), brute_closed(t), "{t:?}");
    }
    assert!(closure_check(&s).unwrap());
    // 4213 and 3214 share a recording tableau but not an insertion shape
    assert!(closure_check(&right).unwrap());
    assert!(closure_check(&left).unwrap());
    assert!(!closure_check(&both).unwrap());
}

#[test]
fn immaculate_filtrations_under_two_tiebreaks() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let k = k_alpha(&alpha).unwrap();
            for tiebreak in [Tiebreak::ShapeDescending, Tiebreak::ShapeAscending] {
                let r = filtration_v_with(&alpha, tiebreak).unwrap();
                assert!(r.is_verified(), "{alpha} {tiebreak:?}");
                let last = r.strata.last().unwrap();
                assert_eq!(last.members, k, "{alpha} {tiebreak:?}");
                assert_eq!(last.gamma, alpha);
                let covered: usize = r.strata.iter().map(|s| s.members.len()).sum();
                assert_eq!(covered, r.interval.len());
            }
            assert!(v_layers_sum(&alpha).unwrap(), "{alpha}");
        }
    }
}

#[test]
fn extended_filtrations_on_shuffles() {
    for n in 1..=6 {
        for alpha in shuffles(n) {
            let r = filtration_x(&alpha).unwrap();
            assert!(r.is_verified());
            assert_eq!(r.recordings().len(), 1, "{alpha}");
            assert!(x_layers_sum(&alpha).unwrap(), "{alpha}");
        }
    }
    assert!(filtration_x(&c(&[2, 3, 1])).is_err());
}

#[test]
fn top_quotient_properties() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let y = y_module(&alpha).unwrap();
            assert!(y.verify_relations());
            assert_eq!(y.full_characteristic(), young_quasischur_f(&alpha), "{alpha}");
        }
        for alpha in shuffles(n) {
            k_characterizations(&alpha).unwrap();
        }
    }
}

#[test]
fn top_quotient_lives_on_se_decreasing_extended_tableaux() {
    for n in 1..=7 {
        for alpha in shuffles(n) {
            let rows: BTreeSet<Perm> = enumerate(Family::Set, &alpha)
                .unwrap()
                .iter()
                .map(|t| Perm::from_word(&t.row_word()).unwrap())
                .collect();
            assert!(k_alpha(&alpha).unwrap().is_subset(&rows), "{alpha}");
            assert!(top_tableaux_se_decreasing(&alpha).unwrap(), "{alpha}");
        }
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

#[test]
fn k_2_3_1_is_not_an_interval() {
    let alpha = c(&[2, 3, 1]);
    let k = k_alpha(&alpha).unwrap();
    let need: BTreeSet<usize> = [1, 3, 4].into_iter().collect();
    let with: Vec<&Perm> = k.iter().filter(|g| need.is_subset(&g.des_l())).collect();
    assert_eq!(with, vec![&p("215436")]);
    assert!(k.iter().all(|g| g == with[0] || !leq_l(g, with[0]).unwrap()));

    // no interval of S6 carries a basis-preserving isomorphic copy of the module
    let y = y_module(&alpha).unwrap();
    let relabelings = permutations_of(&(0..y.dim()).collect::<Vec<_>>());
    for lo in all_perms(6).into_iter().filter(|g| need.is_subset(&g.des_l())) {
        for hi in all_perms(6) {
            let Ok(iv) = qhecke::permutation::interval(&lo, &hi) else { continue };
            if iv.len() != y.dim() {
                continue;
            }
            let b = interval_module(&lo, &hi).unwrap();
            for perm in &relabelings {
                let map = ModuleMap::from_labels(&y, &b, |l| {
                    Some(b.label(perm[y.index_of(l).unwrap()]).to_string())
                })
                .unwrap();
                assert!(!map.iso_check(), "[{lo}, {hi}] is isomorphic");
            }
        }
    }
}

#[test]
fn reading_word_inversions_split_by_cells() {
    for alpha in compositions(6) {
        let a = a_alpha(&alpha);
        for t in enumerate(Family::Set, &alpha).unwrap() {
            let word = Perm::from_word(&t.row_word()).unwrap();
            let cross: BTreeSet<(usize, usize)> =
                inv_c(&t).iter().map(|&(c1, c2)| (iota(&alpha, c1), iota(&alpha, c2))).collect();
            assert!(cross.is_disjoint(&a));
            let union: BTreeSet<(usize, usize)> = cross.union(&a).copied().collect();
            assert_eq!(word.inv_l(), union, "{t}");
        }
    }
    let alpha = c(&[2, 3, 1]);
    assert_eq!(iota(&alpha, Cell::new(1, 1)), 2);
    assert_eq!(iota(&alpha, Cell::new(3, 1)), 6);
}

#[test]
fn worked_top_quotient_is_an_interval_module() {
    let y = y_module(&c(&[3, 1, 2])).unwrap();
    let b = interval_module(&p("321465"), &p("521364")).unwrap();
    assert!(ModuleMap::identity_or_zero(&y, &b).iso_check());
    assert_eq!(tau_prime(&c(&[3, 1, 2])).unwrap().row_word(), vec![5, 2, 1, 3, 6, 4]);
}

#[test]
fn tau_prime_on_single_column() {
    for n in 1..=7 {
        let alpha = Composition::new(vec![1; n]).unwrap();
        let rows: Vec<Vec<usize>> = (1..=n).map(|i| vec![i]).collect();
        assert_eq!(tau_prime(&alpha).unwrap(), Filling::new(rows).unwrap());
    }
}

#[test]
fn sink_sequences_cover_disjoint_cells() {
    for n in 1..=8 {
        for alpha in shuffles(n) {
            let d = seq12(&alpha).unwrap();
            let cells: BTreeSet<Cell> = d.seq1.iter().chain(&d.seq2).chain(&d.remainder).copied().collect();
            assert_eq!(cells.len(), d.seq1.len() + d.seq2.len() + d.remainder.len(), "{alpha}");
            assert_eq!(cells, alpha.diagram().into_iter().collect(), "{alpha}");
        }
    }
}

#[test]
fn surjection_chain_and_simple_compositions() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let chain = surjection_chain(&alpha).unwrap();
            assert_eq!(chain.delta_tilde.is_some(), alpha.is_shuffle_of_partition_and_ones());
            let simple = alpha.reverse().is_simple();
            let dims_match = enumerate(Family::SyctC, &alpha).unwrap().len() == k_alpha(&alpha).unwrap().len();
            assert_eq!(chain.upsilon_is_iso, simple, "{alpha}");
            assert_eq!(simple, dims_match, "{alpha}");
        }
    }
}

#[test]
fn obstruction_certificate() {
    let report = appendix_report().unwrap();
    assert_eq!(report.interval_size, 64);
    for f in &report.facts {
        assert!(f.holds, "{}: {}", f.group, f.statement);
    }
    let groups: BTreeSet<&str> = report.facts.iter().map(|f| f.group).collect();
    assert_eq!(groups.len(), 6);
}
