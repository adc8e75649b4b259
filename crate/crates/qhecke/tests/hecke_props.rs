use std::collections::{BTreeMap, BTreeSet, HashMap};

use qhecke::comb_core::compositions;
use qhecke::filtration::{interval_v, interval_x, y_module};
use qhecke::hecke::{canonical_quotient, eta_map, gamma_map, interval_module, module_v, module_x, CombModule, ModuleMap, Outcome};
use qhecke::permutation::all_perms;
use qhecke::qsym::{dual_immaculate_f, extended_schur_f, f_elem, rho, QSymElem};
use qhecke::tableaux::enumerate;
use qhecke::{Composition, Family, Perm};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

fn p(s: &str) -> Perm {
    s.parse().unwrap()
}

/// An interval `[σ, ρ]` with `ρ` reached from a random `σ` by a random upward walk.
fn random_interval(rng: &mut StdRng, n: usize) -> (Perm, Perm) {
    let perms = all_perms(n);
    let lo = perms[rng.gen_range(0..perms.len())].clone();
    let mut hi = lo.clone();
    for _ in 0..rng.gen_range(0..10) {
        let ups: Vec<usize> = (1..n).filter(|&i| !hi.has_left_descent(i)).collect();
        if ups.is_empty() {
            break;
        }
        hi = hi.left_mul_s(ups[rng.gen_range(0..ups.len())]);
    }
    (lo, hi)
}

/// Characteristic computed straight from left descent sets.
fn descent_characteristic(elements: &[Perm], n: usize) -> QSymElem {
    let mut ch = QSymElem::zero(n);
    for g in elements {
        ch.add_term(Composition::comp_of(&g.des_l(), n).unwrap().complement(), 1);
    }
    ch
}

#[test]
fn random_intervals_satisfy_the_relations() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let (lo, hi) = random_interval(&mut rng, 6);
        let m = interval_module(&lo, &hi).unwrap();
        assert!(m.verify_relations(), "[{lo}, {hi}]: {:?}", m.relation_violation());
        let elements: Vec<Perm> = m.labels().iter().map(|l| p(l)).collect();
        assert_eq!(m.full_characteristic(), descent_characteristic(&elements, 6));
        assert_eq!(rho(&m.full_characteristic()), m.phi_twist().full_characteristic());
        assert!(m.phi_twist().verify_relations());
    }
    for (lo, hi) in [("214365", "615243"), ("321465", "641253")] {
        assert!(interval_module(&p(lo), &p(hi)).unwrap().verify_relations());
    }
}

#[test]
fn tableau_modules_have_the_expected_characteristics() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let v = module_v(&alpha).unwrap();
            let x = module_x(&alpha).unwrap();
            assert!(v.verify_relations(), "V {alpha}");
            assert!(x.verify_relations(), "X {alpha}");
            assert_eq!(v.full_characteristic(), dual_immaculate_f(&alpha), "{alpha}");
            assert_eq!(x.full_characteristic(), extended_schur_f(&alpha), "{alpha}");
            for m in [&v, &x] {
                assert_eq!(m.phi_twist().full_characteristic(), rho(&m.full_characteristic()));
            }
        }
    }
}

#[test]
fn relations_hold_in_degree_seven() {
    for alpha in compositions(7) {
        assert!(module_v(&alpha).unwrap().verify_relations(), "V {alpha}");
        assert!(module_x(&alpha).unwrap().verify_relations(), "X {alpha}");
    }
}

/// `T ↦ row(T)` identifies each tableau module with an interval module.
fn reading_word_map(src: &CombModule, family: Family, alpha: &Composition, dst: &CombModule) -> ModuleMap {
    let words: HashMap<String, String> = enumerate(family, alpha)
        .unwrap()
        .iter()
        .map(|t| (t.to_string(), Perm::from_word(&t.row_word()).unwrap().to_string()))
        .collect();
    ModuleMap::from_labels(src, dst, |l| words.get(l).cloned()).unwrap()
}

#[test]
fn tableau_modules_are_interval_modules() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let iv = interval_v(&alpha).unwrap();
            let theta_v = reading_word_map(&module_v(&alpha).unwrap(), Family::Sit, &alpha, &interval_module(&iv.lo, &iv.hi).unwrap());
            assert!(theta_v.iso_check(), "V {alpha}");
            let iv = interval_x(&alpha).unwrap();
            let theta_x = reading_word_map(&module_x(&alpha).unwrap(), Family::Set, &alpha, &interval_module(&iv.lo, &iv.hi).unwrap());
            assert!(theta_x.iso_check(), "X {alpha}");
        }
    }
}

#[test]
fn canonical_quotient_and_its_maps() {
    for n in 1..=6 {
        for alpha in compositions(n) {
            let q = canonical_quotient(&alpha).unwrap();
            assert_eq!(q.dim(), enumerate(Family::SyctC, &alpha).unwrap().len(), "{alpha}");
            assert!(q.verify_relations());
            let gamma = gamma_map(&alpha).unwrap();
            let eta = eta_map(&alpha).unwrap();
            assert!(gamma.hom_check() && gamma.is_surjective());
            assert!(eta.hom_check() && eta.is_surjective());
        }
    }
}

#[test]
fn module_json_round_trip_and_dot_is_stable() {
    for alpha in compositions(5) {
        for m in [module_v(&alpha).unwrap(), module_x(&alpha).unwrap(), canonical_quotient(&alpha).unwrap()] {
            let back = CombModule::from_json(&m.to_json()).unwrap();
            assert_eq!(back, m);
            assert_eq!(back.to_dot(), m.to_dot());
        }
    }
    let broken = serde_json::json!({"n": 3, "basis": ["123"], "action": {"1": {"123": "fix"}}});
    assert!(CombModule::from_json(&broken).is_err());
}

#[test]
fn quotients_need_closed_sets() {
    let m = interval_module(&p("123"), &p("321")).unwrap();
    let bottom: BTreeSet<usize> = [m.index_of("123").unwrap()].into_iter().collect();
    assert!(m.quotient(&bottom).is_err());
    let top: BTreeSet<usize> = [m.index_of("321").unwrap()].into_iter().collect();
    let q = m.quotient(&top).unwrap();
    assert_eq!(q.dim(), 5);
    assert!(q.verify_relations());
    assert_eq!(m.characteristic(&top, &BTreeSet::new()).unwrap(), f_elem(&Composition::from_slice(&[3])));
}

// Golden action tables, encoded by hand from reference drawings.

#[derive(Debug, PartialEq, Eq)]
struct Drawn {
    fixes: BTreeSet<usize>,
    moves: BTreeMap<usize, String>,
}

fn load(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn golden_nodes(v: &Value) -> BTreeMap<String, Drawn> {
    let mut nodes: BTreeMap<String, Drawn> = v["nodes"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(label, node)| {
            let fixes = node["fixes"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
            let moves = node["moves"]
                .as_object()
                .unwrap()
                .iter()
                .map(|(i, t)| (i.parse().unwrap(), t.as_str().unwrap().to_string()))
                .collect();
            (label.clone(), Drawn { fixes, moves })
        })
        .collect();
    for fix in v["errata"].as_array().into_iter().flatten() {
        let node = nodes.get_mut(fix["node"].as_str().unwrap()).unwrap();
        let drawn: BTreeSet<usize> = fix["as_drawn"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
        assert_eq!(node.fixes, drawn, "erratum must describe what the golden file records");
        node.fixes = fix["corrected"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
    }
    nodes
}

fn computed_nodes(m: &CombModule) -> BTreeMap<String, Drawn> {
    (0..m.dim())
        .map(|b| {
            let moves = (1..m.n())
                .filter_map(|i| match m.act(i, b) {
                    Outcome::Move(t) => Some((i, m.label(t).to_string())),
                    _ => None,
                })
                .collect();
            (m.label(b).to_string(), Drawn { fixes: m.descents(b), moves })
        })
        .collect()
}

#[test]
fn golden_interval_tables() {
    for (name, size) in [("interval_214365_615243.json", 15), ("interval_321465_641253.json", 9)] {
        let v = load(name);
        let ends: Vec<Perm> = v["interval"].as_array().unwrap().iter().map(|x| p(x.as_str().unwrap())).collect();
        let m = interval_module(&ends[0], &ends[1]).unwrap();
        assert_eq!(m.dim(), size);
        assert_eq!(computed_nodes(&m), golden_nodes(&v), "{name}");
    }
}

#[test]
fn golden_k_alpha_table() {
    let v = load("k_alpha_2_3_1.json");
    let alpha: Composition = serde_json::from_value(v["alpha"].clone()).unwrap();
    let y = y_module(&alpha).unwrap();
    assert_eq!(y.dim(), 5);
    assert_eq!(computed_nodes(&y), golden_nodes(&v));
}

#[test]
fn drawn_loop_labels_disagree_exactly_once() {
    let v = load("interval_214365_615243.json");
    let errata = v["errata"].as_array().unwrap();
    assert_eq!(errata.len(), 1);
    let node = p(errata[0]["node"].as_str().unwrap());
    let corrected: BTreeSet<usize> = errata[0]["corrected"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
    assert_eq!(node.des_l(), corrected);
}
