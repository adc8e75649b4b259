//! Bulk property suites run in parallel and reported in a fixed order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use qhecke::comb_core::compositions;
use qhecke::filtration::{
    filtration_v, filtration_x, k_characterizations, surjection_chain, v_layers_sum, x_layers_sum, y_module,
};
use qhecke::greene::predict_shape;
use qhecke::hecke::{module_v, module_x};
use qhecke::insertion::{pq_hat, rsk};
use qhecke::permutation::all_perms;
use qhecke::qsym::young_quasischur_f;
use qhecke::tableaux::des_hat_s;
use qhecke::Composition;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Result of one suite at one size.
pub struct Row {
    pub suite: &'static str,
    pub n: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

type Suite = fn(usize) -> (usize, Vec<String>);

const SUITES: [(&str, Suite); 8] = [
    ("insertion bijection", insertion_bijection),
    ("descents and shapes", descents_and_shapes),
    ("shape prediction", shape_prediction),
    ("module relations", module_relations),
    ("filtration of V", filtrations_v),
    ("filtration of X", filtrations_x),
    ("top quotient Y", top_quotient),
    ("surjection chain", surjections),
];

/// Every suite for every size `1..=n`, in suite-then-size order.
pub fn run(n: usize) -> Vec<Row> {
    let jobs: Vec<(&'static str, Suite, usize)> =
        SUITES.iter().flat_map(|&(name, f)| (1..=n).map(move |k| (name, f, k))).collect();
    jobs.into_par_iter()
        .map(|(suite, f, n)| {
            let (checks, failures) = f(n);
            Row { suite, n, checks, failures }
        })
        .collect()
}

pub fn table(rows: &[Row]) -> String {
    let width = SUITES.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let verdict = if r.failures.is_empty() { "PASS" } else { "FAIL" };
        let _ = write!(out, "{verdict}  {:<width$}  n={}  {:>5} checks", r.suite, r.n, r.checks);
        if let Some(first) = r.failures.first() {
            let _ = write!(out, "  {} failed, first: {first}", r.failures.len());
        }
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[Row]) -> Value {
    json!(rows
        .iter()
        .map(|r| json!({"suite": r.suite, "n": r.n, "checks": r.checks, "failures": r.failures}))
        .collect::<Vec<_>>())
}

/// Tallies boolean checks, keeping a description of each failure.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn done(self) -> (usize, Vec<String>) {
        (self.checks, self.failures)
    }
}

fn insertion_bijection(n: usize) -> (usize, Vec<String>) {
    let mut t = Tally::default();
    let mut pairs = BTreeSet::new();
    for sigma in all_perms(n) {
        let (p, q) = pq_hat(&sigma);
        let (p_inv, _) = pq_hat(&sigma.inverse());
        t.check(p_inv == q, || format!("P̂(σ⁻¹) ≠ Q̂(σ) at {sigma}"));
        pairs.insert((p, q));
    }
    let total: usize = (1..=n).product();
    t.check(pairs.len() == total, || format!("{} distinct pairs for {total} permutations", pairs.len()));
    t.done()
}

fn descents_and_shapes(n: usize) -> (usize, Vec<String>) {
    let mut t = Tally::default();
    for sigma in all_perms(n) {
        let (p, _) = pq_hat(&sigma);
        t.check(sigma.des_l() == des_hat_s(&p), || format!("descent set at {sigma}"));
        t.check(p.shape().lambda_sort() == rsk(&sigma).0.shape(), || format!("partition shape at {sigma}"));
    }
    t.done()
}

fn shape_prediction(n: usize) -> (usize, Vec<String>) {
    let mut t = Tally::default();
    for sigma in all_perms(n) {
        let predicted = predict_shape(sigma.word());
        let inserted = pq_hat(&sigma).0.shape();
        t.check(predicted.as_ref() == Ok(&inserted), || format!("prediction at {sigma}"));
    }
    t.done()
}

fn each_composition(n: usize, shuffles_only: bool, mut f: impl FnMut(&Composition, &mut Tally)) -> (usize, Vec<String>) {
    let mut t = Tally::default();
    for alpha in compositions(n) {
        if !shuffles_only || alpha.is_shuffle_of_partition_and_ones() {
            f(&alpha, &mut t);
        }
    }
    t.done()
}

fn module_relations(n: usize) -> (usize, Vec<String>) {
    each_composition(n, false, |a, t| {
        t.check(module_v(a).is_ok_and(|m| m.verify_relations()), || format!("V_{a}"));
        t.check(module_x(a).is_ok_and(|m| m.verify_relations()), || format!("X_{a}"));
    })
}

fn filtrations_v(n: usize) -> (usize, Vec<String>) {
    each_composition(n, false, |a, t| {
        t.check(filtration_v(a).is_ok_and(|r| r.is_verified()), || format!("filtration of V_{a}"));
        t.check(v_layers_sum(a).unwrap_or(false), || format!("layer sum of V_{a}"));
    })
}

fn filtrations_x(n: usize) -> (usize, Vec<String>) {
    each_composition(n, true, |a, t| {
        t.check(filtration_x(a).is_ok_and(|r| r.is_verified()), || format!("filtration of X_{a}"));
        t.check(x_layers_sum(a).unwrap_or(false), || format!("layer sum of X_{a}"));
    })
}

fn top_quotient(n: usize) -> (usize, Vec<String>) {
    each_composition(n, false, |a, t| {
        let ch = y_module(a).map(|y| y.full_characteristic());
        t.check(ch.ok() == Some(young_quasischur_f(a)), || format!("characteristic of Y_{a}"));
        if a.is_shuffle_of_partition_and_ones() {
            t.check(k_characterizations(a).is_ok(), || format!("descriptions of K_{a}"));
        }
    })
}

fn surjections(n: usize) -> (usize, Vec<String>) {
    each_composition(n, false, |a, t| match surjection_chain(a) {
        Ok(chain) => t.check(chain.upsilon_is_iso == a.reverse().is_simple(), || format!("Υ at {a}")),
        Err(e) => t.check(false, || format!("{a}: {e}")),
    })
}
