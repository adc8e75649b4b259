//! 0-Hecke modules presented by action tables.
//!
//! A [`CombModule`] has a finite basis of labelled vectors on which each
//! generator `π_i` either fixes a basis vector, kills it, or moves it to
//! another basis vector. Interval modules of the left weak order and the
//! tableau modules on immaculate and extended tableaux are all of this kind.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::comb_core::Composition;
use crate::error::{Error, Result};
use crate::permutation::{interval, Perm};
use crate::qsym::{f_elem, QSymElem};
use crate::tableaux::{enumerate, Family, Filling};

/// Image of a basis vector under one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Fix,
    Kill,
    /// Index of the target basis vector.
    Move(usize),
}

/// A 0-Hecke module with a basis permuted, fixed or killed by each `π_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombModule {
    n: usize,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `table[b][i-1]` is `π_i · b`.
    table: Vec<Vec<Outcome>>,
}

impl CombModule {
    /// Builds a module from labels and a table with one row per basis vector.
    pub fn from_table(n: usize, labels: Vec<String>, table: Vec<Vec<Outcome>>) -> Result<Self> {
        if labels.len() != table.len() {
            return Err(Error::Precondition("one action row per basis label is required".into()));
        }
        let gens = n.saturating_sub(1);
        for row in &table {
            if row.len() != gens {
                return Err(Error::Precondition(format!("each action row needs {gens} entries")));
            }
            if row.iter().any(|o| matches!(o, Outcome::Move(t) if *t >= labels.len())) {
                return Err(Error::Precondition("move target outside the basis".into()));
            }
        }
        let index: HashMap<String, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        if index.len() != labels.len() {
            return Err(Error::Precondition("basis labels must be distinct".into()));
        }
        Ok(CombModule { n, labels, index, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, b: usize) -> &str {
        &self.labels[b]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// `π_i · b`.
    pub fn act(&self, i: usize, b: usize) -> Outcome {
        self.table[b][i - 1]
    }

    /// `π_i` applied to a basis vector or zero.
    pub fn apply(&self, i: usize, b: Option<usize>) -> Option<usize> {
        let b = b?;
        match self.act(i, b) {
            Outcome::Fix => Some(b),
            Outcome::Kill => None,
            Outcome::Move(t) => Some(t),
        }
    }

    /// `π_{i₁} ⋯ π_{i_k} · b`; the rightmost generator acts first.
    pub fn apply_word(&self, word: &[usize], b: usize) -> Option<usize> {
        word.iter().rev().try_fold(b, |acc, &i| self.apply(i, Some(acc)))
    }

    /// `π_σ · b` along a reduced word of `σ`.
    pub fn apply_perm(&self, sigma: &Perm, b: usize) -> Option<usize> {
        self.apply_word(&sigma.reduced_word(), b)
    }

    /// Generators fixing `b`.
    pub fn descents(&self, b: usize) -> BTreeSet<usize> {
        (1..self.n).filter(|&i| self.act(i, b) == Outcome::Fix).collect()
    }

    /// The first violated defining relation, if any.
    pub fn relation_violation(&self) -> Option<String> {
        let n = self.n;
        for b in 0..self.dim() {
            for i in 1..n {
                let once = self.apply(i, Some(b));
                if self.apply(i, once) != once {
                    return Some(format!("pi_{i}^2 != pi_{i} on {}", self.labels[b]));
                }
                if i + 1 < n {
                    let lhs = self.apply_word(&[i, i + 1, i], b);
                    let rhs = self.apply_word(&[i + 1, i, i + 1], b);
                    if lhs != rhs {
                        return Some(format!("braid relation fails for i = {i} on {}", self.labels[b]));
                    }
                }
                for j in i + 2..n {
                    if self.apply_word(&[i, j], b) != self.apply_word(&[j, i], b) {
                        return Some(format!("pi_{i} and pi_{j} do not commute on {}", self.labels[b]));
                    }
                }
            }
        }
        None
    }

    pub fn verify_relations(&self) -> bool {
        self.relation_violation().is_none()
    }

    /// Whether the span of `s` is stable under every generator.
    pub fn is_basis_submodule(&self, s: &BTreeSet<usize>) -> bool {
        s.iter().all(|&b| {
            (1..self.n).all(|i| match self.act(i, b) {
                Outcome::Move(t) => s.contains(&t),
                _ => true,
            })
        })
    }

    /// The quotient by the span of an action-closed set `s`.
    pub fn quotient(&self, s: &BTreeSet<usize>) -> Result<CombModule> {
        if !self.is_basis_submodule(s) {
            return Err(Error::Domain("quotient by a set that is not action-closed".into()));
        }
        let kept: Vec<usize> = (0..self.dim()).filter(|b| !s.contains(b)).collect();
        let new_index: HashMap<usize, usize> = kept.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let table = kept
            .iter()
            .map(|&b| {
                self.table[b]
                    .iter()
                    .map(|&o| match o {
                        Outcome::Move(t) => new_index.get(&t).map_or(Outcome::Kill, |&k| Outcome::Move(k)),
                        other => other,
                    })
                    .collect()
            })
            .collect();
        let labels = kept.iter().map(|&b| self.labels[b].clone()).collect();
        CombModule::from_table(self.n, labels, table)
    }

    /// Quasisymmetric characteristic of `span(s) / span(s_sub)`.
    pub fn characteristic(&self, s: &BTreeSet<usize>, s_sub: &BTreeSet<usize>) -> Result<QSymElem> {
        if !s_sub.is_subset(s) {
            return Err(Error::Domain("the smaller set must lie in the larger one".into()));
        }
        if !self.is_basis_submodule(s) || !self.is_basis_submodule(s_sub) {
            return Err(Error::Domain("characteristic of a non-closed subquotient".into()));
        }
        let mut ch = QSymElem::zero(self.n);
        for &b in s.difference(s_sub) {
            ch = ch.add(&f_elem(&self.basis_type(b)))?;
        }
        Ok(ch)
    }

    /// Characteristic of the whole module.
    pub fn full_characteristic(&self) -> QSymElem {
        let all: BTreeSet<usize> = (0..self.dim()).collect();
        self.characteristic(&all, &BTreeSet::new()).expect("the whole basis is closed")
    }

    /// `comp(Des(b))^c`, the composition indexing the one-dimensional factor at `b`.
    pub fn basis_type(&self, b: usize) -> Composition {
        Composition::comp_of(&self.descents(b), self.n).expect("descents lie in [n-1]").complement()
    }

    /// Twist by the automorphism `π_i ↦ π_{n−i}`.
    pub fn phi_twist(&self) -> CombModule {
        let table = self.table.iter().map(|row| row.iter().rev().copied().collect()).collect();
        CombModule { n: self.n, labels: self.labels.clone(), index: self.index.clone(), table }
    }

    pub fn to_json(&self) -> Value {
        let mut action = Map::new();
        for i in 1..self.n {
            let mut per = Map::new();
            for (b, label) in self.labels.iter().enumerate() {
                let v = match self.act(i, b) {
                    Outcome::Fix => json!("fix"),
                    Outcome::Kill => json!("kill"),
                    Outcome::Move(t) => json!({ "move": self.labels[t] }),
                };
                per.insert(label.clone(), v);
            }
            action.insert(i.to_string(), Value::Object(per));
        }
        json!({ "n": self.n, "basis": self.labels, "action": action })
    }

    /// Parses the JSON dump produced by [`CombModule::to_json`].
    pub fn from_json(v: &Value) -> Result<CombModule> {
        let bad = |m: &str| Error::Parse(format!("module dump: {m}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let labels: Vec<String> = v["basis"]
            .as_array()
            .ok_or_else(|| bad("missing basis"))?
            .iter()
            .map(|l| l.as_str().map(str::to_owned).ok_or_else(|| bad("non-string label")))
            .collect::<Result<_>>()?;
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut table = vec![vec![Outcome::Kill; n.saturating_sub(1)]; labels.len()];
        for i in 1..n {
            let per = &v["action"][i.to_string()];
            for (b, label) in labels.iter().enumerate() {
                let entry = &per[label.as_str()];
                table[b][i - 1] = match entry {
                    Value::String(s) if s == "fix" => Outcome::Fix,
                    Value::String(s) if s == "kill" => Outcome::Kill,
                    Value::Object(o) => {
                        let target = o.get("move").and_then(Value::as_str).ok_or_else(|| bad("bad move"))?;
                        Outcome::Move(*index.get(target).ok_or_else(|| bad("move target not in basis"))?)
                    }
                    _ => return Err(bad(&format!("no action for generator {i} on {label}"))),
                };
            }
        }
        CombModule::from_table(n, labels, table)
    }

    /// Graphviz rendering: one edge per move, one loop per basis vector
    /// listing its fixing generators. Kills are not drawn.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph module {\n  rankdir=BT;\n  node [shape=box];\n");
        for (b, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  \"{label}\";");
            let fixes: Vec<String> = self.descents(b).iter().map(|i| format!("π{i}")).collect();
            if !fixes.is_empty() {
                let _ = writeln!(out, "  \"{label}\" -> \"{label}\" [label=\"{}\"];", fixes.join(","));
            }
            for i in 1..self.n {
                if let Outcome::Move(t) = self.act(i, b) {
                    let _ = writeln!(out, "  \"{label}\" -> \"{}\" [label=\"π{i}\"];", self.labels[t]);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The weak Bruhat interval module on `[σ, ρ]_L`.
pub fn interval_module(sigma: &Perm, rho: &Perm) -> Result<CombModule> {
    let iv = interval(sigma, rho)?;
    let index: HashMap<&Perm, usize> = iv.elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let n = sigma.n();
    let table = iv
        .elements
        .iter()
        .map(|g| {
            (1..n)
                .map(|i| {
                    if g.has_left_descent(i) {
                        Outcome::Fix
                    } else {
                        index.get(&g.left_mul_s(i)).map_or(Outcome::Kill, |&t| Outcome::Move(t))
                    }
                })
                .collect()
        })
        .collect();
    let labels = iv.elements.iter().map(Perm::to_string).collect();
    CombModule::from_table(n, labels, table)
}

fn tableau_module(
    tableaux: &[Filling],
    n: usize,
    rule: impl Fn(&Filling, usize) -> Outcome,
) -> Result<CombModule> {
    let index: HashMap<&Filling, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut table = Vec::with_capacity(tableaux.len());
    for t in tableaux {
        let mut row = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            row.push(match rule(t, i) {
                Outcome::Move(_) => {
                    let swapped = t.swap_values(i);
                    let target = index
                        .get(&swapped)
                        .ok_or_else(|| Error::Certificate(format!("s_{i} moves {t} outside the basis")))?;
                    Outcome::Move(*target)
                }
                other => other,
            });
        }
        table.push(row);
    }
    CombModule::from_table(n, tableaux.iter().map(Filling::to_string).collect(), table)
}

/// The module on standard immaculate tableaux of shape `α`.
pub fn module_v(alpha: &Composition) -> Result<CombModule> {
    let sits = enumerate(Family::Sit, alpha)?;
    tableau_module(&sits, alpha.size(), |t, i| {
        let (a, b) = (t.position(i).expect("standard"), t.position(i + 1).expect("standard"));
        if a.row >= b.row {
            Outcome::Fix
        } else if a.col == 1 && b.col == 1 {
            Outcome::Kill
        } else {
            Outcome::Move(usize::MAX)
        }
    })
}

/// The module on standard extended tableaux of shape `α`.
pub fn module_x(alpha: &Composition) -> Result<CombModule> {
    let sets = enumerate(Family::Set, alpha)?;
    tableau_module(&sets, alpha.size(), |t, i| {
        let (a, b) = (t.position(i).expect("standard"), t.position(i + 1).expect("standard"));
        if a.col < b.col {
            Outcome::Fix
        } else if a.col == b.col {
            Outcome::Kill
        } else {
            Outcome::Move(usize::MAX)
        }
    })
}

/// A linear map sending each source basis vector to a target basis vector or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub src: CombModule,
    pub dst: CombModule,
    pub assignment: Vec<Option<usize>>,
}

impl ModuleMap {
    /// Builds a map from a label-level rule; `None` sends a vector to zero.
    pub fn from_labels(
        src: &CombModule,
        dst: &CombModule,
        rule: impl Fn(&str) -> Option<String>,
    ) -> Result<ModuleMap> {
        let assignment = src
            .labels
            .iter()
            .map(|l| match rule(l) {
                None => Ok(None),
                Some(image) => dst
                    .index_of(&image)
                    .map(Some)
                    .ok_or_else(|| Error::Domain(format!("{image} is not a basis label of the target"))),
            })
            .collect::<Result<_>>()?;
        Ok(ModuleMap { src: src.clone(), dst: dst.clone(), assignment })
    }

    /// Identity on shared labels, zero elsewhere.
    pub fn identity_or_zero(src: &CombModule, dst: &CombModule) -> ModuleMap {
        let assignment = src.labels.iter().map(|l| dst.index_of(l)).collect();
        ModuleMap { src: src.clone(), dst: dst.clone(), assignment }
    }

    pub fn image(&self, b: usize) -> Option<usize> {
        self.assignment[b]
    }

    /// Whether the map commutes with every generator.
    pub fn hom_check(&self) -> bool {
        if self.src.n != self.dst.n {
            return false;
        }
        (0..self.src.dim()).all(|b| {
            (1..self.src.n).all(|i| {
                let lhs = self.src.apply(i, Some(b)).and_then(|c| self.assignment[c]);
                let rhs = self.dst.apply(i, self.assignment[b]);
                lhs == rhs
            })
        })
    }

    pub fn is_surjective(&self) -> bool {
        let hit: BTreeSet<usize> = self.assignment.iter().flatten().copied().collect();
        hit.len() == self.dst.dim()
    }

    /// A homomorphism that is a bijection of bases.
    pub fn iso_check(&self) -> bool {
        self.hom_check()
            && self.assignment.iter().all(Option::is_some)
            && self.src.dim() == self.dst.dim()
            && self.is_surjective()
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModuleMap) -> Result<ModuleMap> {
        if self.dst.labels != next.src.labels {
            return Err(Error::Domain("maps do not compose: intermediate modules differ".into()));
        }
        let assignment = self.assignment.iter().map(|b| b.and_then(|c| next.assignment[c])).collect();
        Ok(ModuleMap { src: self.src.clone(), dst: next.dst.clone(), assignment })
    }
}

/// `Γ`: identity on extended tableaux, zero on the other immaculate ones.
pub fn gamma_map(alpha: &Composition) -> Result<ModuleMap> {
    checked(ModuleMap::identity_or_zero(&module_v(alpha)?, &module_x(alpha)?), "Γ")
}

/// `η̃`: projection of the extended-tableau module onto its column-increasing
/// Young composition tableaux.
pub fn eta_map(alpha: &Composition) -> Result<ModuleMap> {
    checked(ModuleMap::identity_or_zero(&module_x(alpha)?, &canonical_quotient(alpha)?), "η̃")
}

fn checked(map: ModuleMap, name: &str) -> Result<ModuleMap> {
    if map.hom_check() {
        Ok(map)
    } else {
        Err(Error::Certificate(format!("{name} does not commute with the 0-Hecke action")))
    }
}

/// The module on column-increasing Young composition tableaux, realized as a
/// quotient of the extended-tableau module.
pub fn canonical_quotient(alpha: &Composition) -> Result<CombModule> {
    let x = module_x(alpha)?;
    let keep = enumerate(Family::SyctC, alpha)?;
    let keep_labels: BTreeSet<String> = keep.iter().map(Filling::to_string).collect();
    if let Some(stray) = keep_labels.iter().find(|l| x.index_of(l).is_none()) {
        return Err(Error::Certificate(format!("{stray} is column-increasing but not an extended tableau")));
    }
    let kill: BTreeSet<usize> = (0..x.dim()).filter(|&b| !keep_labels.contains(x.label(b))).collect();
    if !x.is_basis_submodule(&kill) {
        return Err(Error::Certificate(format!("the kill-set of {alpha} is not action-closed")));
    }
    x.quotient(&kill)
}
