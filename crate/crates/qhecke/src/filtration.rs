//! Distinguished filtrations of the immaculate and extended tableau modules,
//! the top quotient `Y_α` on `K_α`, the sink sequences and `τ′_α`, the
//! surjection chain through `Y_α`, and a checker for the `X_{(5,2,1)}`
//! obstruction certificate.
//!
//! Strata are indexed by the recording tableau `Q̂(σw₀)` and the insertion
//! shape `sh(P̂(σw₀))` of the interval elements `σ`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde_json::{json, Value};

use crate::comb_core::{Cell, Composition};
use crate::error::{guard, Error, Result};
use crate::hecke::{canonical_quotient, eta_map, gamma_map, interval_module, module_v, module_x, CombModule, ModuleMap, Outcome};
use crate::insertion::{pq_hat, rsk};
use crate::permutation::{all_perms, interval, w0_parabolic, Interval, Perm};
use crate::qsym::{dual_immaculate_f, extended_schur_f, quasischur_f, schur_f, young_quasischur_f, QSymElem};
use crate::tableaux::{canonical, enumerate, is_se_decreasing, Canonical, Family, Filling};

/// Largest `n` for which `S_n` is scanned.
pub const SCAN_LIMIT: usize = 8;

fn mason_key(sigma: &Perm) -> (Composition, Filling) {
    let (p, q) = pq_hat(sigma);
    (p.shape(), q)
}

/// `σ ≃_M ρ`: equal insertion shapes and equal column recording tableaux.
pub fn m_equiv(sigma: &Perm, rho: &Perm) -> bool {
    sigma.n() == rho.n() && mason_key(sigma) == mason_key(rho)
}

/// The same relation through the classical recording tableau.
pub fn m_equiv_via_rsk(sigma: &Perm, rho: &Perm) -> bool {
    sigma.n() == rho.n()
        && pq_hat(sigma).0.shape() == pq_hat(rho).0.shape()
        && rsk(sigma).1 == rsk(rho).1
}

/// Whether `s` is a union of `≃_M` classes of `S_n`.
pub fn closure_check(s: &BTreeSet<Perm>) -> Result<bool> {
    let Some(n) = s.iter().next().map(Perm::n) else { return Ok(true) };
    guard("closure scan n", n, SCAN_LIMIT)?;
    if s.iter().any(|p| p.n() != n) {
        return Err(Error::Domain("permutations of different sizes".into()));
    }
    let keys: HashSet<(Composition, Filling)> = s.iter().map(mason_key).collect();
    Ok(all_perms(n).iter().all(|p| s.contains(p) || !keys.contains(&mason_key(p))))
}

/// One layer `B_k ∖ B_{k−1}` of a filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub recording: Filling,
    pub gamma: Composition,
    pub members: BTreeSet<Perm>,
}

/// A filtration of an interval module together with its verification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub interval: Interval,
    pub strata: Vec<Stratum>,
    /// Every prefix union spans a submodule.
    pub submodule_chain_ok: bool,
    /// Every layer has characteristic `Ŝ_{γ_k}`.
    pub characteristics_ok: bool,
    pub quotient_characteristics: Vec<Composition>,
}

impl FiltrationReport {
    pub fn is_verified(&self) -> bool {
        self.submodule_chain_ok && self.characteristics_ok
    }

    /// The distinct recording tableaux in stratum order.
    pub fn recordings(&self) -> Vec<Filling> {
        let mut out: Vec<Filling> = Vec::new();
        for s in &self.strata {
            if out.last() != Some(&s.recording) {
                out.push(s.recording.clone());
            }
        }
        out
    }

    /// Insertion shapes attached to each recording tableau.
    pub fn shape_sets(&self) -> Vec<BTreeSet<Composition>> {
        self.recordings()
            .iter()
            .map(|q| self.strata.iter().filter(|s| &s.recording == q).map(|s| s.gamma.clone()).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let strata: Vec<Value> = self
            .strata
            .iter()
            .map(|s| {
                json!({
                    "gamma": s.gamma,
                    "recording": s.recording,
                    "members": s.members.iter().map(Perm::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "interval": { "lo": self.interval.lo.to_string(), "hi": self.interval.hi.to_string(), "size": self.interval.len() },
            "strata": strata,
            "checks": {
                "submodule_chain": self.submodule_chain_ok,
                "characteristics": self.characteristics_ok,
            },
        })
    }
}

/// How recording tableaux with the same partition shape are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tiebreak {
    /// Larger composition shape first, then row word.
    #[default]
    ShapeDescending,
    /// Smaller composition shape first, then row word.
    ShapeAscending,
}

fn build_filtration(iv: Interval, tiebreak: Tiebreak) -> Result<FiltrationReport> {
    let module = interval_module(&iv.lo, &iv.hi)?;
    let mut groups: BTreeMap<(Filling, Composition), BTreeSet<Perm>> = BTreeMap::new();
    for sigma in &iv.elements {
        let (p, q) = pq_hat(&sigma.times_w0());
        groups.entry((q, p.shape())).or_default().insert(sigma.clone());
    }

    let mut recordings: Vec<Filling> = groups.keys().map(|(q, _)| q.clone()).collect();
    recordings.dedup();
    // a partition order that is lexicographically larger is never dominated
    recordings.sort_by(|a, b| {
        let by_lambda = b.shape().lambda_sort().cmp(&a.shape().lambda_sort());
        let by_shape = match tiebreak {
            Tiebreak::ShapeDescending => b.shape().cmp(&a.shape()),
            Tiebreak::ShapeAscending => a.shape().cmp(&b.shape()),
        };
        by_lambda.then(by_shape).then_with(|| a.row_word().cmp(&b.row_word()))
    });
    let rank: HashMap<&Filling, usize> = recordings.iter().enumerate().map(|(i, q)| (q, i)).collect();

    let mut keyed: Vec<((usize, Composition), Stratum)> = groups
        .into_iter()
        .map(|((q, gamma), members)| ((rank[&q], gamma.clone()), Stratum { recording: q, gamma, members }))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    let strata: Vec<Stratum> = keyed.into_iter().map(|(_, s)| s).collect();

    let mut submodule_chain_ok = true;
    let mut characteristics_ok = true;
    let mut prefix: BTreeSet<usize> = BTreeSet::new();
    for s in &strata {
        let before = prefix.clone();
        prefix.extend(s.members.iter().map(|p| module.index_of(&p.to_string()).expect("member of the interval")));
        if !module.is_basis_submodule(&prefix) {
            submodule_chain_ok = false;
            characteristics_ok = false;
            continue;
        }
        if before.is_empty() || module.is_basis_submodule(&before) {
            let ch = module.characteristic(&prefix, &before)?;
            if ch != young_quasischur_f(&s.gamma) {
                characteristics_ok = false;
            }
        }
    }
    let quotient_characteristics = strata.iter().map(|s| s.gamma.clone()).collect();
    Ok(FiltrationReport { interval: iv, strata, submodule_chain_ok, characteristics_ok, quotient_characteristics })
}

fn verified(report: FiltrationReport) -> Result<FiltrationReport> {
    if report.is_verified() {
        Ok(report)
    } else {
        Err(Error::Certificate(format!(
            "filtration of [{}, {}] fails: submodules {}, characteristics {}",
            report.interval.lo, report.interval.hi, report.submodule_chain_ok, report.characteristics_ok
        )))
    }
}

/// `[row(𝒯_α), row(𝒯′_α)]_L`, the interval carrying `V_α`.
pub fn interval_v(alpha: &Composition) -> Result<Interval> {
    guard("composition size", alpha.size(), SCAN_LIMIT)?;
    let lo = Perm::from_word(&canonical(Canonical::CalT, alpha).row_word())?;
    let hi = Perm::from_word(&canonical(Canonical::CalTPrime, alpha).row_word())?;
    interval(&lo, &hi)
}

/// `[row(T_α), row(T′_α)]_L`, the interval carrying `X_α`.
pub fn interval_x(alpha: &Composition) -> Result<Interval> {
    guard("composition size", alpha.size(), SCAN_LIMIT)?;
    let lo = Perm::from_word(&canonical(Canonical::SfT, alpha).row_word())?;
    let hi = Perm::from_word(&canonical(Canonical::SfTPrime, alpha).row_word())?;
    interval(&lo, &hi)
}

/// Distinguished filtration of `V_α` by Young quasisymmetric Schur layers.
pub fn filtration_v(alpha: &Composition) -> Result<FiltrationReport> {
    filtration_v_with(alpha, Tiebreak::default())
}

pub fn filtration_v_with(alpha: &Composition, tiebreak: Tiebreak) -> Result<FiltrationReport> {
    verified(build_filtration(interval_v(alpha)?, tiebreak)?)
}

/// Distinguished filtration of `X_α`; `α` must shuffle a partition with ones.
pub fn filtration_x(alpha: &Composition) -> Result<FiltrationReport> {
    require_shuffle(alpha)?;
    let report = verified(build_filtration(interval_x(alpha)?, Tiebreak::default())?)?;
    let expected = canonical(Canonical::SfT, &alpha.reverse());
    if let Some(s) = report.strata.iter().find(|s| s.recording != expected) {
        return Err(Error::Certificate(format!("recording tableau {} differs from {expected}", s.recording)));
    }
    Ok(report)
}

fn require_shuffle(alpha: &Composition) -> Result<()> {
    if alpha.is_shuffle_of_partition_and_ones() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{alpha} is not a shuffle of a partition and ones")))
    }
}

/// `K_α`, computed by scanning the `V_α` interval and by scanning `SIT(α)`;
/// the two must agree.
pub fn k_alpha(alpha: &Composition) -> Result<BTreeSet<Perm>> {
    let target = canonical(Canonical::CalT, &alpha.reverse());
    let by_interval: BTreeSet<Perm> = interval_v(alpha)?
        .elements
        .into_iter()
        .filter(|s| {
            let (p, q) = pq_hat(&s.times_w0());
            &p.shape() == alpha && q == target
        })
        .collect();
    let by_tableaux: BTreeSet<Perm> = enumerate(Family::Sit, alpha)?
        .iter()
        .map(|t| Perm::from_word(&t.row_word()).expect("standard filling"))
        .filter(|s| &pq_hat(&s.times_w0()).0.shape() == alpha)
        .collect();
    if by_interval != by_tableaux {
        return Err(Error::Certificate(format!("the two descriptions of K_{alpha} disagree")));
    }
    Ok(by_interval)
}

/// The module on `K_α` where `π_i` moves `σ` to `s_iσ` only inside `K_α`.
pub fn y_module(alpha: &Composition) -> Result<CombModule> {
    let k: Vec<Perm> = k_alpha(alpha)?.into_iter().collect();
    let m = restricted_module(&k)?;
    if m.full_characteristic() != young_quasischur_f(alpha) {
        return Err(Error::Certificate(format!("ch(Y_{alpha}) is not the Young quasisymmetric Schur function")));
    }
    Ok(m)
}

fn restricted_module(elements: &[Perm]) -> Result<CombModule> {
    let n = elements.first().map_or(0, Perm::n);
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let table = elements
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
    CombModule::from_table(n, elements.iter().map(Perm::to_string).collect(), table)
}

/// Output of the sink-sequence procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqData {
    pub seq1: Vec<Cell>,
    pub seq2: Vec<Cell>,
    /// Cells of the diagram left after removing both sequences.
    pub remainder: Vec<Cell>,
    pub tilde_alpha: Composition,
}

/// Runs the procedure producing `seq₁(α)` and `seq₂(α)`.
pub fn seq12(alpha: &Composition) -> Result<SeqData> {
    require_shuffle(alpha)?;
    let a = alpha.parts();
    let l = a.len();
    if l == 0 {
        return Ok(SeqData { seq1: vec![], seq2: vec![], remainder: vec![], tilde_alpha: Composition::empty() });
    }
    let part = |r: usize| a[r - 1];
    let largest = a.iter().copied().max().expect("nonempty");
    let mut i = (1..=l).find(|&t| part(t) == largest).expect("largest part occurs");
    // built back to front, reversed at the end
    let mut seq1_rev = vec![Cell::new(i, part(i))];
    let mut seq2 = Vec::new();
    loop {
        if part(i) >= 3 {
            match (i + 1..=l).find(|&j| part(j) + 1 >= part(i)) {
                None => break,
                Some(j) => {
                    seq1_rev.push(Cell::new(j, part(j)));
                    i = j;
                }
            }
        } else {
            let j = (i..=l).take_while(|&t| part(t) == part(i)).last().expect("i itself qualifies");
            seq1_rev.extend((i + 1..=j).map(|r| Cell::new(r, part(r))));
            // rows j+1.. of α; zero parts are trailing and dropped
            let mut beta: Vec<usize> = a[j..].to_vec();
            while !beta.is_empty() {
                let len = beta.len();
                let t = (1..=len)
                    .find(|&t| beta[t - 1..].windows(2).all(|w| w[0] >= w[1]))
                    .expect("a single part is a partition");
                seq2.extend((t..=len).rev().map(|s| Cell::new(j + s, beta[s - 1])));
                for b in &mut beta[t - 1..] {
                    *b -= 1;
                }
                while beta.last() == Some(&0) {
                    beta.pop();
                }
            }
            break;
        }
    }
    let seq1: Vec<Cell> = seq1_rev.into_iter().rev().collect();
    let removed: HashSet<Cell> = seq1.iter().chain(&seq2).copied().collect();
    let remainder: Vec<Cell> = alpha.diagram().into_iter().filter(|c| !removed.contains(c)).collect();
    let mut rows = vec![0usize; l];
    for c in &remainder {
        rows[c.row - 1] = rows[c.row - 1].max(c.col);
    }
    let count = rows.iter().take_while(|&&r| r > 0).count();
    let is_diagram = rows[count..].iter().all(|&r| r == 0)
        && remainder.len() == rows.iter().sum::<usize>();
    if !is_diagram {
        return Err(Error::Certificate(format!("removing the sequences from {alpha} leaves no composition diagram")));
    }
    let tilde_alpha = Composition::new(rows[..count].to_vec())?;
    Ok(SeqData { seq1, seq2, remainder, tilde_alpha })
}

/// `τ′_α`: `τ′_α̃` on the remainder, then `n+1−k` on the `k`-th cell of `seq₂ ⧺ seq₁`.
pub fn tau_prime(alpha: &Composition) -> Result<Filling> {
    let data = seq12(alpha)?;
    let n = alpha.size();
    let mut rows: Vec<Vec<usize>> = alpha.parts().iter().map(|&p| vec![0; p]).collect();
    if !data.tilde_alpha.is_empty() {
        let inner = tau_prime(&data.tilde_alpha)?;
        for (r, row) in inner.rows().iter().enumerate() {
            rows[r][..row.len()].copy_from_slice(row);
        }
    }
    for (k, c) in data.seq2.iter().chain(&data.seq1).enumerate() {
        rows[c.row - 1][c.col - 1] = n - k;
    }
    Filling::new(rows)
}

/// Checks `K_α = {row(T) : T ∈ nSYCT(α)} = [row(T_α), row(τ′_α)]_L`.
pub fn k_characterizations(alpha: &Composition) -> Result<()> {
    require_shuffle(alpha)?;
    let k = k_alpha(alpha)?;
    let from_tableaux: BTreeSet<Perm> = enumerate(Family::Nsyct, alpha)?
        .iter()
        .map(|t| Perm::from_word(&t.row_word()).expect("standard filling"))
        .collect();
    let lo = Perm::from_word(&canonical(Canonical::SfT, alpha).row_word())?;
    let hi = Perm::from_word(&tau_prime(alpha)?.row_word())?;
    let from_interval: BTreeSet<Perm> = interval(&lo, &hi)?.elements.into_iter().collect();
    if k != from_tableaux {
        return Err(Error::Certificate(format!("K_{alpha} differs from the SE-decreasing extended tableaux")));
    }
    if k != from_interval {
        return Err(Error::Certificate(format!("K_{alpha} differs from [{lo}, {hi}]")));
    }
    Ok(())
}

/// `ι_α(i, j) = α_1 + … + α_i − j + 1`, the position of a cell in the row word.
pub fn iota(alpha: &Composition, cell: Cell) -> usize {
    alpha.parts()[..cell.row].iter().sum::<usize>() + 1 - cell.col
}

/// Cell pairs `(C₁, C₂)` with `C₁` in a lower row and a larger entry.
pub fn inv_c(t: &Filling) -> BTreeSet<(Cell, Cell)> {
    let cells = t.cells();
    let mut out = BTreeSet::new();
    for &c1 in &cells {
        for &c2 in &cells {
            if c1.row < c2.row && t.get(c1) > t.get(c2) {
                out.insert((c1, c2));
            }
        }
    }
    out
}

/// Position pairs coming from two cells of the same row.
pub fn a_alpha(alpha: &Composition) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (r, &len) in alpha.parts().iter().enumerate() {
        for j in 1..=len {
            for k in 1..j {
                out.insert((iota(alpha, Cell::new(r + 1, j)), iota(alpha, Cell::new(r + 1, k))));
            }
        }
    }
    out
}

/// The maps around `Y_α` with their verified identities.
#[derive(Debug, Clone)]
pub struct SurjectionChain {
    pub gamma: ModuleMap,
    pub eta: ModuleMap,
    pub delta: ModuleMap,
    pub upsilon: ModuleMap,
    /// Present when `α` shuffles a partition with ones.
    pub delta_tilde: Option<ModuleMap>,
    pub upsilon_is_iso: bool,
}

/// Builds `δ: V_α → Y_α`, `Υ: Y_α → Ŝ_{α,C}` and `δ̃: X_α → Y_α` and checks
/// `Υ∘δ = η̃∘Γ` and `δ = δ̃∘Γ`.
pub fn surjection_chain(alpha: &Composition) -> Result<SurjectionChain> {
    guard("composition size", alpha.size(), 7)?;
    let v = module_v(alpha)?;
    let y = y_module(alpha)?;
    let cq = canonical_quotient(alpha)?;
    let gamma = gamma_map(alpha)?;
    let eta = eta_map(alpha)?;

    let mut tableau_of: HashMap<String, String> = HashMap::new();
    let mut word_of: HashMap<String, String> = HashMap::new();
    for t in enumerate(Family::Sit, alpha)? {
        let w = Perm::from_word(&t.row_word())?.to_string();
        tableau_of.insert(w.clone(), t.to_string());
        word_of.insert(t.to_string(), w);
    }
    let to_y = |t: &str| y.index_of(&word_of[t]).map(|_| word_of[t].clone());

    let delta = surjective(ModuleMap::from_labels(&v, &y, to_y)?, "δ")?;
    let upsilon = surjective(
        ModuleMap::from_labels(&y, &cq, |w| cq.index_of(&tableau_of[w]).map(|_| tableau_of[w].clone()))?,
        "Υ",
    )?;
    if delta.then(&upsilon)?.assignment != gamma.then(&eta)?.assignment {
        return Err(Error::Certificate(format!("Υ∘δ differs from η̃∘Γ for {alpha}")));
    }

    let delta_tilde = if alpha.is_shuffle_of_partition_and_ones() {
        let x = module_x(alpha)?;
        let map = surjective(ModuleMap::from_labels(&x, &y, to_y)?, "δ̃")?;
        if gamma.then(&map)?.assignment != delta.assignment {
            return Err(Error::Certificate(format!("δ̃∘Γ differs from δ for {alpha}")));
        }
        Some(map)
    } else {
        None
    };
    let upsilon_is_iso = upsilon.iso_check();
    Ok(SurjectionChain { gamma, eta, delta, upsilon, delta_tilde, upsilon_is_iso })
}

fn surjective(map: ModuleMap, name: &str) -> Result<ModuleMap> {
    if !map.hom_check() {
        return Err(Error::Certificate(format!("{name} is not a module map")));
    }
    if !map.is_surjective() {
        return Err(Error::Certificate(format!("{name} is not surjective")));
    }
    Ok(map)
}

/// One checked fact of the obstruction certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub group: &'static str,
    pub statement: String,
    pub holds: bool,
}

/// All facts of the `X_{(5,2,1)}` certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub interval_size: usize,
    pub facts: Vec<Fact>,
}

impl AppendixReport {
    pub fn all_hold(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "interval_size": self.interval_size,
            "facts": self.facts.iter().map(|f| json!({"group": f.group, "statement": f.statement, "holds": f.holds})).collect::<Vec<_>>(),
        })
    }
}

/// Evaluates every fact of the certificate without failing early.
pub fn appendix_report() -> Result<AppendixReport> {
    let p = |s: &str| Perm::from_digits(s).expect("literal permutation");
    let c = |s: &[usize]| Composition::from_slice(s);
    let alpha = c(&[5, 2, 1]);
    let (lo, hi) = (p("54321768"), p("87641523"));
    let b = interval_module(&lo, &hi)?;
    let mut facts = Vec::new();
    let mut fact = |group: &'static str, statement: String, holds: bool| facts.push(Fact { group, statement, holds });

    // (a) the tableau module is the interval module via row words
    let x = module_x(&alpha)?;
    let theta = ModuleMap::from_labels(&x, &b, |t| {
        let rows = tableau_rows(t);
        Some(Perm::from_word(&Filling::new(rows).ok()?.row_word()).ok()?.to_string())
    });
    let iso = theta.map(|m| m.iso_check()).unwrap_or(false);
    fact("interval", format!("X_{alpha} ≅ B({lo}, {hi}) via T ↦ row(T)"), iso);
    fact("interval", format!("the interval has 64 elements (found {})", b.dim()), b.dim() == 64);

    // (b) the characteristic is the Schur function and the sum of six quasi-Schurs
    let ch = b.full_characteristic();
    let s521 = schur_f(&alpha)?;
    let rearrangements: BTreeSet<Composition> =
        crate::comb_core::compositions(8).into_iter().filter(|a| a.lambda_sort() == alpha).collect();
    let mut qs_sum = QSymElem::zero(8);
    for a in &rearrangements {
        qs_sum = qs_sum.add(&quasischur_f(a))?;
    }
    fact("expansion", "ch = s_(5,2,1)".into(), ch == s521);
    fact(
        "expansion",
        format!("s_(5,2,1) is the sum of the {} quasi-Schur functions of its rearrangements", rearrangements.len()),
        rearrangements.len() == 6 && qs_sum == s521,
    );

    // (c) the top element spans a one-dimensional submodule of type (1,1,2,4)
    let sink = b.index_of(&hi.to_string()).expect("top element");
    let sink_set = BTreeSet::from([sink]);
    fact(
        "sink",
        format!("the sink {hi} spans a submodule of type (1,1,2,4)"),
        b.is_basis_submodule(&sink_set) && b.basis_type(sink) == c(&[1, 1, 2, 4]),
    );

    // (d) coefficients of the quasi-Schur function S_(1,2,5)
    let s125 = quasischur_f(&c(&[1, 2, 5]));
    for (beta, want) in [(&[1, 1, 2, 4][..], 1), (&[2, 2, 4][..], 1), (&[2, 1, 5][..], 0), (&[1, 2, 1, 4][..], 0)] {
        let got = s125.coeff(&c(beta));
        fact("coefficients", format!("[F_{}] S_(1,2,5) = {want} (found {got})", c(beta)), got == want);
    }
    fact("coefficients", "[F_(1,1,2,4)] s_(5,2,1) = 1".into(), s521.coeff(&c(&[1, 1, 2, 4])) == 1);
    fact("coefficients", format!("dim of an S_(1,2,5) layer is 16 (found {})", s125.total()), s125.total() == 16);

    // (e) the orbit of the parabolic longest element
    let w = w0_parabolic(&BTreeSet::from([1, 3, 5, 6, 7]), 8)?;
    let allowed: BTreeSet<Option<String>> =
        [None, Some("87421635".to_string()), Some("87621435".to_string())].into_iter().collect();
    let other_word = alternative_reduced_word(&w);
    let mut orbit_ok = true;
    let mut words_agree = true;
    for g in 0..b.dim() {
        let image = b.apply_perm(&w, g);
        orbit_ok &= allowed.contains(&image.map(|t| b.label(t).to_string()));
        words_agree &= b.apply_word(&other_word, g) == image;
    }
    fact("orbit", format!("π_{w} sends every basis element to 0, 87421635 or 87621435"), orbit_ok);
    fact("orbit", "two reduced words of w0({1,3,5,6,7}) act identically".into(), words_agree);
    let idx = |s: &str| b.index_of(s).expect("interval element");
    let (u, v) = (idx("87421635"), idx("87621435"));
    fact(
        "orbit",
        "π_2 sends 87421635, 87621435 to 87431625, 87631425".into(),
        b.apply(2, Some(u)) == Some(idx("87431625")) && b.apply(2, Some(v)) == Some(idx("87631425")),
    );
    fact(
        "orbit",
        "π_3 fixes 87431625 and kills 87631425".into(),
        b.apply(3, Some(idx("87431625"))) == Some(idx("87431625")) && b.apply(3, Some(idx("87631425"))).is_none(),
    );

    // (f) the upper intervals L and L′
    for (bottom, beta) in [("87621534", &[2, 1, 5][..]), ("87631425", &[1, 2, 1, 4][..])] {
        let lower = p(bottom);
        let upper = interval(&lower, &hi)?;
        let set: BTreeSet<usize> = upper.elements.iter().map(|g| idx(&g.to_string())).collect();
        let sub = b.is_basis_submodule(&set);
        let coeff = interval_module(&lower, &hi)?.full_characteristic().coeff(&c(beta));
        fact(
            "upper intervals",
            format!("B({bottom}, {hi}) is a submodule with [F_{}] ch = 1 (found {coeff})", c(beta)),
            sub && coeff == 1,
        );
    }
    Ok(AppendixReport { interval_size: b.dim(), facts })
}

/// Like [`appendix_report`], failing on the first false fact.
pub fn verify_appendix() -> Result<AppendixReport> {
    let report = appendix_report()?;
    if let Some(f) = report.facts.iter().find(|f| !f.holds) {
        return Err(Error::Certificate(format!("{}: {}", f.group, f.statement)));
    }
    Ok(report)
}

fn tableau_rows(label: &str) -> Vec<Vec<usize>> {
    label
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split("][")
        .map(|r| r.split(',').map(|x| x.parse().expect("tableau label")).collect())
        .collect()
}

/// A reduced word of `w` built from the largest left descent instead of the smallest.
fn alternative_reduced_word(w: &Perm) -> Vec<usize> {
    let mut word = Vec::new();
    let mut g = w.clone();
    while let Some(i) = (1..g.n()).rev().find(|&i| g.has_left_descent(i)) {
        word.push(i);
        g = g.left_mul_s(i);
    }
    word
}

/// Checks `Σ_k Ŝ_{γ_k}` against the module's own symmetric function.
pub fn layer_sum_matches(report: &FiltrationReport, whole: &QSymElem) -> Result<bool> {
    let mut sum = QSymElem::zero(whole.degree());
    for g in &report.quotient_characteristics {
        sum = sum.add(&young_quasischur_f(g))?;
    }
    Ok(&sum == whole)
}

/// `Σ_k Ŝ_{γ_k} = 𝔖*_α` for the `V_α` filtration.
pub fn v_layers_sum(alpha: &Composition) -> Result<bool> {
    layer_sum_matches(&filtration_v(alpha)?, &dual_immaculate_f(alpha))
}

/// `Σ_k Ŝ_{γ_k} = 𝓔_α` for the `X_α` filtration.
pub fn x_layers_sum(alpha: &Composition) -> Result<bool> {
    layer_sum_matches(&filtration_x(alpha)?, &extended_schur_f(alpha))
}

/// Whether every SIT with insertion shape `α` is SE-decreasing.
pub fn top_tableaux_se_decreasing(alpha: &Composition) -> Result<bool> {
    Ok(enumerate(Family::Sit, alpha)?.iter().all(|t| {
        let sigma = Perm::from_word(&t.row_word()).expect("standard").times_w0();
        &pq_hat(&sigma).0.shape() != alpha || is_se_decreasing(t)
    }))
}
