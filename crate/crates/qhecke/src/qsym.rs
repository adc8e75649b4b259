//! Homogeneous quasisymmetric functions in the fundamental basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::comb_core::{compositions, Composition};
use crate::error::{guard, Error, Result};
use crate::permutation::Perm;
use crate::tableaux::{des_hat_s, des_s, des_syt, enumerate, Family};

/// Largest degree accepted by [`expand_in`].
pub const EXPANSION_LIMIT: usize = 9;

/// A degree-`n` element `Σ c_α F_α` with integer coefficients.
///
/// Serializes as `{"degree": n, "coeffs": {"2.1.3": 1, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSymElem {
    degree: usize,
    coeffs: BTreeMap<Composition, i64>,
}

#[derive(Serialize, Deserialize)]
struct QSymRepr {
    degree: usize,
    coeffs: BTreeMap<String, i64>,
}

impl Serialize for QSymElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QSymRepr {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(a, &c)| (a.dot_key(), c)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSymElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = QSymRepr::deserialize(d)?;
        let mut x = QSymElem::zero(repr.degree);
        for (key, c) in repr.coeffs {
            let alpha = Composition::from_dot_key(&key).map_err(serde::de::Error::custom)?;
            if alpha.size() != repr.degree {
                return Err(serde::de::Error::custom(format!("{alpha} is not a composition of {}", repr.degree)));
            }
            x.add_term(alpha, c);
        }
        Ok(x)
    }
}

impl QSymElem {
    pub fn zero(degree: usize) -> Self {
        QSymElem { degree, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Composition, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        self.coeffs.get(alpha).copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the number of terms counted with multiplicity
    /// for F-positive elements).
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    /// Adds `c F_α`; `α` must be a composition of the degree.
    pub fn add_term(&mut self, alpha: Composition, c: i64) {
        debug_assert_eq!(alpha.size(), self.degree);
        if c == 0 {
            return;
        }
        match self.coeffs.entry(alpha) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &QSymElem) -> Result<QSymElem> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &QSymElem) -> Result<QSymElem> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &QSymElem, sign: i64) -> Result<QSymElem> {
        if self.degree != other.degree {
            return Err(Error::Domain(format!("degrees {} and {} differ", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (a, &c) in &other.coeffs {
            out.add_term(a.clone(), sign * c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> QSymElem {
        let mut out = QSymElem::zero(self.degree);
        for (a, &c) in &self.coeffs {
            out.add_term(a.clone(), k * c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("elements serialize")
    }
}

impl fmt::Display for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(a, &c)| if c == 1 { format!("F{a}") } else { format!("{c}·F{a}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// The fundamental basis element `F_α`.
pub fn f_elem(alpha: &Composition) -> QSymElem {
    let mut x = QSymElem::zero(alpha.size());
    x.add_term(alpha.clone(), 1);
    x
}

/// The automorphism `F_α ↦ F_{α^r}`.
pub fn rho(x: &QSymElem) -> QSymElem {
    let mut out = QSymElem::zero(x.degree);
    for (a, &c) in &x.coeffs {
        out.add_term(a.reverse(), c);
    }
    out
}

/// Sum of `F_{comp(D)}` over descent sets `D` in degree `n`.
fn from_descents<I: IntoIterator<Item = std::collections::BTreeSet<usize>>>(n: usize, sets: I) -> QSymElem {
    let mut x = QSymElem::zero(n);
    for d in sets {
        x.add_term(Composition::comp_of(&d, n).expect("descents lie in [n-1]"), 1);
    }
    x
}

/// `Σ F_{comp(Des_L(row T))^c}` over a tableau family of shape `α`.
fn row_word_sum(family: Family, alpha: &Composition) -> QSymElem {
    let n = alpha.size();
    let mut x = QSymElem::zero(n);
    for t in enumerate(family, alpha).expect("size within the enumeration limit") {
        let des = Perm::from_word(&t.row_word()).expect("standard filling").des_l();
        x.add_term(Composition::comp_of(&des, n).expect("descents").complement(), 1);
    }
    x
}

/// Named bases of the degree-`n` component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Schur functions (partition indices only).
    Schur,
    /// Quasisymmetric Schur functions.
    QuasiSchur,
    /// Young quasisymmetric Schur functions.
    YoungQuasiSchur,
    /// Dual immaculate functions.
    DualImmaculate,
    /// Extended Schur functions.
    ExtendedSchur,
}

type Cache = RwLock<HashMap<(Basis, Composition), Arc<QSymElem>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The basis element indexed by `α`, memoized.
pub fn basis_elem(basis: Basis, alpha: &Composition) -> Arc<QSymElem> {
    let key = (basis, alpha.clone());
    if let Some(x) = cache().read().expect("cache lock").get(&key) {
        return Arc::clone(x);
    }
    let n = alpha.size();
    let x = match basis {
        Basis::Schur => from_descents(n, enumerate(Family::Syt, alpha).expect("size guard").iter().map(des_syt)),
        Basis::QuasiSchur => {
            from_descents(n, enumerate(Family::Sct, &alpha.reverse()).expect("size guard").iter().map(des_s))
        }
        Basis::YoungQuasiSchur => {
            from_descents(n, enumerate(Family::Syct, alpha).expect("size guard").iter().map(des_hat_s))
        }
        Basis::DualImmaculate => row_word_sum(Family::Sit, alpha),
        Basis::ExtendedSchur => row_word_sum(Family::Set, alpha),
    };
    let x = Arc::new(x);
    cache().write().expect("cache lock").entry(key).or_insert_with(|| Arc::clone(&x));
    x
}

pub fn schur_f(lambda: &Composition) -> Result<QSymElem> {
    if !lambda.is_partition() {
        return Err(Error::Domain(format!("{lambda} is not a partition")));
    }
    Ok((*basis_elem(Basis::Schur, lambda)).clone())
}

pub fn quasischur_f(alpha: &Composition) -> QSymElem {
    (*basis_elem(Basis::QuasiSchur, alpha)).clone()
}

pub fn young_quasischur_f(alpha: &Composition) -> QSymElem {
    (*basis_elem(Basis::YoungQuasiSchur, alpha)).clone()
}

pub fn dual_immaculate_f(alpha: &Composition) -> QSymElem {
    (*basis_elem(Basis::DualImmaculate, alpha)).clone()
}

pub fn extended_schur_f(alpha: &Composition) -> QSymElem {
    (*basis_elem(Basis::ExtendedSchur, alpha)).clone()
}

/// How an expansion was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveMethod {
    /// Peeling leading terms in the fixed triangular order.
    Triangular,
    /// Exact rational Gaussian elimination.
    General,
}

/// Coefficients of an element in one of the quasi-Schur bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub coeffs: BTreeMap<Composition, i64>,
    pub positive: bool,
    pub method: SolveMethod,
}

/// The order in which basis changes are peeled: compositions sorted by
/// `λ(α)` from most to least dominant (lexicographically decreasing), ties
/// broken by `α` lexicographically increasing.
pub fn triangular_order(n: usize) -> Vec<Composition> {
    let mut all = compositions(n);
    all.sort_by(|a, b| b.lambda_sort().cmp(&a.lambda_sort()).then_with(|| a.cmp(b)));
    all
}

/// Whether `basis` is unitriangular against `F` in [`triangular_order`]:
/// each `B_α` has coefficient 1 on `F_α` and no terms earlier than `α`.
pub fn is_unitriangular(basis: Basis, n: usize) -> bool {
    let order = triangular_order(n);
    let rank: HashMap<&Composition, usize> = order.iter().enumerate().map(|(i, a)| (a, i)).collect();
    order.iter().all(|alpha| {
        let b = basis_elem(basis, alpha);
        b.coeff(alpha) == 1 && b.terms().keys().all(|beta| rank[beta] >= rank[alpha])
    })
}

/// Solves `x = Σ c_α B_α` over the integers for `B` a quasi-Schur basis.
pub fn expand_in(x: &QSymElem, basis: Basis) -> Result<Expansion> {
    if !matches!(basis, Basis::QuasiSchur | Basis::YoungQuasiSchur) {
        return Err(Error::Domain("expansions are supported in the quasi-Schur bases".into()));
    }
    let n = x.degree();
    guard("degree", n, EXPANSION_LIMIT)?;
    let (coeffs, method) = if is_unitriangular(basis, n) {
        (peel(x, basis), SolveMethod::Triangular)
    } else {
        (gaussian(x, basis)?, SolveMethod::General)
    };
    let positive = coeffs.values().all(|&c| c > 0);
    Ok(Expansion { coeffs, positive, method })
}

fn peel(x: &QSymElem, basis: Basis) -> BTreeMap<Composition, i64> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    for alpha in triangular_order(x.degree()) {
        let c = rest.coeff(&alpha);
        if c != 0 {
            rest = rest.sub(&basis_elem(basis, &alpha).scale(c)).expect("same degree");
            out.insert(alpha, c);
        }
    }
    debug_assert!(rest.is_zero());
    out
}

fn gaussian(x: &QSymElem, basis: Basis) -> Result<BTreeMap<Composition, i64>> {
    let comps = compositions(x.degree());
    let m = comps.len();
    let idx: HashMap<&Composition, usize> = comps.iter().enumerate().map(|(i, a)| (a, i)).collect();
    // columns: basis elements; rows: F-coefficients; last column: x
    let mut a = vec![vec![BigRational::zero(); m + 1]; m];
    for (j, alpha) in comps.iter().enumerate() {
        for (beta, &c) in basis_elem(basis, alpha).terms() {
            a[idx[beta]][j] = BigRational::from_integer(BigInt::from(c));
        }
    }
    for (beta, &c) in x.terms() {
        a[idx[beta]][m] = BigRational::from_integer(BigInt::from(c));
    }
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Certificate(format!("basis matrix is singular in degree {}", x.degree())))?;
        a.swap(col, pivot);
        let inv = BigRational::one() / a[col][col].clone();
        for k in col..=m {
            a[col][k] = a[col][k].clone() * inv.clone();
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in col..=m {
                    let v = a[col][k].clone() * f.clone();
                    a[r][k] = a[r][k].clone() - v;
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for (j, alpha) in comps.iter().enumerate() {
        let v = &a[j][m];
        if !v.is_integer() {
            return Err(Error::Domain(format!("coefficient of {alpha} is not an integer")));
        }
        let c = v.to_integer();
        if !c.is_zero() {
            let c = c.to_i64().ok_or_else(|| Error::Domain(format!("coefficient of {alpha} overflows")))?;
            out.insert(alpha.clone(), c);
        }
    }
    Ok(out)
}

/// Gaussian elimination result, exposed for cross-checking the triangular solve.
pub fn expand_in_general(x: &QSymElem, basis: Basis) -> Result<BTreeMap<Composition, i64>> {
    guard("degree", x.degree(), EXPANSION_LIMIT)?;
    gaussian(x, basis)
}
