//! Permutations in one-line notation, the left weak order and Knuth moves.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::comb_core::Composition;
use crate::error::{guard, Error, Result};

/// Largest `n` for which Knuth classes are enumerated.
pub const KNUTH_CLASS_LIMIT: usize = 10;

/// A permutation of `[n]` in one-line notation.
///
/// Words of distinct letters become permutations only through
/// [`Perm::from_word`]; the one-line form is read back with [`Perm::word`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Perm::from_word(&word)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl Perm {
    /// Reads a word as a permutation; it must be a rearrangement of `1..=n`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Domain(format!("{word:?} is not a permutation of [{n}]")));
            }
            seen[x] = true;
        }
        Ok(Perm(word.to_vec()))
    }

    /// Parses a digit string such as `615243` (only meaningful for `n ≤ 9`).
    pub fn from_digits(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad permutation digit `{ch}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_word(&word).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `σ(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Position of value `v`, 1-based.
    pub fn position(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm(inv)
    }

    /// The composite `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.n(), other.n(), "compose: size mismatch");
        Perm(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    /// Left multiplication by the simple transposition `s_i`: swaps the values `i` and `i+1`.
    pub fn left_mul_s(&self, i: usize) -> Self {
        Perm(
            self.0
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect(),
        )
    }

    /// Right multiplication by `w₀`: the reversed word.
    pub fn times_w0(&self) -> Self {
        Perm(self.0.iter().rev().copied().collect())
    }

    /// Pairs of positions `(i, j)`, `i < j`, with `σ(i) > σ(j)`.
    pub fn inv_l(&self) -> BTreeSet<(usize, usize)> {
        let w = &self.0;
        let mut out = BTreeSet::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.insert((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `{i : i appears to the right of i+1}`.
    pub fn des_l(&self) -> BTreeSet<usize> {
        let pos = self.inverse();
        (1..self.n()).filter(|&i| pos.at(i) > pos.at(i + 1)).collect()
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position(i) > self.position(i + 1)
    }

    /// A reduced word `i₁…i_k` with `σ = s_{i₁} ⋯ s_{i_k}`, built by peeling
    /// the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut g = self.clone();
        while let Some(i) = (1..g.n()).find(|&i| g.has_left_descent(i)) {
            word.push(i);
            g = g.left_mul_s(i);
        }
        word
    }
}

impl FromStr for Perm {
    type Err = Error;
    /// Accepts `615243` or a comma-separated list `6,1,5,2,4,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            let word = s
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Perm::from_word(&word).map_err(|e| Error::Parse(e.to_string()))
        } else {
            Perm::from_digits(s)
        }
    }
}

impl fmt::Display for Perm {
    /// Digit string for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Perm(cur.clone())];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Perm(cur.clone()));
    }
}

/// `σ ⪯_L ρ` iff the inversion set of `σ` is contained in that of `ρ`.
pub fn leq_l(sigma: &Perm, rho: &Perm) -> Result<bool> {
    if sigma.n() != rho.n() {
        return Err(Error::Domain(format!("{sigma} and {rho} have different sizes")));
    }
    let (s, r) = (&sigma.0, &rho.0);
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] && r[i] < r[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A closed interval of the left weak order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Perm,
    pub hi: Perm,
    /// Elements in BFS order from `lo` (nondecreasing length).
    pub elements: Vec<Perm>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }
}

/// Enumerates `[lo, hi]_L` by upward BFS from `lo`.
pub fn interval(lo: &Perm, hi: &Perm) -> Result<Interval> {
    if !leq_l(lo, hi)? {
        return Err(Error::Domain(format!("empty interval: {lo} is not below {hi}")));
    }
    let mut seen: HashSet<Perm> = HashSet::from([lo.clone()]);
    let mut elements = vec![lo.clone()];
    let mut queue = VecDeque::from([lo.clone()]);
    while let Some(g) = queue.pop_front() {
        for i in 1..g.n() {
            if g.has_left_descent(i) {
                continue;
            }
            let up = g.left_mul_s(i);
            if !seen.contains(&up) && leq_l(&up, hi)? {
                seen.insert(up.clone());
                elements.push(up.clone());
                queue.push_back(up);
            }
        }
    }
    Ok(Interval { lo: lo.clone(), hi: hi.clone(), elements })
}

/// The longest element `n n−1 … 1`.
pub fn w0(n: usize) -> Perm {
    Perm((1..=n).rev().collect())
}

/// Longest element of the parabolic subgroup generated by `{s_i : i ∈ I}`.
///
/// Its blocks are the maximal runs of positions joined by generators in `I`;
/// the permutation reverses each block.
pub fn w0_parabolic(set: &BTreeSet<usize>, n: usize) -> Result<Perm> {
    if let Some(&x) = set.iter().find(|&&x| x == 0 || x >= n) {
        return Err(Error::Domain(format!("generator {x} is outside [1, {}]", n.saturating_sub(1))));
    }
    let mut word = Vec::with_capacity(n);
    let mut start = 1;
    for end in 1..=n {
        if end == n || !set.contains(&end) {
            word.extend((start..=end).rev());
            start = end + 1;
        }
    }
    Ok(Perm(word))
}

/// `w₀(set(α))`.
pub fn w0_alpha(alpha: &Composition) -> Perm {
    w0_parabolic(&alpha.set_of(), alpha.size()).expect("set(α) lies in [n-1]")
}

/// `w₀ σ w₀`.
pub fn conj_w0(sigma: &Perm) -> Perm {
    let n = sigma.n();
    Perm(sigma.0.iter().rev().map(|&v| n + 1 - v).collect())
}

/// Words reachable by one elementary Knuth move.
///
/// Adjacent letters `x, z` may be swapped when a letter strictly between them
/// sits immediately to the left or immediately to the right of the pair.
pub fn knuth_neighbors(sigma: &Perm) -> BTreeSet<Perm> {
    let w = &sigma.0;
    let mut out = BTreeSet::new();
    for p in 0..w.len().saturating_sub(1) {
        let (lo, hi) = (w[p].min(w[p + 1]), w[p].max(w[p + 1]));
        let between = |y: usize| lo < y && y < hi;
        let left = p > 0 && between(w[p - 1]);
        let right = p + 2 < w.len() && between(w[p + 2]);
        if left || right {
            let mut v = w.clone();
            v.swap(p, p + 1);
            out.insert(Perm(v));
        }
    }
    out
}

/// Closure of `σ` under Knuth moves.
pub fn knuth_class(sigma: &Perm) -> Result<BTreeSet<Perm>> {
    guard("permutation size", sigma.n(), KNUTH_CLASS_LIMIT)?;
    let mut seen = BTreeSet::from([sigma.clone()]);
    let mut stack = vec![sigma.clone()];
    while let Some(p) = stack.pop() {
        for q in knuth_neighbors(&p) {
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    Ok(seen)
}

/// `{ρ : ρ⁻¹ ∼_K σ⁻¹}`.
pub fn dual_knuth_class(sigma: &Perm) -> Result<BTreeSet<Perm>> {
    Ok(knuth_class(&sigma.inverse())?.iter().map(Perm::inverse).collect())
}
