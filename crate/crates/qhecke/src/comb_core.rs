//! Compositions, cells and diagrams, and the orders used throughout the crate.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite ordered list of positive integers.
///
/// Serializes as a JSON array. The derived `Ord` is lexicographic order on
/// the parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    /// Panicking constructor for literals known to be valid.
    pub fn from_slice(parts: &[usize]) -> Self {
        Composition::new(parts.to_vec()).expect("positive parts")
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Partial sums `α₁, α₁+α₂, …` excluding the total.
    pub fn set_of(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// Inverse of [`Composition::set_of`] for compositions of `n`.
    pub fn comp_of(set: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return if set.is_empty() {
                Ok(Composition::empty())
            } else {
                Err(Error::Domain("nonempty set for n = 0".into()))
            };
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &x in set {
            if x == 0 || x >= n {
                return Err(Error::Domain(format!("{x} is outside [1, {}]", n - 1)));
            }
            parts.push(x - prev);
            prev = x;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    pub fn reverse(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The composition whose set is the complement of `set_of(self)` in `[n−1]`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        if n == 0 {
            return Composition::empty();
        }
        let set = self.set_of();
        let comp: BTreeSet<usize> = (1..n).filter(|i| !set.contains(i)).collect();
        Composition::comp_of(&comp, n).expect("complement lies in [n-1]")
    }

    /// Parts sorted into weakly decreasing order.
    pub fn lambda_sort(&self) -> Self {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// True iff the parts that are at least 2 form a weakly decreasing sequence.
    pub fn is_shuffle_of_partition_and_ones(&self) -> bool {
        let big: Vec<usize> = self.0.iter().copied().filter(|&p| p >= 2).collect();
        big.windows(2).all(|w| w[0] >= w[1])
    }

    /// True iff for all `i < j` with `α_i ≥ α_j ≥ 2` some `i < k < j` has `α_k = α_j − 1`.
    pub fn is_simple(&self) -> bool {
        let a = &self.0;
        (0..a.len()).all(|i| {
            (i + 1..a.len()).all(|j| {
                !(a[i] >= a[j] && a[j] >= 2) || (i + 1..j).any(|k| a[k] + 1 == a[j])
            })
        })
    }

    /// Cells of the left-justified diagram, row by row from the bottom.
    pub fn diagram(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
            .collect()
    }

    /// Dot-joined form used as a JSON object key, e.g. `2.1.3`.
    pub fn dot_key(&self) -> String {
        join(&self.0, ".")
    }

    pub fn from_dot_key(key: &str) -> Result<Self> {
        parse_list(key, '.')
    }
}

fn join(parts: &[usize], sep: &str) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(sep)
}

fn parse_list(s: &str, sep: char) -> Result<Composition> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = s
        .split(sep)
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad composition part `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts).map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for Composition {
    type Err = Error;
    /// Parses a comma-separated literal such as `2,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        parse_list(s, ',')
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0, ","))
    }
}

/// A cell `(row, col)`, rows counted from the bottom, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Lexicographic comparison of part sequences.
pub fn cmp_lex(a: &Composition, b: &Composition) -> Ordering {
    a.0.cmp(&b.0)
}

/// Strict dominance `λ ◁ μ` on partitions of equal size.
pub fn dominance_lt(lambda: &Composition, mu: &Composition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::Domain(format!("dominance between {lambda} and {mu} of unequal size")));
    }
    if lambda == mu {
        return Ok(false);
    }
    let (mut s, mut t) = (0, 0);
    for i in 0..lambda.len().max(mu.len()) {
        s += lambda.0.get(i).copied().unwrap_or(0);
        t += mu.0.get(i).copied().unwrap_or(0);
        if s > t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The total order on finite sets: cardinality first, then lexicographic on
/// the increasing element lists.
pub fn cmp_set(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter()))
}

/// All compositions of `n` in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions(n: usize) -> Vec<Composition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All subsets of `[1, m]`.
pub fn subsets(m: usize) -> Vec<BTreeSet<usize>> {
    (0u32..(1 << m))
        .map(|mask| (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}
