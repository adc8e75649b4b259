//! k-increasing subsequences, initial-entry sets and the shape predictor for `P̂`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::comb_core::{cmp_set, Composition};
use crate::error::{guard, Error, Result};
use crate::insertion::rsk;
use crate::permutation::{knuth_class, Perm};

/// Longest word accepted by [`inc_k_tuples`].
pub const INC_TUPLE_LIMIT: usize = 10;
/// Largest `n` accepted by [`knuth_invariance_check`].
pub const KNUTH_CHECK_LIMIT: usize = 7;

/// `k`-tuple of disjoint increasing subsequences, stored as 1-based position lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IncTuple {
    pub parts: Vec<Vec<usize>>,
}

impl IncTuple {
    /// The letters of each part.
    pub fn letters(&self, w: &[usize]) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.iter().map(|&i| w[i - 1]).collect()).collect()
    }

    pub fn total_len(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }
}

/// `i_k(w)`: the largest total length of `k` disjoint strictly increasing subsequences.
pub fn longest_k_increasing(w: &[usize], k: usize) -> usize {
    if k == 0 {
        return 0;
    }
    // state: sorted last letters of the k chains, 0 for an empty chain
    let mut memo: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    fn best(i: usize, lasts: Vec<usize>, w: &[usize], memo: &mut HashMap<(usize, Vec<usize>), usize>) -> usize {
        if i == w.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(i, lasts.clone())) {
            return v;
        }
        let x = w[i];
        let mut top = best(i + 1, lasts.clone(), w, memo);
        let mut tried = BTreeSet::new();
        for j in 0..lasts.len() {
            if lasts[j] < x && tried.insert(lasts[j]) {
                let mut next = lasts.clone();
                next[j] = x;
                next.sort_unstable();
                top = top.max(1 + best(i + 1, next, w, memo));
            }
        }
        memo.insert((i, lasts), top);
        top
    }
    best(0, vec![0; k], w, &mut memo)
}

/// `i_k(w)` as the longest subsequence with no weakly decreasing subsequence
/// of length `k+1` (exhaustive over subsequences; for short words).
pub fn longest_k_increasing_by_antichains(w: &[usize], k: usize) -> usize {
    let n = w.len();
    (0u32..(1 << n))
        .filter(|&mask| {
            let sub: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| w[i]).collect();
            longest_weakly_decreasing(&sub) <= k
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn longest_weakly_decreasing(w: &[usize]) -> usize {
    let mut best = vec![1; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] >= w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn require_distinct(w: &[usize]) -> Result<()> {
    let set: BTreeSet<usize> = w.iter().copied().collect();
    if set.len() != w.len() {
        return Err(Error::Precondition("word letters must be distinct".into()));
    }
    Ok(())
}

/// All members of `Inc_k(w)`; tuples differing by the order of their parts are distinct.
pub fn inc_k_tuples(w: &[usize], k: usize) -> Result<Vec<IncTuple>> {
    guard("word length", w.len(), INC_TUPLE_LIMIT)?;
    require_distinct(w)?;
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    let target = longest_k_increasing(w, k);
    let mut out = Vec::new();
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); k];
    fn rec(i: usize, used: usize, target: usize, w: &[usize], parts: &mut Vec<Vec<usize>>, out: &mut Vec<IncTuple>) {
        if used + (w.len() - i) < target {
            return;
        }
        if i == w.len() {
            out.push(IncTuple { parts: parts.clone() });
            return;
        }
        rec(i + 1, used, target, w, parts, out);
        for j in 0..parts.len() {
            if parts[j].last().is_none_or(|&p| w[p - 1] < w[i]) {
                parts[j].push(i + 1);
                rec(i + 1, used + 1, target, w, parts, out);
                parts[j].pop();
            }
        }
    }
    rec(0, 0, target, w, &mut parts, &mut out);
    Ok(out)
}

/// First letters of the nonempty parts.
pub fn ies(u: &IncTuple, w: &[usize]) -> BTreeSet<usize> {
    u.parts.iter().filter_map(|p| p.first().map(|&i| w[i - 1])).collect()
}

/// `mIES_k(w)`: the largest initial-entry set over `Inc_k(w)`.
///
/// Candidate `k`-sets of letters are tried from the largest down; a set is
/// accepted when `k` disjoint increasing subsequences starting exactly at its
/// letters reach total length `i_k(w)`.
pub fn mies(w: &[usize], k: usize) -> Result<BTreeSet<usize>> {
    require_distinct(w)?;
    if k == 0 {
        return Ok(BTreeSet::new());
    }
    if k > w.len() {
        return Err(Error::Domain(format!("k = {k} exceeds the word length {}", w.len())));
    }
    let target = longest_k_increasing(w, k);
    let mut letters: Vec<usize> = w.to_vec();
    letters.sort_unstable();
    let mut candidates = k_subsets(&letters, k);
    candidates.sort_by(|a, b| cmp_set(b, a));
    for s in candidates {
        if rooted_cover(w, &s) == target {
            return Ok(s);
        }
    }
    Err(Error::Certificate(format!("no initial-entry set of size {k} reaches i_k")))
}

fn k_subsets(items: &[usize], k: usize) -> Vec<BTreeSet<usize>> {
    fn rec(start: usize, k: usize, items: &[usize], cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(i + 1, k, items, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, items, &mut Vec::new(), &mut out);
    out
}

/// Largest total length of disjoint increasing subsequences whose first
/// letters are exactly `starts`.
fn rooted_cover(w: &[usize], starts: &BTreeSet<usize>) -> usize {
    let mut memo: HashMap<(usize, Vec<usize>), Option<usize>> = HashMap::new();
    fn best(
        i: usize,
        lasts: Vec<usize>,
        w: &[usize],
        starts: &BTreeSet<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), Option<usize>>,
    ) -> Option<usize> {
        if i == w.len() {
            return (lasts.len() == starts.len()).then_some(0);
        }
        if let Some(&v) = memo.get(&(i, lasts.clone())) {
            return v;
        }
        let x = w[i];
        let v = if starts.contains(&x) {
            let mut next = lasts.clone();
            next.push(x);
            next.sort_unstable();
            best(i + 1, next, w, starts, memo).map(|v| v + 1)
        } else {
            let mut top = best(i + 1, lasts.clone(), w, starts, memo);
            let mut tried = BTreeSet::new();
            for j in 0..lasts.len() {
                if lasts[j] < x && tried.insert(lasts[j]) {
                    let mut next = lasts.clone();
                    next[j] = x;
                    next.sort_unstable();
                    if let Some(v) = best(i + 1, next, w, starts, memo) {
                        top = Some(top.map_or(v + 1, |t| t.max(v + 1)));
                    }
                }
            }
            top
        };
        memo.insert((i, lasts), v);
        v
    }
    best(0, Vec::new(), w, starts, &mut memo).unwrap_or(0)
}

/// `mIES_k` by exhaustive enumeration of `Inc_k(w)`.
pub fn mies_exhaustive(w: &[usize], k: usize) -> Result<BTreeSet<usize>> {
    if k == 0 {
        return Ok(BTreeSet::new());
    }
    let tuples = inc_k_tuples(w, k)?;
    Ok(tuples.iter().map(|u| ies(u, w)).max_by(cmp_set).unwrap_or_default())
}

/// The predicted shape of `P̂(σ)` and the chain `mIES_0 ⊊ … ⊊ mIES_l` it is read from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapePrediction {
    pub lambda: Composition,
    pub chain: Vec<BTreeSet<usize>>,
    pub shape: Composition,
}

pub fn predict_shape_detailed(w: &[usize]) -> Result<ShapePrediction> {
    require_distinct(w)?;
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let std: Vec<usize> = w.iter().map(|x| sorted.binary_search(x).expect("letter") + 1).collect();
    let lambda = rsk(&Perm::from_word(&std)?).0.shape();
    let l = lambda.len();
    let chain = (0..=l).map(|k| mies(w, k)).collect::<Result<Vec<_>>>()?;
    for k in 1..=l {
        if chain[k].len() != k || !chain[k - 1].is_subset(&chain[k]) {
            return Err(Error::Certificate(format!(
                "mIES chain is not strictly nested at k = {k}: {:?} vs {:?}",
                chain[k - 1],
                chain[k]
            )));
        }
    }
    let parts = chain[l]
        .iter()
        .map(|x| {
            let t = (1..=l).find(|&t| chain[t].contains(x)).expect("x lies in the last set");
            lambda.part(t)
        })
        .collect();
    let shape = Composition::new(parts)?;
    Ok(ShapePrediction { lambda, chain, shape })
}

/// The composition `α` with `α_k = λ_{i_k}` read from the mIES chain.
pub fn predict_shape(w: &[usize]) -> Result<Composition> {
    Ok(predict_shape_detailed(w)?.shape)
}

/// Whether `mIES_k` is constant on the Knuth class of `σ`.
pub fn knuth_invariance_check(sigma: &Perm, k: usize) -> Result<bool> {
    guard("permutation size", sigma.n(), KNUTH_CHECK_LIMIT)?;
    let base = mies(sigma.word(), k)?;
    for rho in knuth_class(sigma)? {
        if mies(rho.word(), k)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &[usize]) -> BTreeSet<usize> {
        x.iter().copied().collect()
    }

    #[test]
    fn i_k_examples() {
        let w = [9, 4, 3, 1, 5, 6, 8, 2, 7];
        assert_eq!(longest_k_increasing(&w, 2), 7);
        assert_eq!(longest_k_increasing_by_antichains(&w, 2), 7);
        assert_eq!(longest_k_increasing(&[1, 2, 3, 4], 1), 4);
    }

    #[test]
    fn inc_tuples_637() {
        let w = [6, 3, 7];
        let letters: BTreeSet<Vec<Vec<usize>>> =
            inc_k_tuples(&w, 2).unwrap().iter().map(|u| u.letters(&w)).collect();
        let expected: BTreeSet<Vec<Vec<usize>>> = [
            vec![vec![6, 7], vec![3]],
            vec![vec![3], vec![6, 7]],
            vec![vec![3, 7], vec![6]],
            vec![vec![6], vec![3, 7]],
        ]
        .into_iter()
        .collect();
        assert_eq!(letters, expected);
        let three: Vec<Vec<Vec<usize>>> = inc_k_tuples(&w, 3).unwrap().iter().map(|u| u.letters(&w)).collect();
        assert!(three.contains(&vec![vec![7], vec![6], vec![3]]));
    }

    #[test]
    fn mies_examples() {
        let w = [6, 3, 7];
        assert_eq!(mies(&w, 1).unwrap(), s(&[6]));
        assert_eq!(mies(&w, 2).unwrap(), s(&[3, 6]));
        assert_eq!(mies(&w, 3).unwrap(), s(&[3, 6, 7]));
        let w = [5, 2, 7, 8, 3, 1, 4, 6];
        assert_eq!(mies(&w, 1).unwrap(), s(&[2]));
        assert_eq!(mies(&w, 2).unwrap(), s(&[2, 5]));
        assert_eq!(mies(&w, 3).unwrap(), s(&[1, 2, 5]));
        assert!(mies(&w, 9).is_err());
        assert_eq!(mies(&w, 4).unwrap().len(), 4);
        assert_eq!(mies(&[1, 2, 3], 1).unwrap(), s(&[1]));
    }

    #[test]
    fn predicted_shapes() {
        assert_eq!(predict_shape(&[5, 2, 7, 8, 3, 1, 4, 6]).unwrap(), Composition::from_slice(&[1, 4, 3]));
        assert_eq!(predict_shape(&[1, 2, 3, 4]).unwrap(), Composition::from_slice(&[4]));
    }
}
