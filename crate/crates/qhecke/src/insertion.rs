//! Insertion into Young composition tableaux, the column-recording algorithm
//! producing `(P̂, Q̂)`, the full recording tableau `Q̂′`, and Schensted RSK.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::comb_core::Cell;
use crate::error::{Error, Result};
use crate::permutation::Perm;
use crate::tableaux::{is_young_composition_tableau, Filling};

/// Outcome of inserting one letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionTrace {
    pub result: Filling,
    /// Modified cells in the order they were touched, ending with the new cell.
    /// Coordinates refer to `result`.
    pub insertion_sequence: Vec<Cell>,
    pub new_cell: Cell,
}

/// Inserts `k` into the Young composition tableau `t`.
pub fn insert(t: &Filling, k: usize) -> Result<InsertionTrace> {
    if k == 0 {
        return Err(Error::Domain("letters must be positive".into()));
    }
    if !is_young_composition_tableau(t) {
        return Err(Error::Precondition(format!("{t} is not a Young composition tableau")));
    }
    Ok(insert_unchecked(t, k))
}

pub(crate) fn insert_unchecked(t: &Filling, k: usize) -> InsertionTrace {
    let mut result = t.clone();
    // column descending, then row descending
    let mut order = t.cells();
    order.sort_by(|a, b| b.col.cmp(&a.col).then(b.row.cmp(&a.row)));

    let mut k0 = k;
    let mut bumped = Vec::new();
    for cell in order {
        let here = result.get(cell).expect("cell of the original diagram");
        let right = Cell::new(cell.row, cell.col + 1);
        match result.get(right) {
            None if here <= k0 => {
                result.push_to_row(cell.row, k0);
                bumped.push(right);
                return InsertionTrace { result, insertion_sequence: bumped, new_cell: right };
            }
            Some(next) if here <= k0 && k0 < next => {
                result.set(right, k0);
                k0 = next;
                bumped.push(right);
            }
            _ => {}
        }
    }
    let at = result.rows().iter().filter(|row| row[0] < k0).count();
    result.insert_row(at, vec![k0]);
    let new_cell = Cell::new(at + 1, 1);
    let mut insertion_sequence: Vec<Cell> = bumped
        .into_iter()
        .map(|c| if c.row > at { Cell::new(c.row + 1, c.col) } else { c })
        .collect();
    insertion_sequence.push(new_cell);
    InsertionTrace { result, insertion_sequence, new_cell }
}

/// A two-line array whose columns are weakly increasing in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoLineArray {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoLineArray {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::Precondition("rows of a two-line array differ in length".into()));
        }
        if top.iter().chain(&bottom).any(|&x| x == 0) {
            return Err(Error::Precondition("two-line array entries must be positive".into()));
        }
        let ordered = (1..top.len()).all(|r| (top[r - 1], bottom[r - 1]) <= (top[r], bottom[r]));
        if !ordered {
            return Err(Error::Precondition("two-line array columns are not weakly increasing".into()));
        }
        Ok(TwoLineArray { top, bottom })
    }

    /// A word `w₁…wₙ` read as the array with top row `1…n`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        TwoLineArray::new((1..=word.len()).collect(), word.to_vec())
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }
}

fn rev_on(values: &[usize]) -> impl Fn(usize) -> usize {
    let set: Vec<usize> = values.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    move |x| {
        let i = set.binary_search(&x).expect("value in set");
        set[set.len() - 1 - i]
    }
}

/// Reverses both rows and applies the order-reversing involutions of the
/// top and bottom entry sets.
pub fn conj(w: &TwoLineArray) -> TwoLineArray {
    let (rx, ry) = (rev_on(&w.top), rev_on(&w.bottom));
    TwoLineArray {
        top: w.top.iter().rev().map(|&x| rx(x)).collect(),
        bottom: w.bottom.iter().rev().map(|&y| ry(y)).collect(),
    }
}

/// Runs the insertion on the bottom row, recording the top row by column.
pub fn build_pq(w: &TwoLineArray) -> (Filling, Filling) {
    let mut p = Filling::empty();
    let mut q = Filling::empty();
    for (&i, &j) in w.top.iter().zip(&w.bottom) {
        let trace = insert_unchecked(&p, j);
        p = trace.result;
        let c = trace.new_cell.col;
        if c == 1 {
            let at = q.num_rows();
            q.insert_row(at, vec![i]);
        } else {
            let r = (1..=q.num_rows())
                .rev()
                .find(|&r| q.row(r).len() == c - 1)
                .expect("recording tableau has a row one cell short of the new column");
            q.push_to_row(r, i);
        }
    }
    (p, q)
}

/// `P̂` of a word.
pub fn p_hat(word: &[usize]) -> Filling {
    let mut p = Filling::empty();
    for &j in word {
        p = insert_unchecked(&p, j).result;
    }
    p
}

/// `(P̂(σ), Q̂(σ))` for a permutation.
pub fn pq_hat(sigma: &Perm) -> (Filling, Filling) {
    build_pq(&TwoLineArray::from_word(sigma.word()).expect("permutations are valid arrays"))
}

/// `Q̂′(w)`: the new cell of the `k`-th insertion receives `k`.
pub fn recording_full(word: &[usize]) -> Result<Filling> {
    let distinct: BTreeSet<usize> = word.iter().copied().collect();
    if distinct.len() != word.len() {
        return Err(Error::Precondition("full recording needs distinct letters".into()));
    }
    let mut p = Filling::empty();
    let mut q = Filling::empty();
    for (k, &j) in word.iter().enumerate() {
        let trace = insert_unchecked(&p, j);
        let cell = trace.new_cell;
        if cell.col == 1 {
            q.insert_row(cell.row - 1, vec![k + 1]);
        } else {
            q.push_to_row(cell.row, k + 1);
        }
        p = trace.result;
    }
    Ok(q)
}

/// Schensted row insertion; rows are listed from the bottom (longest first).
pub fn rsk(sigma: &Perm) -> (Filling, Filling) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in sigma.word().iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![k + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    std::mem::swap(&mut p[r][c], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(k + 1);
                    break;
                }
            }
        }
    }
    (Filling::new(p).expect("rows nonempty"), Filling::new(q).expect("rows nonempty"))
}
