//! Fillings of composition diagrams, the standard tableau families, reading
//! words, descent sets and the canonical fillings of a shape.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::comb_core::{Cell, Composition};
use crate::error::{guard, Error, Result};

/// Largest diagram size accepted by [`enumerate`].
pub const ENUMERATION_LIMIT: usize = 12;

/// A filling of a composition diagram, stored as rows from the bottom.
///
/// Serializes as `{"shape": [...], "rows": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct FillingRepr {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingRepr { shape: self.shape(), rows: self.rows.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FillingRepr::deserialize(d)?;
        let t = Filling::new(repr.rows).map_err(serde::de::Error::custom)?;
        if t.shape() != repr.shape {
            return Err(serde::de::Error::custom(format!(
                "shape {} does not match row lengths {}",
                repr.shape,
                t.shape()
            )));
        }
        Ok(t)
    }
}

impl Filling {
    /// Builds a filling from rows listed bottom-up; rows must be nonempty.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Domain("fillings of composition diagrams have no empty rows".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Domain("entries must be positive".into()));
        }
        Ok(Filling { rows })
    }

    /// Panicking constructor for literals known to be valid.
    pub fn from_rows(rows: &[&[usize]]) -> Self {
        Filling::new(rows.iter().map(|r| r.to_vec()).collect()).expect("valid rows")
    }

    pub fn empty() -> Self {
        Filling { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The `r`-th row from the bottom, 1-based.
    pub fn row(&self, r: usize) -> &[usize] {
        &self.rows[r - 1]
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(Vec::len).collect()).expect("rows are nonempty")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    pub fn set(&mut self, cell: Cell, value: usize) {
        self.rows[cell.row - 1][cell.col - 1] = value;
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.get(cell).is_some()
    }

    /// Cells row by row from the bottom.
    pub fn cells(&self) -> Vec<Cell> {
        self.shape().diagram()
    }

    pub fn entries(&self) -> BTreeSet<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Whether the entries are exactly `1..=n`, each once.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &x in self.rows.iter().flatten() {
            if x > n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// The cell holding `value`, if any (first occurrence scanning bottom-up).
    pub fn position(&self, value: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&x| x == value).map(|c| Cell::new(r + 1, c + 1))
        })
    }

    /// Positions of `1..=n` in a standard filling, indexed by value.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x < pos.len() {
                    pos[x] = Cell::new(r + 1, c + 1);
                }
            }
        }
        pos
    }

    /// Reads each row right to left, starting with the bottom row.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// Reads each column bottom to top, starting with the rightmost column.
    pub fn col_word(&self) -> Vec<usize> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        (1..=width)
            .rev()
            .flat_map(|c| self.rows.iter().filter_map(move |row| row.get(c - 1).copied()))
            .collect()
    }

    /// Entries of column `c` from the bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|row| row.get(c - 1).copied()).collect()
    }

    /// Swaps the entries `i` and `i+1`.
    pub fn swap_values(&self, i: usize) -> Filling {
        self.map_entries(|x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
    }

    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Filling {
        Filling { rows: self.rows.iter().map(|row| row.iter().map(|&x| f(x)).collect()).collect() }
    }

    /// Inserts a new row at 0-based index `at`.
    pub(crate) fn insert_row(&mut self, at: usize, row: Vec<usize>) {
        self.rows.insert(at, row);
    }

    pub(crate) fn push_to_row(&mut self, r: usize, value: usize) {
        self.rows[r - 1].push(value);
    }

    /// French-notation rendering: the bottom row is printed last.
    pub fn pretty(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)\n".to_string();
        }
        let width = self.rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("fillings serialize")
    }
}

impl fmt::Display for Filling {
    /// Compact form listing rows from the bottom: `[1,4][2,2,3][5]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

/// Composition tableau: rows weakly decrease, the first column strictly
/// increases from top to bottom, and the triple rule holds.
pub fn is_composition_tableau(t: &Filling) -> bool {
    let rows = t.rows();
    if rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
        return false;
    }
    if rows.windows(2).any(|w| w[0][0] <= w[1][0]) {
        return false;
    }
    triple_rule(t, |upper_next, lower| upper_next <= lower, |a, b| a < b)
}

/// Young composition tableau: rows weakly increase, the first column strictly
/// increases from bottom to top, and the Young triple rule holds.
pub fn is_young_composition_tableau(t: &Filling) -> bool {
    let rows = t.rows();
    if rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
        return false;
    }
    if rows.windows(2).any(|w| w[0][0] >= w[1][0]) {
        return false;
    }
    triple_rule(t, |upper_next, lower| upper_next >= lower, |a, b| a > b)
}

/// For cells `(i,k+1)` and `(j,k)` with `i < j`: if `trigger(T(i,k+1), T(j,k))`
/// then `(j,k+1)` must exist with `strict(T(i,k+1), T(j,k+1))`.
fn triple_rule(
    t: &Filling,
    trigger: impl Fn(usize, usize) -> bool,
    strict: impl Fn(usize, usize) -> bool,
) -> bool {
    let rows = t.rows();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            for k in 1..rows[i].len() {
                let Some(&lower) = rows[j].get(k - 1) else { continue };
                let a = rows[i][k];
                if trigger(a, lower) {
                    match rows[j].get(k) {
                        Some(&b) if strict(a, b) => {}
                        _ => return false,
                    }
                }
            }
        }
    }
    true
}

fn rows_increase(t: &Filling) -> bool {
    t.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
}

fn first_column_increases(t: &Filling) -> bool {
    t.rows().windows(2).all(|w| w[0][0] < w[1][0])
}

fn columns_increase(t: &Filling) -> bool {
    let width = t.rows().iter().map(Vec::len).max().unwrap_or(0);
    (1..=width).all(|c| t.column(c).windows(2).all(|w| w[0] < w[1]))
}

/// For rows `i < j` with `α_i > α_j`: `T(i,k+1) < T(j,k)` for `1 ≤ k ≤ α_j`.
pub fn is_se_decreasing(t: &Filling) -> bool {
    let rows = t.rows();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i].len() > rows[j].len() && (0..rows[j].len()).any(|k| rows[i][k + 1] >= rows[j][k]) {
                return false;
            }
        }
    }
    true
}

/// The standard tableau families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Standard Young tableaux (partition shapes, French convention).
    Syt,
    /// Standard composition tableaux.
    Sct,
    /// Standard Young composition tableaux.
    Syct,
    /// Standard immaculate tableaux.
    Sit,
    /// Standard extended tableaux.
    Set,
    /// Standard Young composition tableaux with increasing columns.
    SyctC,
    /// SE-decreasing standard extended tableaux.
    Nsyct,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::Syt, Family::Sct, Family::Syct, Family::Sit, Family::Set, Family::SyctC, Family::Nsyct];

    pub fn name(self) -> &'static str {
        match self {
            Family::Syt => "SYT",
            Family::Sct => "SCT",
            Family::Syct => "SYCT",
            Family::Sit => "SIT",
            Family::Set => "SET",
            Family::SyctC => "SYCT_C",
            Family::Nsyct => "nSYCT",
        }
    }

    fn holds(self, t: &Filling) -> bool {
        match self {
            Family::Syt => t.shape().is_partition() && rows_increase(t) && columns_increase(t),
            Family::Sct => is_composition_tableau(t),
            Family::Syct => is_young_composition_tableau(t),
            Family::Sit => rows_increase(t) && first_column_increases(t),
            Family::Set => rows_increase(t) && columns_increase(t),
            Family::SyctC => is_young_composition_tableau(t) && columns_increase(t),
            Family::Nsyct => rows_increase(t) && columns_increase(t) && is_se_decreasing(t),
        }
    }
}

/// Membership of a standard filling in a family.
///
/// Non-standard input is a precondition error rather than `false`.
pub fn validate(family: Family, t: &Filling) -> Result<bool> {
    if !t.is_standard() {
        return Err(Error::Precondition(format!("{t} is not a standard filling")));
    }
    Ok(family.holds(t))
}

/// All standard fillings of `tcd(α)` in `family`, sorted by row word.
pub fn enumerate(family: Family, alpha: &Composition) -> Result<Vec<Filling>> {
    guard("diagram size", alpha.size(), ENUMERATION_LIMIT)?;
    let mut out: Vec<Filling> = match family {
        Family::Syt if !alpha.is_partition() => Vec::new(),
        Family::Sct => grow(alpha, Family::Syct).iter().map(revmap).collect(),
        _ => grow(alpha, family),
    };
    out.retain(|t| family.holds(t));
    out.sort_by_cached_key(Filling::row_word);
    Ok(out)
}

/// Places `1, 2, …, n` in turn, each into a cell whose left neighbour is
/// filled and, in the first column, whose lower neighbour is filled. This
/// produces every filling with increasing rows and first column; families
/// requiring increasing columns are pruned as cells are filled.
fn grow(alpha: &Composition, family: Family) -> Vec<Filling> {
    let lens = alpha.parts().to_vec();
    let columns = matches!(family, Family::Syt | Family::Set | Family::SyctC | Family::Nsyct);
    let mut rows: Vec<Vec<usize>> = lens.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fn rec(v: usize, n: usize, lens: &[usize], columns: bool, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Filling>) {
        if v > n {
            out.push(Filling { rows: rows.clone() });
            return;
        }
        for r in 0..lens.len() {
            let c = rows[r].len();
            if c == lens[r] {
                continue;
            }
            if c == 0 && r > 0 && rows[r - 1].is_empty() {
                continue;
            }
            if columns {
                // the nearest lower row reaching this column must already hold its entry
                if let Some(below) = (0..r).rev().find(|&s| lens[s] > c) {
                    if rows[below].len() <= c {
                        continue;
                    }
                }
            }
            rows[r].push(v);
            rec(v + 1, n, lens, columns, rows, out);
            rows[r].pop();
        }
    }
    rec(1, alpha.size(), &lens, columns, &mut rows, &mut out);
    out
}

/// `{i : i+1 appears weakly right of i}`.
pub fn des_s(t: &Filling) -> BTreeSet<usize> {
    let pos = t.positions();
    (1..t.size()).filter(|&i| pos[i + 1].col >= pos[i].col).collect()
}

/// `{i : i appears weakly right of i+1}`.
pub fn des_hat_s(t: &Filling) -> BTreeSet<usize> {
    let pos = t.positions();
    (1..t.size()).filter(|&i| pos[i].col >= pos[i + 1].col).collect()
}

/// Descent set of a standard Young tableau: `{i : i+1 lies strictly above i}`.
pub fn des_syt(t: &Filling) -> BTreeSet<usize> {
    let pos = t.positions();
    (1..t.size()).filter(|&i| pos[i + 1].row > pos[i].row).collect()
}

/// Composes a filling with the order-reversing involution of its entry set.
pub fn revmap(t: &Filling) -> Filling {
    let ent: Vec<usize> = t.entries().into_iter().collect();
    let k = ent.len();
    t.map_entries(|x| {
        let i = ent.binary_search(&x).expect("entry present");
        ent[k - 1 - i]
    })
}

/// The canonical fillings attached to a composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Canonical {
    /// Rows filled left to right, starting with the bottom row.
    CalT,
    /// First column bottom-up with `1..ℓ`, then the remaining cells left to
    /// right starting with the top row.
    CalTPrime,
    /// Same filling as `CalT`.
    SfT,
    /// Columns filled bottom to top, starting with the leftmost column.
    SfTPrime,
}

pub fn canonical(kind: Canonical, alpha: &Composition) -> Filling {
    let lens = alpha.parts();
    let mut rows: Vec<Vec<usize>> = lens.iter().map(|&l| vec![0; l]).collect();
    let mut next = 1..;
    let mut put = |rows: &mut Vec<Vec<usize>>, r: usize, c: usize| {
        rows[r][c] = next.next().expect("unbounded");
    };
    match kind {
        Canonical::CalT | Canonical::SfT => {
            for r in 0..lens.len() {
                for c in 0..lens[r] {
                    put(&mut rows, r, c);
                }
            }
        }
        Canonical::CalTPrime => {
            for r in 0..lens.len() {
                put(&mut rows, r, 0);
            }
            for r in (0..lens.len()).rev() {
                for c in 1..lens[r] {
                    put(&mut rows, r, c);
                }
            }
        }
        Canonical::SfTPrime => {
            let width = lens.iter().copied().max().unwrap_or(0);
            for c in 0..width {
                for r in 0..lens.len() {
                    if c < lens[r] {
                        put(&mut rows, r, c);
                    }
                }
            }
        }
    }
    Filling { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::from_slice(p)
    }

    #[test]
    fn validity() {
        let t = Filling::from_rows(&[&[1, 2, 3], &[4], &[5, 6]]);
        assert!(validate(Family::Sit, &t).unwrap());
        assert!(validate(Family::Set, &t).unwrap());
        let y = Filling::from_rows(&[&[1, 4], &[2, 2, 3], &[5]]);
        assert!(is_young_composition_tableau(&y));
        assert!(validate(Family::Sit, &y).is_err());
        let one = Filling::from_rows(&[&[1]]);
        for f in Family::ALL {
            assert!(validate(f, &one).unwrap(), "{}", f.name());
        }
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate(Family::Sit, &c(&[2, 2, 2])).unwrap().len(), 15);
        assert_eq!(enumerate(Family::Set, &c(&[3, 1, 2])).unwrap().len(), 9);
        assert_eq!(enumerate(Family::Set, &c(&[2, 2])).unwrap().len(), 2);
        assert_eq!(enumerate(Family::Syt, &c(&[1, 2])).unwrap().len(), 0);
        assert!(enumerate(Family::Sit, &c(&[13])).is_err());
    }

    #[test]
    fn reading_words() {
        assert_eq!(canonical(Canonical::CalTPrime, &c(&[2, 2, 2])).row_word(), vec![6, 1, 5, 2, 4, 3]);
        assert_eq!(canonical(Canonical::CalT, &c(&[2, 2, 2])).row_word(), vec![2, 1, 4, 3, 6, 5]);
        assert_eq!(canonical(Canonical::SfTPrime, &c(&[3, 1, 2])).row_word(), vec![6, 4, 1, 2, 5, 3]);
        assert_eq!(canonical(Canonical::CalT, &c(&[4])), Filling::from_rows(&[&[1, 2, 3, 4]]));
        assert_eq!(Filling::from_rows(&[&[1]]).col_word(), vec![1]);
        assert_eq!(Filling::from_rows(&[&[1, 3], &[2]]).col_word(), vec![3, 1, 2]);
    }

    #[test]
    fn descents_and_revmap() {
        assert_eq!(des_hat_s(&Filling::from_rows(&[&[1], &[2, 3]])), BTreeSet::from([1]));
        assert!(des_hat_s(&Filling::from_rows(&[&[1, 2, 3]])).is_empty());
        let t = Filling::from_rows(&[&[1, 2], &[3]]);
        assert_eq!(revmap(&t), Filling::from_rows(&[&[3, 2], &[1]]));
    }

    #[test]
    fn se_decreasing() {
        assert!(is_se_decreasing(&Filling::from_rows(&[&[1, 2, 5], &[3], &[4, 6]])));
        assert!(is_se_decreasing(&Filling::from_rows(&[&[1, 2], &[3]])));
        assert!(!is_se_decreasing(&Filling::from_rows(&[&[1, 3], &[2]])));
    }

    #[test]
    fn json_round_trip() {
        let t = Filling::from_rows(&[&[1, 4], &[2, 2, 3], &[5]]);
        let v = t.to_json();
        assert_eq!(v, serde_json::json!({"shape": [2, 3, 1], "rows": [[1, 4], [2, 2, 3], [5]]}));
        assert_eq!(serde_json::from_value::<Filling>(v).unwrap(), t);
        assert!(serde_json::from_value::<Filling>(serde_json::json!({"shape": [2], "rows": [[1]]})).is_err());
    }
}
