//! Permuted composition tableaux (PCTs) and reverse tableaux (RTs).
//!
//! Cells are addressed `(row, column)`, both 1-indexed, rows counted from the
//! top of a left-justified diagram.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::standardize;
use crate::{Composition, Error, Permutation, Result};

/// A filling of a composition diagram by positive integers.
///
/// Construction only checks that row lengths match the shape; whether the
/// filling is a PCT is decided by [`validate_pct`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

/// A partition-shaped filling with weakly decreasing rows and strictly
/// decreasing columns, all entries in `1..=size`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ReverseTableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

/// One failed PCT condition, with the cells involved.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Entry outside `1..=size`.
    EntryOutOfRange { cell: (usize, usize), value: usize },
    /// Two first-column entries are equal.
    RepeatedFirstColumn { rows: (usize, usize), value: usize },
    /// `cell` is smaller than the cell to its right.
    RowIncrease { cell: (usize, usize) },
    /// Cells `a = (i, j)`, `b = (i, j+1)` (absent when row `i` ends at `j`) and
    /// `c = (k, j+1)` with `i < k` have `a >= c` but not `b > c`.
    Triple {
        a: (usize, usize),
        b: Option<(usize, usize)>,
        c: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::EntryOutOfRange { cell, value } => {
                write!(f, "entry {value} at {cell:?} is out of range")
            }
            Violation::RepeatedFirstColumn { rows, value } => write!(
                f,
                "first column repeats {value} in rows {} and {}",
                rows.0, rows.1
            ),
            Violation::RowIncrease { cell } => {
                write!(f, "row increases after cell {cell:?}")
            }
            Violation::Triple { a, b: Some(b), c } => {
                write!(f, "triple condition fails at a={a:?} b={b:?} c={c:?}")
            }
            Violation::Triple { a, b: None, c } => {
                write!(f, "triple condition fails at a={a:?} b=absent c={c:?}")
            }
        }
    }
}

fn check_rows(shape: &Composition, rows: &[Vec<usize>]) -> Result<()> {
    if shape.len() != rows.len() {
        return Err(Error::RowLengthMismatch {
            row: rows.len().min(shape.len()) + 1,
            expected: shape.parts().get(rows.len()).copied().unwrap_or(0),
            found: 0,
        });
    }
    for (r, (&want, row)) in shape.parts().iter().zip(rows).enumerate() {
        if row.len() != want {
            return Err(Error::RowLengthMismatch {
                row: r + 1,
                expected: want,
                found: row.len(),
            });
        }
    }
    Ok(())
}

fn shape_of(rows: &[Vec<usize>]) -> Result<Composition> {
    Composition::new(rows.iter().map(Vec::len).collect())
}

fn column_of(rows: &[Vec<usize>], column: usize) -> Vec<usize> {
    rows.iter()
        .filter_map(|r| r.get(column - 1).copied())
        .collect()
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    let width = rows
        .iter()
        .flatten()
        .map(|v| if *v == 0 { 1 } else { v.ilog10() as usize + 1 })
        .max()
        .unwrap_or(1);
    for (r, row) in rows.iter().enumerate() {
        if r > 0 {
            writeln!(f)?;
        }
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v:>width$}")?;
        }
    }
    Ok(())
}

impl Tableau {
    /// Build from rows; the shape is read off the row lengths.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        Ok(Tableau { shape, rows })
    }

    pub fn with_shape(shape: Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        check_rows(&shape, &rows)?;
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at 1-indexed `(row, column)`.
    pub fn get(&self, row: usize, column: usize) -> Option<usize> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(column.checked_sub(1)?)
            .copied()
    }

    /// The `i`-th column read top to bottom.
    pub fn column_word(&self, i: usize) -> Result<Vec<usize>> {
        let max = self.shape.max_part();
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        Ok(column_of(&self.rows, i))
    }

    /// Standardized `i`-th column word.
    pub fn st_i(&self, i: usize) -> Result<Permutation> {
        standardize(&self.column_word(i)?)
    }

    /// Standardized column words of every column, left to right.
    pub fn st(&self) -> Vec<Permutation> {
        (1..=self.shape.max_part())
            .map(|i| self.st_i(i).expect("column in range"))
            .collect()
    }

    /// True iff the entries are exactly `{1, ..., size}`.
    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = alloc::vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// `positions()[v]` is the cell holding `v`; index 0 is unused.
    ///
    /// Only meaningful for standard fillings.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = alloc::vec![(0, 0); self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v < pos.len() {
                    pos[v] = (r + 1, c + 1);
                }
            }
        }
        pos
    }

    /// The filling with entries `i` and `i + 1` interchanged.
    pub fn swap_entries(&self, i: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| match v {
                        v if v == i => i + 1,
                        v if v == i + 1 => i,
                        v => v,
                    })
                    .collect()
            })
            .collect();
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl ReverseTableau {
    /// Build and check the reverse tableau conditions.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = shape_of(&rows)?;
        if !shape.is_partition() {
            return Err(Error::InvalidReverseTableau(format!(
                "shape ({shape}) is not a partition"
            )));
        }
        let n = shape.size();
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::InvalidReverseTableau(format!(
                        "entry {v} at ({}, {}) outside 1..={n}",
                        r + 1,
                        c + 1
                    )));
                }
                if c > 0 && row[c - 1] < v {
                    return Err(Error::InvalidReverseTableau(format!(
                        "row {} increases at column {}",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] <= v {
                    return Err(Error::InvalidReverseTableau(format!(
                        "column {} does not strictly decrease at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(ReverseTableau { shape, rows })
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn column(&self, i: usize) -> Vec<usize> {
        column_of(&self.rows, i)
    }

    pub fn is_standard(&self) -> bool {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(k, &v)| v == k + 1)
    }
}

impl fmt::Display for ReverseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// Check the three PCT conditions. On success return the type, the
/// standardization of the first column.
pub fn validate_pct(t: &Tableau) -> Result<Permutation> {
    let violations = pct_violations(t);
    if !violations.is_empty() {
        return Err(Error::InvalidTableau(violations));
    }
    if t.rows.is_empty() {
        return Ok(Permutation::identity(0));
    }
    standardize(&column_of(&t.rows, 1))
}

/// Every violated PCT condition, in a fixed order.
pub fn pct_violations(t: &Tableau) -> Vec<Violation> {
    let rows = &t.rows;
    let n = t.size();
    let mut out = Vec::new();

    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                out.push(Violation::EntryOutOfRange {
                    cell: (r + 1, c + 1),
                    value: v,
                });
            }
        }
    }

    for i in 0..rows.len() {
        for k in i + 1..rows.len() {
            if rows[i][0] == rows[k][0] {
                out.push(Violation::RepeatedFirstColumn {
                    rows: (i + 1, k + 1),
                    value: rows[i][0],
                });
            }
        }
    }

    for (r, row) in rows.iter().enumerate() {
        for c in 1..row.len() {
            if row[c - 1] < row[c] {
                out.push(Violation::RowIncrease { cell: (r + 1, c) });
            }
        }
    }

    // a = (i, j), b = (i, j+1) or absent, c = (k, j+1) with i < k.
    for i in 0..rows.len() {
        for j in 0..rows[i].len() {
            let a = rows[i][j];
            let b = rows[i].get(j + 1).copied();
            for (k, row) in rows.iter().enumerate().skip(i + 1) {
                let Some(&c) = row.get(j + 1) else {
                    continue;
                };
                if a >= c && !b.is_some_and(|b| b > c) {
                    out.push(Violation::Triple {
                        a: (i + 1, j + 1),
                        b: b.map(|_| (i + 1, j + 2)),
                        c: (k + 1, j + 2),
                    });
                }
            }
        }
    }
    out
}

fn require_standard(t: &Tableau) -> Result<()> {
    if t.is_standard() {
        Ok(())
    } else {
        Err(Error::NotStandard)
    }
}

/// All `i` in `[n-1]` such that `i + 1` is weakly right of `i`.
pub fn descent_set(t: &Tableau) -> Result<BTreeSet<usize>> {
    require_standard(t)?;
    let pos = t.positions();
    Ok((1..t.size())
        .filter(|&i| pos[i + 1].1 >= pos[i].1)
        .collect())
}

/// Classification of a first-column entry `i` of a two-column tableau by
/// where `i + 1` sits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColumnDescent {
    /// `i + 1` in the first column, above `i`.
    North,
    /// `i + 1` in the first column, below `i`.
    South,
    /// `i + 1` in the second column, above `i`.
    NorthEast,
    /// `i + 1` in the second column, below `i`.
    SouthEast,
}

/// The class of every descent `i` lying in the first column, in increasing `i`.
pub fn first_column_descents(t: &Tableau) -> Result<Vec<(usize, ColumnDescent)>> {
    require_standard(t)?;
    if t.shape.parts().iter().any(|&p| p != 2) || t.shape.is_empty() {
        return Err(Error::WrongShape("(2^n)"));
    }
    let pos = t.positions();
    let mut out = Vec::new();
    for i in 1..t.size() {
        let (ri, ci) = pos[i];
        if ci != 1 {
            continue;
        }
        let (rj, cj) = pos[i + 1];
        let class = match (cj, rj < ri) {
            (1, true) => ColumnDescent::North,
            (1, false) => ColumnDescent::South,
            (_, true) => ColumnDescent::NorthEast,
            (_, false) => ColumnDescent::SouthEast,
        };
        out.push((i, class));
    }
    Ok(out)
}

/// `(|des_N|, |des_S|, |des_NE|, |des_SE|)` for a standard tableau of shape `(2^n)`.
pub fn descent_quadruple(t: &Tableau) -> Result<(usize, usize, usize, usize)> {
    let mut q = (0, 0, 0, 0);
    for (_, class) in first_column_descents(t)? {
        match class {
            ColumnDescent::North => q.0 += 1,
            ColumnDescent::South => q.1 += 1,
            ColumnDescent::NorthEast => q.2 += 1,
            ColumnDescent::SouthEast => q.3 += 1,
        }
    }
    Ok(q)
}

/// Sort each column of a PCT decreasingly into the sorted shape.
pub fn pct_to_rt(t: &Tableau) -> Result<ReverseTableau> {
    validate_pct(t)?;
    let shape = t.shape.to_partition();
    let mut rows: Vec<Vec<usize>> = shape
        .parts()
        .iter()
        .map(|&p| Vec::with_capacity(p))
        .collect();
    for c in 1..=shape.max_part() {
        let mut col = column_of(&t.rows, c);
        col.sort_unstable_by(|a, b| b.cmp(a));
        for (r, v) in col.into_iter().enumerate() {
            rows[r].push(v);
        }
    }
    Ok(ReverseTableau { shape, rows })
}

/// Rebuild the PCT of type `sigma` whose column contents are those of `rt`.
///
/// The first column is arranged so it standardizes to `sigma`. Each later
/// column is inserted entry by entry in decreasing order, each entry going to
/// the topmost row whose previous column is filled with something at least
/// as large and whose current cell is still empty.
pub fn rt_to_pct(rt: &ReverseTableau, sigma: &Permutation) -> Result<Tableau> {
    let k = rt.shape.len();
    if sigma.len() != k {
        return Err(Error::SizeMismatch {
            left: sigma.len(),
            right: k,
        });
    }
    if k == 0 {
        return Ok(Tableau {
            shape: Composition::default(),
            rows: Vec::new(),
        });
    }
    let mut first = rt.column(1);
    first.sort_unstable();
    let mut rows: Vec<Vec<usize>> = (1..=k)
        .map(|r| alloc::vec![first[sigma.at(r) - 1]])
        .collect();

    for c in 2..=rt.shape.max_part() {
        let mut col = rt.column(c);
        col.sort_unstable_by(|a, b| b.cmp(a));
        for v in col {
            let row = rows
                .iter_mut()
                .find(|row| row.len() == c - 1 && row[c - 2] >= v)
                .ok_or(Error::Internal(
                    "no row accepts entry during PCT reconstruction",
                ))?;
            row.push(v);
        }
    }
    Tableau::new(rows)
}

/// Calls `f` on every standard PCT of `shape`.
///
/// Entries are placed from the largest down. Each row is filled left to right
/// so rows decrease, and the triple condition is checked as soon as the
/// smallest cell of a configuration is placed.
pub fn for_each_spct<F: FnMut(&Tableau)>(shape: &Composition, mut f: F) {
    let parts = shape.parts();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&p| alloc::vec![0; p]).collect();
    let mut fill = alloc::vec![0usize; parts.len()];
    let n = shape.size();
    spct_rec(parts, &mut grid, &mut fill, n, &mut f, shape);
}

fn spct_rec<F: FnMut(&Tableau)>(
    parts: &[usize],
    grid: &mut Vec<Vec<usize>>,
    fill: &mut Vec<usize>,
    v: usize,
    f: &mut F,
    shape: &Composition,
) {
    if v == 0 {
        f(&Tableau {
            shape: shape.clone(),
            rows: grid.clone(),
        });
        return;
    }
    for r in 0..parts.len() {
        let c = fill[r];
        if c == parts[r] || !placement_ok(parts, grid, fill, r, c) {
            continue;
        }
        grid[r][c] = v;
        fill[r] += 1;
        spct_rec(parts, grid, fill, v - 1, f, shape);
        fill[r] -= 1;
        grid[r][c] = 0;
    }
}

/// Whether the next (smallest so far) value may go at 0-indexed `(r, c)`.
fn placement_ok(parts: &[usize], grid: &[Vec<usize>], fill: &[usize], r: usize, c: usize) -> bool {
    if c == 0 {
        return true;
    }
    // As `b`: a = (r, c-1), c-cells below in column c that are already filled.
    let a = grid[r][c - 1];
    for k in r + 1..parts.len() {
        if fill[k] > c && a > grid[k][c] {
            return false;
        }
    }
    // As `c` with `b` absent: rows above ending at column c-1 whose last cell is filled.
    for i in 0..r {
        if parts[i] == c && fill[i] == c {
            return false;
        }
    }
    true
}

/// All standard PCTs of `shape`, in depth-first placement order.
pub fn enumerate_spct(shape: &Composition) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_spct(shape, |t| out.push(t.clone()));
    out
}

/// Standard PCTs of `shape` and type `sigma`.
pub fn enumerate_spct_sigma(shape: &Composition, sigma: &Permutation) -> Result<Vec<Tableau>> {
    if sigma.len() != shape.len() {
        return Err(Error::SizeMismatch {
            left: sigma.len(),
            right: shape.len(),
        });
    }
    let mut out = Vec::new();
    for_each_spct(shape, |t| {
        if shape.is_empty() || t.st_i(1).as_ref() == Ok(sigma) {
            out.push(t.clone());
        }
    });
    Ok(out)
}

/// Number of standard PCTs of `shape`.
pub fn count_spct(shape: &Composition) -> usize {
    let mut n = 0;
    for_each_spct(shape, |_| n += 1);
    n
}

/// All standard reverse tableaux of the partition `shape`.
pub fn enumerate_srt(shape: &Composition) -> Result<Vec<ReverseTableau>> {
    if !shape.is_partition() {
        return Err(Error::WrongShape("a partition"));
    }
    let parts = shape.parts();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&p| alloc::vec![0; p]).collect();
    let mut fill = alloc::vec![0usize; parts.len()];
    let mut out = Vec::new();
    srt_rec(parts, &mut grid, &mut fill, shape.size(), &mut out, shape);
    Ok(out)
}

fn srt_rec(
    parts: &[usize],
    grid: &mut Vec<Vec<usize>>,
    fill: &mut Vec<usize>,
    v: usize,
    out: &mut Vec<ReverseTableau>,
    shape: &Composition,
) {
    if v == 0 {
        out.push(ReverseTableau {
            shape: shape.clone(),
            rows: grid.clone(),
        });
        return;
    }
    for r in 0..parts.len() {
        let c = fill[r];
        if c == parts[r] || (r > 0 && fill[r - 1] <= c) {
            continue;
        }
        grid[r][c] = v;
        fill[r] += 1;
        srt_rec(parts, grid, fill, v - 1, out, shape);
        fill[r] -= 1;
        grid[r][c] = 0;
    }
}

/// Number of standard Young tableaux of the partition `shape`, by the hook
/// length formula. Equals the number of standard reverse tableaux.
pub fn hook_length_count(shape: &Composition) -> u128 {
    let parts = shape.parts();
    let cols = shape.column_lengths();
    let n = shape.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut den: u128 = 1;
    for (r, &len) in parts.iter().enumerate() {
        for (c, &height) in cols.iter().enumerate().take(len) {
            let hook = (len - c - 1) + (height - r - 1) + 1;
            den *= hook as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{compositions_of, partitions_of};
    use alloc::vec;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rt(rows: &[&[usize]]) -> ReverseTableau {
        ReverseTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn mixed_pct() -> Tableau {
        t(&[&[1], &[4, 3, 2], &[3, 2], &[7, 5, 5, 3]])
    }

    fn spct_1324() -> Tableau {
        t(&[&[1], &[7, 5, 2], &[6, 4], &[10, 9, 8, 3]])
    }

    /// Zero-padded formulation: for rows i < k and columns j >= 2, a nonzero
    /// cell (k, j) with (k, j) >= (i, j) must exceed (i, j-1).
    fn triple_ok_padded(t: &Tableau) -> bool {
        let w = t.shape().max_part();
        let cell = |r: usize, c: usize| t.rows()[r].get(c).copied().unwrap_or(0);
        for i in 0..t.rows().len() {
            for k in i + 1..t.rows().len() {
                for j in 1..w {
                    let below = cell(k, j);
                    if below != 0 && below >= cell(i, j) && below <= cell(i, j - 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn brute_is_pct(t: &Tableau) -> bool {
        let first = column_of(t.rows(), 1);
        let distinct = first.iter().collect::<BTreeSet<_>>().len() == first.len();
        let rows_ok = t.rows().iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]));
        distinct && rows_ok && triple_ok_padded(t)
    }

    #[test]
    fn both_have_type_1324() {
        assert_eq!(validate_pct(&mixed_pct()).unwrap(), p("1324"));
        assert_eq!(validate_pct(&spct_1324()).unwrap(), p("1324"));
        assert!(!mixed_pct().is_standard());
        assert!(spct_1324().is_standard());
    }

    #[test]
    fn single_cell() {
        let one = t(&[&[1]]);
        assert_eq!(validate_pct(&one).unwrap(), p("1"));
        assert!(one.is_standard());
        assert!(descent_set(&one).unwrap().is_empty());
        assert_eq!(pct_to_rt(&one).unwrap(), rt(&[&[1]]));
    }

    #[test]
    fn two_by_two_fillings() {
        // [[2,1],[3,2]]: a=2, b=1, c=2 gives a >= c and b <= c.
        let bad = t(&[&[2, 1], &[3, 2]]);
        let err = validate_pct(&bad).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidTableau(vec![Violation::Triple {
                a: (1, 1),
                b: Some((1, 2)),
                c: (2, 2)
            }])
        );
        assert!(!brute_is_pct(&bad));
        assert_eq!(validate_pct(&t(&[&[4, 3], &[2, 1]])).unwrap(), p("21"));
    }

    #[test]
    fn absent_b_configuration() {
        // Row 1 ends at column 1, so the cell below in column 2 must exceed a.
        assert!(validate_pct(&t(&[&[1], &[3, 2]])).is_ok());
        let err = validate_pct(&t(&[&[2], &[3, 1]])).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidTableau(vec![Violation::Triple {
                a: (1, 1),
                b: None,
                c: (2, 2)
            }])
        );
    }

    #[test]
    fn other_violations_reported() {
        let err = validate_pct(&t(&[&[1, 2], &[1]])).unwrap_err();
        let Error::InvalidTableau(v) = err else {
            panic!()
        };
        assert!(v.contains(&Violation::RepeatedFirstColumn {
            rows: (1, 2),
            value: 1
        }));
        assert!(v.contains(&Violation::RowIncrease { cell: (1, 1) }));
        let err = validate_pct(&t(&[&[9]])).unwrap_err();
        assert!(
            matches!(err, Error::InvalidTableau(ref v) if matches!(v[0], Violation::EntryOutOfRange { .. }))
        );
    }

    #[test]
    fn validate_matches_padded_oracle() {
        // Every weakly-decreasing-row filling with entries in 1..=n, small shapes.
        for n in 1..=4 {
            for shape in compositions_of(n) {
                let cells = shape.size();
                let total = n.pow(cells as u32);
                for code in 0..total {
                    let mut x = code;
                    let mut rows = Vec::new();
                    for &len in shape.parts() {
                        let mut row = Vec::new();
                        for _ in 0..len {
                            row.push(x % n + 1);
                            x /= n;
                        }
                        rows.push(row);
                    }
                    let tab = Tableau::new(rows).unwrap();
                    assert_eq!(validate_pct(&tab).is_ok(), brute_is_pct(&tab), "{tab:?}");
                }
            }
        }
    }

    #[test]
    fn column_words() {
        let st: Vec<_> = mixed_pct().st();
        assert_eq!(st, vec![p("1324"), p("213"), p("12"), p("1")]);
        let col = t(&[&[3], &[1], &[2]]);
        assert_eq!(col.st_i(1).unwrap(), p("312"));
        assert_eq!(
            mixed_pct().column_word(5),
            Err(Error::IndexOutOfRange { index: 5, max: 4 })
        );
        assert!(mixed_pct().column_word(0).is_err());
    }

    #[test]
    fn descent_examples() {
        let d: Vec<_> = descent_set(&spct_1324()).unwrap().into_iter().collect();
        assert_eq!(d, vec![1, 2, 4, 6, 7]);
        let d: Vec<_> = descent_set(&t(&[&[2], &[1]]))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(d, vec![1]);
        assert_eq!(descent_set(&mixed_pct()), Err(Error::NotStandard));
    }

    #[test]
    fn quadruple_small() {
        assert_eq!(descent_quadruple(&t(&[&[2, 1]])).unwrap(), (0, 0, 0, 0));
        assert!(matches!(
            descent_quadruple(&spct_1324()),
            Err(Error::WrongShape(_))
        ));
        // The 4 SPCTs of shape (2,2), classified by hand.
        let mut got: Vec<_> = enumerate_spct(&c("2,2"))
            .iter()
            .map(|x| (x.rows().to_vec(), descent_quadruple(x).unwrap()))
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                (vec![vec![2, 1], vec![4, 3]], (0, 0, 0, 1)),
                (vec![vec![3, 2], vec![4, 1]], (0, 1, 0, 0)),
                (vec![vec![4, 2], vec![3, 1]], (1, 0, 0, 0)),
                (vec![vec![4, 3], vec![2, 1]], (0, 0, 1, 0)),
            ]
        );
    }

    #[test]
    fn quadruple_sums_to_n_minus_one() {
        for n in 1..=4 {
            for x in enumerate_spct(&Composition::rectangle(2, n)) {
                let (a, b, c, d) = descent_quadruple(&x).unwrap();
                assert_eq!(a + b + c + d, n - 1);
            }
        }
    }

    #[test]
    fn rt_pct_pair_under_3142() {
        let left = rt(&[&[11, 8, 6, 4], &[10, 7, 5], &[9, 3, 1], &[2]]);
        let right = t(&[&[10, 8, 6, 4], &[2], &[11, 7, 5], &[9, 3, 1]]);
        assert_eq!(validate_pct(&right).unwrap(), p("3142"));
        assert_eq!(pct_to_rt(&right).unwrap(), left);
        assert_eq!(rt_to_pct(&left, &p("3142")).unwrap(), right);
    }

    #[test]
    fn rt_to_pct_identity_gives_ct() {
        let x = rt(&[&[4, 2], &[3, 1]]);
        let back = rt_to_pct(&x, &p("12")).unwrap();
        assert_eq!(validate_pct(&back).unwrap(), p("12"));
        assert_eq!(
            rt_to_pct(&x, &p("123")),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn fixed_point_of_rho() {
        // Partition shape, columns decreasing, first column decreasing: type 21.
        let x = t(&[&[4, 3], &[2, 1]]);
        assert_eq!(pct_to_rt(&x).unwrap().rows(), x.rows());
    }

    #[test]
    fn reverse_tableau_checks() {
        assert!(ReverseTableau::new(vec![vec![1], vec![2]]).is_err());
        assert!(ReverseTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(ReverseTableau::new(vec![vec![1, 2]]).is_err());
        assert!(ReverseTableau::new(vec![vec![2, 2], vec![1]]).is_ok());
        assert!(ReverseTableau::new(vec![vec![2, 2], vec![2]]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count_spct(&c("2,2")), 4);
        assert_eq!(count_spct(&c("2,2,2")), 30);
        assert_eq!(enumerate_srt(&c("2,2")).unwrap().len(), 2);
        assert!(enumerate_srt(&c("1,2")).is_err());
        for x in enumerate_spct(&c("1,3,2")) {
            assert!(validate_pct(&x).is_ok() && x.is_standard());
        }
    }

    #[test]
    fn srt_count_is_hook_length() {
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let srts = enumerate_srt(&lambda).unwrap();
                assert_eq!(srts.len() as u128, hook_length_count(&lambda));
                assert!(srts.iter().all(ReverseTableau::is_standard));
            }
        }
    }

    #[test]
    fn spct_enumeration_matches_filter() {
        // Filter all bijective labelings with decreasing rows through validate_pct.
        for n in 1..=6 {
            for shape in compositions_of(n) {
                let mut filtered = BTreeSet::new();
                for perm in Permutation::all(n) {
                    let mut it = perm.images().iter().copied();
                    let rows: Vec<Vec<usize>> = shape
                        .parts()
                        .iter()
                        .map(|&len| (0..len).map(|_| it.next().unwrap()).collect())
                        .collect();
                    if rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
                        continue;
                    }
                    let tab = Tableau::new(rows).unwrap();
                    if validate_pct(&tab).is_ok() {
                        filtered.insert(tab);
                    }
                }
                let got: BTreeSet<_> = enumerate_spct(&shape).into_iter().collect();
                assert_eq!(got, filtered, "shape {shape}");
            }
        }
    }

    #[test]
    fn sigma_filter_and_sum_rule() {
        // Summing |SPCT^sigma(alpha)| over rearrangements alpha of lambda gives |SRT(lambda)|.
        for n in 1..=5 {
            for lambda in partitions_of(n) {
                let srt = enumerate_srt(&lambda).unwrap().len();
                let shapes: Vec<_> = compositions_of(n)
                    .filter(|a| a.to_partition() == lambda)
                    .collect();
                for sigma in Permutation::all(lambda.len()) {
                    let total: usize = shapes
                        .iter()
                        .map(|a| enumerate_spct_sigma(a, &sigma).unwrap().len())
                        .sum();
                    assert_eq!(total, srt, "lambda {lambda} sigma {sigma}");
                }
            }
        }
        assert!(enumerate_spct_sigma(&c("2,2"), &p("123")).is_err());
    }

    #[test]
    fn swap_entries_swaps() {
        let x = spct_1324().swap_entries(1);
        assert_eq!(x.get(1, 1), Some(1 + 1));
        assert_eq!(x.get(2, 3), Some(1));
    }

    #[test]
    fn display_is_left_justified() {
        let s = alloc::string::ToString::to_string(&t(&[&[3], &[10, 2]]));
        assert_eq!(s, " 3\n10  2");
    }
}
