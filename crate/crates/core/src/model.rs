//! Domain types for shifted optimization: 0/1 vectors, solution matrices,
//! cost matrices, and the shift operator together with objective evaluation.
//!
//! Elements are 0-based internally. The textual form of an [`ElementVector`]
//! puts element 0 leftmost, matching the 1-based `[d]` indexing used in
//! instance files.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Indicator vector of a subset of the ground set `[d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementVector(Vec<bool>);

impl ElementVector {
    pub fn zeros(d: usize) -> Self {
        ElementVector(vec![false; d])
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        ElementVector(bits)
    }

    pub fn from_support(d: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; d];
        for i in support {
            bits[i] = true;
        }
        ElementVector(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.0[i] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    /// `self <= other` coordinatewise.
    pub fn is_subset_of(&self, other: &ElementVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    pub fn is_disjoint(&self, other: &ElementVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !(a && b))
    }

    /// Linear weight `w·s`, with overflow reported.
    pub fn weight(&self, w: &[i64]) -> Result<i64> {
        if w.len() != self.len() {
            return Err(Error::dims("weight vector", self.len(), w.len()));
        }
        self.support()
            .try_fold(0i64, |acc, i| acc.checked_add(w[i]))
            .ok_or(Error::Overflow("linear weight"))
    }
}

impl fmt::Display for ElementVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ElementVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::invalid(format!(
                    "vector character {} is {other:?}, expected '0' or '1'",
                    pos + 1
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ElementVector)
    }
}

/// A `d x n` 0/1 matrix, stored as its `n` columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionMatrix {
    d: usize,
    columns: Vec<ElementVector>,
}

impl SolutionMatrix {
    pub fn new(d: usize, columns: Vec<ElementVector>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::invalid("a solution matrix needs at least one column"));
        }
        if let Some(bad) = columns.iter().find(|col| col.len() != d) {
            return Err(Error::dims("solution column", d, bad.len()));
        }
        Ok(SolutionMatrix { d, columns })
    }

    pub fn zeros(d: usize, n: usize) -> Self {
        assert!(n >= 1, "solution matrix needs n >= 1");
        SolutionMatrix {
            d,
            columns: vec![ElementVector::zeros(d); n],
        }
    }

    /// Builds a matrix from row-major 0/1 data (`rows[i][j]`).
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.first().map(Vec::len).unwrap_or(0);
        let mut x = SolutionMatrix::zeros(rows.len(), n.max(1));
        if rows.is_empty() {
            return Ok(x);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::dims("solution row", n, row.len()));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => x.set(i, j, true),
                    _ => return Err(Error::invalid(format!("entry ({i},{j}) is {v}, not 0/1"))),
                }
            }
        }
        Ok(x)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[ElementVector] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<ElementVector> {
        self.columns
    }

    pub fn column(&self, j: usize) -> &ElementVector {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.columns[j].get(i)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.columns[j].set(i, value);
    }

    pub fn row(&self, i: usize) -> Vec<bool> {
        self.columns.iter().map(|col| col.get(i)).collect()
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.columns.iter().filter(|col| col.get(i)).count()
    }

    /// Coordinatewise `self <= other`.
    pub fn is_dominated_by(&self, other: &SolutionMatrix) -> bool {
        self.d == other.d
            && self.n() == other.n()
            && self.columns.iter().zip(&other.columns).all(|(a, b)| a.is_subset_of(b))
    }

    /// True when the columns have pairwise disjoint supports.
    pub fn is_orthogonal(&self) -> bool {
        (0..self.d).all(|i| self.row_sum(i) <= 1)
    }

    /// Sum of all columns as a vector; `None` if some row sum exceeds 1.
    pub fn column_sum(&self) -> Option<ElementVector> {
        let mut sum = ElementVector::zeros(self.d);
        for i in 0..self.d {
            match self.row_sum(i) {
                0 => {}
                1 => sum.set(i, true),
                _ => return None,
            }
        }
        Some(sum)
    }
}

impl fmt::Display for SolutionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.d {
            for col in &self.columns {
                f.write_str(if col.get(i) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A `d x n` integer cost matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostMatrix {
    d: usize,
    n: usize,
    entries: Vec<i64>,
}

impl CostMatrix {
    pub fn new(d: usize, n: usize, entries: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a cost matrix needs at least one column"));
        }
        if entries.len() != d * n {
            return Err(Error::dims("cost entries", d * n, entries.len()));
        }
        Ok(CostMatrix { d, n, entries })
    }

    /// Builds from non-empty rows of equal length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("cost matrix without rows; use CostMatrix::new for d = 0"))?;
        let d = rows.len();
        let mut entries = Vec::with_capacity(d * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::dims("cost row", n, row.len()));
            }
            entries.extend(row);
        }
        CostMatrix::new(d, n, entries)
    }

    pub fn zeros(d: usize, n: usize) -> Self {
        assert!(n >= 1, "cost matrix needs n >= 1");
        CostMatrix {
            d,
            n,
            entries: vec![0; d * n],
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        (0..self.d).map(move |i| self.row(i))
    }

    /// Row-major entries; entry `(i, j)` sits at `i * n + j`.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// First `(row, column)` where a row increases, if any.
    pub fn shift_violation(&self) -> Option<(usize, usize)> {
        self.rows()
            .enumerate()
            .find_map(|(i, row)| row.windows(2).position(|w| w[0] < w[1]).map(|j| (i, j + 1)))
    }

    /// All rows nonincreasing.
    pub fn is_shifted(&self) -> bool {
        self.shift_violation().is_none()
    }

    /// `|c| = Σ |c_ij|`.
    pub fn l1_norm(&self) -> Result<i64> {
        self.entries
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v.checked_abs()?))
            .ok_or(Error::Overflow("l1 norm"))
    }

    /// `Σ_{j < len} c_ij`.
    pub fn prefix_sum(&self, i: usize, len: usize) -> Result<i64> {
        self.row(i)[..len]
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("prefix sum"))
    }

    fn check_dims(&self, x: &SolutionMatrix, context: &'static str) -> Result<()> {
        if self.d != x.d() || self.n != x.n() {
            return Err(Error::dims(
                context,
                format!("{}x{}", self.d, self.n),
                format!("{}x{}", x.d(), x.n()),
            ));
        }
        Ok(())
    }
}

/// Number of columns using each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongestionProfile(Vec<usize>);

impl CongestionProfile {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }
}

/// Sorts each row nonincreasingly. For 0/1 rows this moves the ones left.
pub fn shift(x: &SolutionMatrix) -> SolutionMatrix {
    let mut out = SolutionMatrix::zeros(x.d(), x.n());
    for i in 0..x.d() {
        for j in 0..x.row_sum(i) {
            out.set(i, j, true);
        }
    }
    out
}

/// Row-wise permutation equivalence; for 0/1 matrices this is equality of row sums.
pub fn equivalent(x: &SolutionMatrix, y: &SolutionMatrix) -> Result<bool> {
    if x.d() != y.d() || x.n() != y.n() {
        return Err(Error::dims(
            "equivalence",
            format!("{}x{}", x.d(), x.n()),
            format!("{}x{}", y.d(), y.n()),
        ));
    }
    Ok((0..x.d()).all(|i| x.row_sum(i) == y.row_sum(i)))
}

pub fn congestion(x: &SolutionMatrix) -> CongestionProfile {
    CongestionProfile((0..x.d()).map(|i| x.row_sum(i)).collect())
}

/// The shifted objective `c · shift(x) = Σ_i Σ_{j <= m(i,x)} c_ij`.
pub fn shifted_value(c: &CostMatrix, x: &SolutionMatrix) -> Result<i64> {
    c.check_dims(x, "shifted value")?;
    (0..c.d()).try_fold(0i64, |acc, i| {
        acc.checked_add(c.prefix_sum(i, x.row_sum(i))?)
            .ok_or(Error::Overflow("shifted value"))
    })
}

/// Plain entrywise product sum `Σ c_ij x_ij`, without shifting.
pub fn frobenius(c: &CostMatrix, x: &SolutionMatrix) -> Result<i64> {
    c.check_dims(x, "frobenius product")?;
    let mut total = 0i64;
    for (j, col) in x.columns().iter().enumerate() {
        for i in col.support() {
            total = total
                .checked_add(c.get(i, j))
                .ok_or(Error::Overflow("frobenius product"))?;
        }
    }
    Ok(total)
}
