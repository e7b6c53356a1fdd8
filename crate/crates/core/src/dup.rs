//! The disjoint union problem: pick `k` members of the system with pairwise
//! disjoint supports maximizing the weight of their union.
//!
//! [`greedy_dup`] runs the max-coverage greedy through the linear oracle and
//! then makes the columns disjoint, achieving ratio `1 - (1 - 1/k)^k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::model::{ElementVector, SolutionMatrix};
use crate::oracles::LinearOracle;

/// `k` pairwise disjoint members and the weight of their union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalSelection {
    pub columns: Vec<ElementVector>,
    pub value: i64,
}

impl OrthogonalSelection {
    pub fn k(&self) -> usize {
        self.columns.len()
    }

    pub fn to_matrix(&self, d: usize) -> Result<SolutionMatrix> {
        SolutionMatrix::new(d, self.columns.clone())
    }

    /// Union of the columns.
    pub fn covered(&self, d: usize) -> ElementVector {
        let mut union = ElementVector::zeros(d);
        for col in &self.columns {
            for i in col.support() {
                union.set(i, true);
            }
        }
        union
    }
}

/// A (possibly approximate) solver for the disjoint union problem with a
/// known worst-case ratio.
pub trait DupSolver {
    fn solve(&self, oracle: &dyn LinearOracle, k: usize, weights: &[i64]) -> Result<OrthogonalSelection>;

    /// Proven approximation ratio for `k` columns.
    fn ratio(&self, k: usize) -> BigRational;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyDup;

impl DupSolver for GreedyDup {
    fn solve(&self, oracle: &dyn LinearOracle, k: usize, weights: &[i64]) -> Result<OrthogonalSelection> {
        greedy_dup(oracle, k, weights)
    }

    fn ratio(&self, k: usize) -> BigRational {
        greedy_ratio(k)
    }
}

pub fn greedy_dup<O: LinearOracle + ?Sized>(oracle: &O, k: usize, weights: &[i64]) -> Result<OrthogonalSelection> {
    if k == 0 {
        return Err(Error::invalid("disjoint union needs k >= 1"));
    }
    let d = oracle.ground_size();
    if weights.len() != d {
        return Err(Error::dims("disjoint union weights", d, weights.len()));
    }
    let mut residual = weights.to_vec();
    let mut columns = Vec::with_capacity(k);
    for _ in 0..k {
        let s = oracle.maximize(&residual)?;
        if s.len() != d {
            return Err(Error::dims("oracle answer", d, s.len()));
        }
        if s.is_zero() {
            break;
        }
        for i in s.support() {
            residual[i] = 0;
        }
        columns.push(s);
    }
    columns.resize(k, ElementVector::zeros(d));
    let x = orthogonalize(&SolutionMatrix::new(d, columns)?);
    let value = x
        .column_sum()
        .expect("orthogonalized columns are disjoint")
        .weight(weights)?;
    Ok(OrthogonalSelection {
        columns: x.into_columns(),
        value,
    })
}

/// Keeps only the leftmost 1 of every row.
pub fn orthogonalize(x: &SolutionMatrix) -> SolutionMatrix {
    let mut out = SolutionMatrix::zeros(x.d(), x.n());
    for i in 0..x.d() {
        if let Some(j) = (0..x.n()).find(|&j| x.get(i, j)) {
            out.set(i, j, true);
        }
    }
    out
}

/// `1 - (1 - 1/k)^k = (k^k - (k-1)^k) / k^k`.
pub fn greedy_ratio(k: usize) -> BigRational {
    assert!(k >= 1, "greedy ratio needs k >= 1");
    let kk = BigInt::from(k);
    let power = kk.clone().pow(k);
    let lower = (kk - BigInt::one()).pow(k);
    BigRational::new(&power - lower, power)
}
