use super::{check_weights, LinearOracle};
use crate::error::{Error, Result};
use crate::model::{CostMatrix, ElementVector, SolutionMatrix};

/// Oracle for the n-lift: `d x n` 0/1 matrices whose column sum lies in the
/// underlying system. Matrices are flattened row-major, cell `(i, j)` at `i * n + j`.
///
/// Each query makes exactly one call to the inner oracle.
#[derive(Debug, Clone)]
pub struct LiftOracle<O> {
    inner: O,
    n: usize,
}

impl<O: LinearOracle> LiftOracle<O> {
    pub fn new(inner: O, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("lift needs n >= 1"));
        }
        Ok(LiftOracle { inner, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }
}

impl<O: LinearOracle> LinearOracle for LiftOracle<O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size() * self.n
    }

    fn maximize(&self, weights: &[i64]) -> Result<ElementVector> {
        let (d, n) = (self.inner.ground_size(), self.n);
        check_weights("lift oracle weights", d * n, weights)?;
        let mut best_column = Vec::with_capacity(d);
        let mut row_weights = Vec::with_capacity(d);
        for row in weights.chunks(n) {
            // lowest column among the maximizers
            let (j, &w) = row.iter().enumerate().rev().max_by_key(|(_, &w)| w).expect("n >= 1");
            best_column.push(j);
            row_weights.push(w);
        }
        let s = self.inner.maximize(&row_weights)?;
        Ok(ElementVector::from_support(
            d * n,
            s.support().map(|i| i * n + best_column[i]),
        ))
    }
}

/// Best lift-feasible matrix for `c`; one oracle call.
pub fn lift_maximize<O: LinearOracle>(oracle: &O, c: &CostMatrix) -> Result<SolutionMatrix> {
    if c.d() != oracle.ground_size() {
        return Err(Error::dims("lift cost rows", oracle.ground_size(), c.d()));
    }
    let lift = LiftOracle::new(oracle, c.n())?;
    let flat = lift.maximize(c.entries())?;
    unflatten(c.d(), c.n(), &flat)
}

pub fn flatten(x: &SolutionMatrix) -> ElementVector {
    let n = x.n();
    let mut flat = ElementVector::zeros(x.d() * n);
    for (j, col) in x.columns().iter().enumerate() {
        for i in col.support() {
            flat.set(i * n + j, true);
        }
    }
    flat
}

pub fn unflatten(d: usize, n: usize, flat: &ElementVector) -> Result<SolutionMatrix> {
    if flat.len() != d * n {
        return Err(Error::dims("flattened matrix", d * n, flat.len()));
    }
    let mut x = SolutionMatrix::zeros(d, n);
    for cell in flat.support() {
        x.set(cell / n, cell % n, true);
    }
    Ok(x)
}
