use super::{CostTables, PrescribedCongestion};
use crate::error::{Error, Result};
use crate::model::{congestion, CostMatrix, SolutionMatrix};
use crate::oracles::{ExplicitSystem, LinearOracle};

/// Costs in `{-1, 0, 1}` whose shifted optimum reaches `target` exactly when
/// the prescribed congestion is feasible.
///
/// With `f_i(t) = 0` on `C_i` and `-1` off it, `c_ij = f_i(j) - f_i(j-1)`, so
/// `c · shift(x) = Σ_i f_i(m_i) - Σ_i f_i(0) <= -Σ_i f_i(0) = |{i : 0 ∉ C_i}|`.
pub fn congestion_to_cost(pc: &PrescribedCongestion) -> (CostMatrix, i64) {
    let (d, n) = (pc.d(), pc.n());
    let f = |i: usize, t: usize| if pc.allows(i, t) { 0i64 } else { -1 };
    let mut entries = Vec::with_capacity(d * n);
    for i in 0..d {
        entries.extend((1..=n).map(|j| f(i, j) - f(i, j - 1)));
    }
    let target = (0..d).filter(|&i| !pc.allows(i, 0)).count() as i64;
    (CostMatrix::new(d, n, entries).expect("n >= 1"), target)
}

/// `c_ij = f_i(j-1) - f_i(j)`, so that `c · shift(x) = Σ f_i(0) - social_cost(x)`.
/// Convex `f` gives nonincreasing rows.
pub fn game_to_cost(tables: &CostTables) -> Result<CostMatrix> {
    let (d, n) = (tables.d(), tables.n());
    let mut entries = Vec::with_capacity(d * n);
    for i in 0..d {
        for j in 1..=n {
            entries.push(
                tables
                    .value(i, j - 1)
                    .checked_sub(tables.value(i, j))
                    .ok_or(Error::Overflow("game costs"))?,
            );
        }
    }
    CostMatrix::new(d, n, entries)
}

/// `Σ_i f_i(m(i, x))`.
pub fn social_cost(tables: &CostTables, x: &SolutionMatrix) -> Result<i64> {
    if tables.d() != x.d() || tables.n() != x.n() {
        return Err(Error::dims(
            "social cost",
            format!("{}x{}", tables.d(), tables.n()),
            format!("{}x{}", x.d(), x.n()),
        ));
    }
    congestion(x)
        .counts()
        .iter()
        .enumerate()
        .try_fold(0i64, |acc, (i, &m)| acc.checked_add(tables.value(i, m)))
        .ok_or(Error::Overflow("social cost"))
}

/// Moves a problem over a body `T` of equal-cardinality vectors onto its
/// downward closure: `b_ij = c_ij + 2|c| + 1`. Every `b`-optimum over the
/// closure lies in `T^n` and is `c`-optimal there.
pub fn body_to_system(body: &ExplicitSystem, c: &CostMatrix) -> Result<(ExplicitSystem, CostMatrix)> {
    let d = body.ground_size();
    if c.d() != d {
        return Err(Error::dims("body cost rows", d, c.d()));
    }
    let k = body.vectors()[0].count_ones();
    if let Some(v) = body.vectors().iter().find(|v| v.count_ones() != k) {
        return Err(Error::invalid(format!(
            "body vectors must share one cardinality; {v} has {} ones, expected {k}",
            v.count_ones()
        )));
    }
    let closure = ExplicitSystem::down_closure(d, body.vectors())?;
    Ok((closure, lift_costs(c)?.0))
}

/// `b = c + (2|c| + 1)` entrywise, with the added constant.
pub(crate) fn lift_costs(c: &CostMatrix) -> Result<(CostMatrix, i64)> {
    let shift_by = c
        .l1_norm()?
        .checked_mul(2)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("lifted costs"))?;
    let entries = c
        .entries()
        .iter()
        .map(|&v| v.checked_add(shift_by).ok_or(Error::Overflow("lifted costs")))
        .collect::<Result<Vec<_>>>()?;
    Ok((CostMatrix::new(c.d(), c.n(), entries)?, shift_by))
}
