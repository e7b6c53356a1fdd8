use crate::error::{Error, Result};
use crate::instances::CostTables;
use crate::model::ElementVector;
use crate::oracles::LinearOracle;

/// Maximizes `Σ_i f_i(congestion_i)` over `S^n` for separable convex `f`.
///
/// Some optimum repeats one member `s` in all `n` columns, and
/// `Σ_i f_i(n s_i) = Σ_i f_i(0) + Σ_i (f_i(n) - f_i(0)) s_i` is linear in `s`,
/// so a single oracle call suffices. Returns `s` and the objective value.
pub fn convex_identical<O: LinearOracle>(oracle: &O, tables: &CostTables) -> Result<(ElementVector, i64)> {
    if tables.d() != oracle.ground_size() {
        return Err(Error::dims("cost tables", oracle.ground_size(), tables.d()));
    }
    if let Some((row, at)) = tables.convexity_violation() {
        return Err(Error::NotConvex { row, at });
    }
    let n = tables.n();
    let weights = (0..tables.d())
        .map(|i| {
            tables
                .value(i, n)
                .checked_sub(tables.value(i, 0))
                .ok_or(Error::Overflow("convex weights"))
        })
        .collect::<Result<Vec<_>>>()?;
    let s = oracle.maximize(&weights)?;
    let value = (0..tables.d()).try_fold(0i64, |acc, i| {
        let at = if s.get(i) { n } else { 0 };
        acc.checked_add(tables.value(i, at))
            .ok_or(Error::Overflow("convex objective"))
    })?;
    Ok((s, value))
}
