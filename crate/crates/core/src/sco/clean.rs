use crate::error::{Error, Result};
use crate::model::{CostMatrix, SolutionMatrix};

/// Per-element best prefix of the cost row up to the current congestion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialProfile {
    /// `P_i`: the largest prefix sum `Σ_{j<=l} c_ij` over `0 <= l <= m(i,x)`.
    pub potentials: Vec<i64>,
    /// The smallest `l` attaining `P_i`.
    pub retained: Vec<usize>,
}

impl PotentialProfile {
    pub fn total(&self) -> Result<i64> {
        self.potentials
            .iter()
            .try_fold(0i64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow("total potential profit"))
    }
}

/// Best prefix of `row[..=limit]`, where the empty prefix counts. Returns
/// `(value, length)` with the shortest maximizing length.
pub(crate) fn best_prefix(row: &[i64], limit: usize) -> Result<(i64, usize)> {
    let mut best = (0i64, 0usize);
    let mut running = 0i64;
    for (j, &v) in row[..limit].iter().enumerate() {
        running = running.checked_add(v).ok_or(Error::Overflow("prefix sum"))?;
        if running > best.0 {
            best = (running, j + 1);
        }
    }
    Ok(best)
}

pub fn potential_profit(c: &CostMatrix, x: &SolutionMatrix) -> Result<PotentialProfile> {
    if c.d() != x.d() || c.n() != x.n() {
        return Err(Error::dims(
            "potential profit",
            format!("{}x{}", c.d(), c.n()),
            format!("{}x{}", x.d(), x.n()),
        ));
    }
    let mut potentials = Vec::with_capacity(c.d());
    let mut retained = Vec::with_capacity(c.d());
    for i in 0..c.d() {
        let (p, len) = best_prefix(c.row(i), x.row_sum(i))?;
        potentials.push(p);
        retained.push(len);
    }
    Ok(PotentialProfile { potentials, retained })
}

/// Drops surplus ones so that row `i` keeps exactly `p_i` of them. Ones in
/// the highest-index columns go first. The result is below `x` entrywise and
/// its shifted value is the total potential profit of `x`.
pub fn clean(c: &CostMatrix, x: &SolutionMatrix) -> Result<SolutionMatrix> {
    let profile = potential_profit(c, x)?;
    let mut out = x.clone();
    for i in 0..x.d() {
        let mut surplus = x.row_sum(i) - profile.retained[i];
        for j in (0..x.n()).rev() {
            if surplus == 0 {
                break;
            }
            if out.get(i, j) {
                out.set(i, j, false);
                surplus -= 1;
            }
        }
    }
    Ok(out)
}
