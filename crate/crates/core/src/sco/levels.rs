use num_bigint::BigInt;
use num_rational::BigRational;

use super::clean::{best_prefix, clean};
use super::{ceil_log2, ratio_bound, ApproxResult, LevelOutcome, Variant};
use crate::dup::{DupSolver, GreedyDup};
use crate::error::{Error, Result};
use crate::model::{shifted_value, CostMatrix, ElementVector, SolutionMatrix};
use crate::oracles::{LiftOracle, LinearOracle};

fn check_rows<O: LinearOracle + ?Sized>(oracle: &O, c: &CostMatrix) -> Result<()> {
    if c.d() != oracle.ground_size() {
        return Err(Error::dims("cost matrix rows", oracle.ground_size(), c.d()));
    }
    Ok(())
}

pub fn constant_shifted<O: LinearOracle>(oracle: &O, c: &CostMatrix) -> Result<ApproxResult> {
    constant_shifted_with(&GreedyDup, oracle, c)
}

/// Solves the disjoint union problem over the n-lift with weights `c` and
/// turns each lifted matrix into one column by summing its columns.
pub fn constant_shifted_with<D: DupSolver, O: LinearOracle>(
    solver: &D,
    oracle: &O,
    c: &CostMatrix,
) -> Result<ApproxResult> {
    check_rows(oracle, c)?;
    if let Some((row, column)) = c.shift_violation() {
        return Err(Error::NotShifted { row, column });
    }
    let (d, n) = (c.d(), c.n());
    let lift = LiftOracle::new(oracle, n)?;
    let selection = solver.solve(&lift, n, c.entries())?;
    let columns = selection
        .columns
        .iter()
        .map(|flat| {
            let mut y = ElementVector::zeros(d);
            for cell in flat.support() {
                debug_assert!(!y.get(cell / n), "lift-feasible matrices have row sums <= 1");
                y.set(cell / n, true);
            }
            y
        })
        .collect();
    let solution = SolutionMatrix::new(d, columns)?;
    let value = shifted_value(c, &solution)?;
    Ok(ApproxResult {
        solution,
        value,
        level: 0,
        bound: scale_bound(solver, Variant::ShiftedConstant, n)?,
        levels: vec![LevelOutcome {
            level: 0,
            k: n,
            copies: 1,
            value,
        }],
    })
}

pub fn log_approx<O: LinearOracle>(oracle: &O, c: &CostMatrix) -> Result<ApproxResult> {
    log_approx_with(&GreedyDup, oracle, c)
}

/// Levels `l = 0..=⌈log₂ n⌉`: `k(l) = ⌊n / 2^l⌋` disjoint columns each copied
/// `2^l` times while `2^l <= n`, otherwise one column copied `n` times.
pub fn log_approx_with<D: DupSolver, O: LinearOracle>(solver: &D, oracle: &O, c: &CostMatrix) -> Result<ApproxResult> {
    let n = c.n();
    let plan: Vec<(usize, usize)> = (0..=ceil_log2(n))
        .map(|level| {
            let width = 1usize << level;
            if width <= n {
                (n / width, width)
            } else {
                (1, n)
            }
        })
        .collect();
    run_levels(solver, oracle, c, &plan, scale_bound(solver, Variant::GeneralLog, n)?)
}

pub fn small_n_approx<O: LinearOracle>(oracle: &O, c: &CostMatrix) -> Result<ApproxResult> {
    small_n_approx_with(&GreedyDup, oracle, c)
}

/// The level sets used for `n = 2, 3, 4`; for `n = 3` the single-column level
/// is copied three times.
pub fn small_n_approx_with<D: DupSolver, O: LinearOracle>(
    solver: &D,
    oracle: &O,
    c: &CostMatrix,
) -> Result<ApproxResult> {
    let plan: &[(usize, usize)] = match c.n() {
        2 => &[(2, 1), (1, 2)],
        3 => &[(3, 1), (1, 3)],
        4 => &[(4, 1), (2, 2), (1, 4)],
        n => return Err(Error::Unsupported(format!("small-n algorithm for n = {n}"))),
    };
    run_levels(solver, oracle, c, plan, scale_bound(solver, Variant::SmallN, c.n())?)
}

/// The small-n table is derived for the greedy ratios and stays valid for any
/// solver at least as good.
fn scale_bound<D: DupSolver>(solver: &D, variant: Variant, n: usize) -> Result<BigRational> {
    match variant {
        Variant::ShiftedConstant => Ok(solver.ratio(n)),
        Variant::GeneralLog => {
            let denom = BigInt::from(4 * ceil_log2(n) + 8);
            Ok(solver.ratio(n) / BigRational::from_integer(denom))
        }
        Variant::SmallN => ratio_bound(variant, n),
    }
}

/// Each `(k, copies)` entry of `plan` is one level, indexed by position.
fn run_levels<D: DupSolver, O: LinearOracle>(
    solver: &D,
    oracle: &O,
    c: &CostMatrix,
    plan: &[(usize, usize)],
    bound: BigRational,
) -> Result<ApproxResult> {
    check_rows(oracle, c)?;
    let mut best: Option<(SolutionMatrix, i64, usize)> = None;
    let mut levels = Vec::with_capacity(plan.len());
    for (level, &(k, copies)) in plan.iter().enumerate() {
        let (solution, value) = run_level(solver, oracle, c, k, copies)?;
        levels.push(LevelOutcome {
            level,
            k,
            copies,
            value,
        });
        if best.as_ref().is_none_or(|(_, v, _)| value > *v) {
            best = Some((solution, value, level));
        }
    }
    let (solution, value, level) = best.expect("at least one level");
    Ok(ApproxResult {
        solution,
        value,
        level,
        bound,
        levels,
    })
}

fn run_level<D: DupSolver, O: LinearOracle>(
    solver: &D,
    oracle: &O,
    c: &CostMatrix,
    k: usize,
    copies: usize,
) -> Result<(SolutionMatrix, i64)> {
    let (d, n) = (c.d(), c.n());
    debug_assert!(k >= 1 && k * copies <= n);
    // best profit from covering element i at most `copies` times
    let weights = (0..d)
        .map(|i| best_prefix(c.row(i), copies).map(|(p, _)| p))
        .collect::<Result<Vec<_>>>()?;
    let selection = solver.solve(oracle, k, &weights)?;
    let mut columns = Vec::with_capacity(n);
    for col in &selection.columns {
        columns.extend(std::iter::repeat_n(col.clone(), copies));
    }
    columns.resize(n, ElementVector::zeros(d));
    let expanded = SolutionMatrix::new(d, columns)?;
    let cleaned = clean(c, &expanded)?;
    let value = shifted_value(c, &cleaned)?;
    Ok((cleaned, value))
}
