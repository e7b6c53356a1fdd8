//! Separable convex congestion costs are maximized by repeating one member,
//! found with a single oracle call.

use shifted_opt::instances::{brute_force_generalized, CostTables, DEFAULT_BUDGET};
use shifted_opt::oracles::{MatroidSpec, SystemSpec};
use shifted_opt::sco::convex_identical;

fn main() -> shifted_opt::Result<()> {
    let system = SystemSpec::Matroid(MatroidSpec::uniform(4, 2)?);
    let tables = CostTables::new(vec![
        vec![0, 1, 4, 9],
        vec![5, 3, 2, 2],
        vec![0, 0, 0, 12],
        vec![-2, -1, 1, 4],
    ])?;
    let (s, value) = convex_identical(&system, &tables)?;
    let exact = brute_force_generalized(&system.enumerate(10)?, &tables, DEFAULT_BUDGET)?;
    println!(
        "repeat {s} in all {} columns: value {value}, exact optimum {exact}",
        tables.n()
    );
    Ok(())
}
