//! Logarithmic-ratio approximation for arbitrary costs, with the candidate
//! value of every level and a brute-force comparison.

use shifted_opt::instances::{brute_force_sco, random_instance, RandomShape, DEFAULT_BUDGET};
use shifted_opt::oracles::SystemSpec;
use shifted_opt::sco::log_approx;

fn main() -> shifted_opt::Result<()> {
    let shape = RandomShape {
        d: 6,
        n: 5,
        set_size: 14,
        cost_range: 8,
        shifted: false,
    };
    let inst = random_instance(2024, &shape)?;
    let result = log_approx(&inst.system, &inst.c)?;
    for lvl in &result.levels {
        println!(
            "level {}: {} disjoint columns x {} copies -> {}",
            lvl.level, lvl.k, lvl.copies, lvl.value
        );
    }
    let SystemSpec::Explicit(sys) = &inst.system else {
        unreachable!()
    };
    let (opt, _) = brute_force_sco(sys, &inst.c, DEFAULT_BUDGET)?;
    println!(
        "best level {} value {}, optimum {opt}, proven ratio {}",
        result.level, result.value, result.bound
    );
    Ok(())
}
