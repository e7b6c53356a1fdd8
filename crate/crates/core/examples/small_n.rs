//! The dedicated algorithms for two, three and four columns against the
//! general one. For these sizes they build (a subset of) the same level
//! candidates, so the values agree; what changes is the proven ratio.

use shifted_opt::instances::{random_instance, RandomShape};
use shifted_opt::sco::{log_approx, ratio_bound, small_n_approx, Variant};

fn main() -> shifted_opt::Result<()> {
    for n in 2..=4 {
        let shape = RandomShape {
            d: 6,
            n,
            set_size: 12,
            cost_range: 6,
            shifted: false,
        };
        let (mut small, mut general) = (0, 0);
        for seed in 0..200 {
            let inst = random_instance(seed, &shape)?;
            small += small_n_approx(&inst.system, &inst.c)?.value;
            general += log_approx(&inst.system, &inst.c)?.value;
        }
        println!(
            "n = {n}: total small-n {small} (bound {}), total log {general} (bound {})",
            ratio_bound(Variant::SmallN, n)?,
            ratio_bound(Variant::GeneralLog, n)?
        );
    }
    Ok(())
}
