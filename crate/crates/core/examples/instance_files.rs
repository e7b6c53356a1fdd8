//! Writing a random instance to disk, reading it back and solving it with
//! every variant, then a short benchmark.

use shifted_opt::cli::{self, BenchConfig, SolveVariant};
use shifted_opt::instances::{parse, random_instance, serialize, RandomShape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = RandomShape {
        d: 5,
        n: 3,
        set_size: 10,
        cost_range: 5,
        shifted: true,
    };
    let text = serialize(&random_instance(11, &shape)?);
    println!("{text}");
    let inst = parse(&text)?;
    for v in ["shifted", "log", "small-n", "exact"] {
        let report = cli::solve(&inst, v.parse::<SolveVariant>()?)?;
        println!("{v:>8}: {}", report.value);
    }

    let report = cli::run_bench(&BenchConfig {
        shape,
        trials: 200,
        seed: 0,
    })?;
    println!("{}", report.summary());
    Ok(())
}
