use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shifted_opt::cli::{self, BenchConfig, CliError, GadgetKind, GadgetParams, SolveVariant, EXIT_VIOLATION};
use shifted_opt::instances::RandomShape;

#[derive(Parser)]
#[command(
    name = "sco",
    version,
    about = "Shifted combinatorial optimization solver and benchmarks"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve {
        file: PathBuf,
        /// shifted, log, small-n, convex or exact.
        #[arg(long, default_value = "log")]
        variant: SolveVariant,
        #[arg(long)]
        print_solution: bool,
    },
    /// Compare approximations with brute force on random instances and write a CSV.
    Bench {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set_size: usize,
        #[arg(long)]
        cost_range: i64,
        #[arg(long, action = clap::ArgAction::Set)]
        shifted: bool,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a reduction or hardness gadget as an instance file.
    Gadget {
        /// independent-set, hexagon, coloring, congestion or lift-body.
        kind: GadgetKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// petersen, k<N>, or <V>:<u>-<v>,... with 1-based vertices.
        #[arg(long)]
        graph: Option<String>,
        /// 1-based triples, e.g. "1,2,3;4,5,6".
        #[arg(long)]
        sets: Option<String>,
        /// Congestion sets per element, e.g. "0,1;0,2".
        #[arg(long)]
        allowed: Option<String>,
        /// 0/1 strings, e.g. "110,011".
        #[arg(long)]
        vectors: Option<String>,
        /// Cost rows, e.g. "0,-1;2,-3".
        #[arg(long)]
        costs: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(args: Args) -> Result<i32, CliError> {
    match args.command {
        Command::Solve {
            file,
            variant,
            print_solution,
        } => {
            let report = cli::cmd_solve(&file, variant)?;
            print!("{}", report.render(print_solution));
            Ok(0)
        }
        Command::Bench {
            d,
            n,
            set_size,
            cost_range,
            shifted,
            trials,
            seed,
            out,
        } => {
            let config = BenchConfig {
                shape: RandomShape {
                    d,
                    n,
                    set_size,
                    cost_range,
                    shifted,
                },
                trials,
                seed,
            };
            let report = cli::cmd_bench(&config, &out)?;
            println!("{}", report.summary());
            Ok(if report.violations() > 0 { EXIT_VIOLATION } else { 0 })
        }
        Command::Gadget {
            kind,
            n,
            k,
            graph,
            sets,
            allowed,
            vectors,
            costs,
            out,
        } => {
            let params = GadgetParams {
                n,
                k,
                graph,
                sets,
                allowed,
                vectors,
                costs,
            };
            let instance = cli::cmd_gadget(kind, &params, &out)?;
            println!(
                "wrote {} ({} elements, n = {}, target {:?})",
                out.display(),
                instance.d(),
                instance.n(),
                instance.meta.target
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
