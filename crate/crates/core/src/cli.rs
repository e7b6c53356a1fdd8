//! Drivers behind the `sco` binary: solving instance files, ratio benchmarks
//! against brute force, and gadget generation.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::instances::{
    self, brute_force_sco, coloring_gadget, congestion_to_cost, hexagon_gadget, independent_set_gadget,
    random_instance, CostTables, Graph, Instance, Meta, PrescribedCongestion, RandomShape, DEFAULT_BUDGET,
};
use crate::model::{CostMatrix, ElementVector, SolutionMatrix};
use crate::oracles::{ExplicitSystem, MatroidSpec, SystemSpec};
use crate::sco::{self, convex_identical, ratio_bound, ApproxResult, Variant};

/// Largest ground set the exact solver will enumerate for oracle-only systems.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        #[source]
        source: Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 1 for I/O and parse failures, 2 for everything the input was rejected for.
    pub fn exit_code(&self) -> i32 {
        let inner = match self {
            CliError::Io { .. } => return 1,
            CliError::Input { source, .. } | CliError::Core(source) => source,
        };
        match inner {
            Error::Parse { .. } | Error::InvalidInstance { .. } => 1,
            _ => 2,
        }
    }
}

pub const EXIT_VIOLATION: i32 = 3;

pub fn read_instance(path: &Path) -> std::result::Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    instances::parse(&text).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> std::result::Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn approx(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------- solve

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveVariant {
    Approx(Variant),
    /// Rows of `c` read as increments of convex tables; exact when rows are nondecreasing.
    Convex,
    Exact,
}

impl FromStr for SolveVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" => Ok(SolveVariant::Convex),
            "exact" => Ok(SolveVariant::Exact),
            other => other.parse().map(SolveVariant::Approx).map_err(|_| {
                Error::invalid(format!(
                    "unknown variant `{other}` (expected shifted, log, small-n, convex or exact)"
                ))
            }),
        }
    }
}

impl fmt::Display for SolveVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveVariant::Approx(v) => write!(f, "{v}"),
            SolveVariant::Convex => f.write_str("convex"),
            SolveVariant::Exact => f.write_str("exact"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub variant: SolveVariant,
    pub value: i64,
    /// Proven lower bound on `value / OPT`.
    pub bound: BigRational,
    pub level: Option<usize>,
    pub solution: SolutionMatrix,
    pub target: Option<i64>,
}

impl SolveReport {
    pub fn target_met(&self) -> Option<bool> {
        self.target.map(|t| self.value >= t)
    }

    pub fn render(&self, print_solution: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "variant: {}", self.variant);
        let _ = writeln!(out, "value: {}", self.value);
        let _ = writeln!(out, "bound: {} (~{:.6})", self.bound, approx(&self.bound));
        if let Some(level) = self.level {
            let _ = writeln!(out, "level: {level}");
        }
        if let (Some(t), Some(met)) = (self.target, self.target_met()) {
            let _ = writeln!(out, "target: {t} ({})", if met { "met" } else { "not met" });
        }
        if print_solution {
            let _ = writeln!(out, "solution:\n{}", self.solution);
        }
        out
    }
}

/// `F_i(t) = c_i1 + ... + c_it`, so that `Σ F_i(m_i) = c · shift(x)`.
pub fn prefix_tables(c: &CostMatrix) -> Result<CostTables> {
    let tables = (0..c.d())
        .map(|i| (0..=c.n()).map(|t| c.prefix_sum(i, t)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if tables.is_empty() {
        return Err(Error::invalid("convex variant needs at least one element"));
    }
    CostTables::new(tables)
}

pub fn solve(instance: &Instance, variant: SolveVariant) -> Result<SolveReport> {
    let c = &instance.c;
    let sys = &instance.system;
    let (value, bound, level, solution) = match variant {
        SolveVariant::Approx(v) => {
            let ApproxResult {
                solution,
                value,
                level,
                bound,
                ..
            } = match v {
                Variant::ShiftedConstant => sco::constant_shifted(sys, c)?,
                Variant::GeneralLog => sco::log_approx(sys, c)?,
                Variant::SmallN => sco::small_n_approx(sys, c)?,
            };
            (value, bound, Some(level), solution)
        }
        SolveVariant::Convex => {
            let tables = prefix_tables(c)?;
            let (s, value) = convex_identical(sys, &tables)?;
            let solution = SolutionMatrix::new(c.d(), vec![s; c.n()])?;
            (value, BigRational::one(), None, solution)
        }
        SolveVariant::Exact => {
            let explicit = sys.enumerate(ENUMERATION_LIMIT)?;
            let (value, solution) = brute_force_sco(&explicit, c, DEFAULT_BUDGET)?;
            (value, BigRational::one(), None, solution)
        }
    };
    Ok(SolveReport {
        variant,
        value,
        bound,
        level,
        solution,
        target: instance.meta.target,
    })
}

pub fn cmd_solve(path: &Path, variant: SolveVariant) -> std::result::Result<SolveReport, CliError> {
    let instance = read_instance(path)?;
    Ok(solve(&instance, variant)?)
}

// ---------------------------------------------------------------- bench

pub const CSV_HEADER: &str = "seed,d,n,set_size,variant,apx,opt,ratio,bound,violated";

#[derive(Debug, Clone, PartialEq)]
pub enum Measurement {
    Done {
        apx: i64,
        opt: i64,
        bound: BigRational,
    },
    /// Brute force ran past its budget.
    Skipped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub seed: u64,
    pub d: usize,
    pub n: usize,
    pub set_size: usize,
    pub variant: Variant,
    pub measurement: Measurement,
}

impl BenchRecord {
    /// `apx / opt`, defined when `opt > 0`.
    pub fn ratio(&self) -> Option<BigRational> {
        match &self.measurement {
            Measurement::Done { apx, opt, .. } if *opt > 0 => Some(rational(*apx, *opt)),
            _ => None,
        }
    }

    /// `opt > 0` and `apx < bound * opt`, compared by cross-multiplication.
    pub fn violated(&self) -> bool {
        match &self.measurement {
            Measurement::Done { apx, opt, bound } => {
                *opt > 0 && BigInt::from(*apx) * bound.denom() < bound.numer() * BigInt::from(*opt)
            }
            Measurement::Skipped => false,
        }
    }

    pub fn csv_row(&self) -> String {
        let head = format!("{},{},{},{},{}", self.seed, self.d, self.n, self.set_size, self.variant);
        match &self.measurement {
            Measurement::Done { apx, opt, bound } => {
                let ratio = self.ratio().map(|r| r.to_string()).unwrap_or_default();
                format!("{head},{apx},{opt},{ratio},{bound},{}", self.violated())
            }
            Measurement::Skipped => format!("{head},,,,,skipped"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub shape: RandomShape,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
}

impl BenchReport {
    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }

    pub fn violations(&self) -> usize {
        self.records.iter().filter(|r| r.violated()).count()
    }

    pub fn skipped(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.measurement == Measurement::Skipped)
            .count()
    }

    /// Smallest observed ratio per variant, over rows where it is defined.
    pub fn min_ratios(&self) -> BTreeMap<&'static str, BigRational> {
        let mut mins: BTreeMap<&'static str, BigRational> = BTreeMap::new();
        for r in &self.records {
            if let Some(ratio) = r.ratio() {
                mins.entry(r.variant.name())
                    .and_modify(|m| {
                        if ratio < *m {
                            *m = ratio.clone();
                        }
                    })
                    .or_insert(ratio);
            }
        }
        mins
    }

    pub fn summary(&self) -> String {
        let mins = self.min_ratios();
        let parts: Vec<String> = if mins.is_empty() {
            vec!["no positive optima".into()]
        } else {
            mins.iter()
                .map(|(v, r)| format!("{v}={r} (~{:.4})", approx(r)))
                .collect()
        };
        format!(
            "min ratio: {}; rows: {}, skipped: {}, violated: {}",
            parts.join(" "),
            self.records.len(),
            self.skipped(),
            self.violations()
        )
    }
}

/// The algorithms that apply to a shape: `shifted` needs shifted costs and
/// `small-n` needs `n ∈ {2, 3, 4}`.
pub fn bench_variants(shape: &RandomShape) -> Vec<Variant> {
    let mut out = Vec::new();
    if shape.shifted {
        out.push(Variant::ShiftedConstant);
    }
    out.push(Variant::GeneralLog);
    if (2..=4).contains(&shape.n) {
        out.push(Variant::SmallN);
    }
    out
}

fn bench_trial(seed: u64, shape: &RandomShape, budget: u64) -> Result<Vec<BenchRecord>> {
    let instance = random_instance(seed, shape)?;
    let SystemSpec::Explicit(explicit) = &instance.system else {
        unreachable!("random instances are explicit")
    };
    let opt = match brute_force_sco(explicit, &instance.c, budget) {
        Ok((opt, _)) => Some(opt),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    bench_variants(shape)
        .into_iter()
        .map(|variant| {
            let measurement = match opt {
                None => Measurement::Skipped,
                Some(opt) => {
                    let result = match variant {
                        Variant::ShiftedConstant => sco::constant_shifted(explicit, &instance.c)?,
                        Variant::GeneralLog => sco::log_approx(explicit, &instance.c)?,
                        Variant::SmallN => sco::small_n_approx(explicit, &instance.c)?,
                    };
                    Measurement::Done {
                        apx: result.value,
                        opt,
                        bound: ratio_bound(variant, shape.n)?,
                    }
                }
            };
            Ok(BenchRecord {
                seed,
                d: shape.d,
                n: shape.n,
                set_size: explicit.len(),
                variant,
                measurement,
            })
        })
        .collect()
}

/// Runs `trials` random instances with seeds `seed, seed + 1, ...` in
/// parallel. Rows come out in trial order.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    run_bench_with_budget(config, DEFAULT_BUDGET)
}

pub fn run_bench_with_budget(config: &BenchConfig, budget: u64) -> Result<BenchReport> {
    if config.shape.n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let per_trial = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| bench_trial(config.seed.wrapping_add(t), &config.shape, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(BenchReport {
        records: per_trial.into_iter().flatten().collect(),
    })
}

pub fn cmd_bench(config: &BenchConfig, out: &Path) -> std::result::Result<BenchReport, CliError> {
    let report = run_bench(config)?;
    write_file(out, &report.csv())?;
    Ok(report)
}

// ---------------------------------------------------------------- gadgets

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    IndependentSet,
    Hexagon,
    Coloring,
    Congestion,
    LiftBody,
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "independent-set" => GadgetKind::IndependentSet,
            "hexagon" => GadgetKind::Hexagon,
            "coloring" => GadgetKind::Coloring,
            "congestion" => GadgetKind::Congestion,
            "lift-body" => GadgetKind::LiftBody,
            other => {
                return Err(Error::invalid(format!(
                    "unknown gadget `{other}` (expected independent-set, hexagon, coloring, congestion or lift-body)"
                )))
            }
        })
    }
}

/// Gadget flags; which ones are required depends on the kind.
///
/// * `graph`: `petersen`, `k<N>` (complete graph) or `<V>:<u>-<v>,...` with
///   1-based vertices, e.g. `3:1-2,2-3,1-3`.
/// * `sets`: 1-based triples separated by `;`, e.g. `1,2,3;4,5,6`.
/// * `allowed`: congestion sets separated by `;`, e.g. `0,1;0,2`.
/// * `vectors`: 0/1 strings separated by `,`.
/// * `costs`: cost rows separated by `;`, entries by `,`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GadgetParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub graph: Option<String>,
    pub sets: Option<String>,
    pub allowed: Option<String>,
    pub vectors: Option<String>,
    pub costs: Option<String>,
}

fn required<'a, T>(value: &'a Option<T>, flag: &str, kind: &str) -> Result<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| Error::invalid(format!("gadget {kind} needs --{flag}")))
}

fn number<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad {what} `{}`", s.trim())))
}

fn list<T: FromStr>(s: &str, sep: char, what: &str) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(sep).map(|part| number(part, what)).collect()
}

pub fn parse_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("petersen") {
        return Ok(Graph::petersen());
    }
    if let Some(size) = spec.strip_prefix(['k', 'K']) {
        return Ok(Graph::complete(number(size, "complete graph size")?));
    }
    let (v, edges) = spec
        .split_once(':')
        .ok_or_else(|| Error::invalid(format!("graph `{spec}` is not petersen, k<N> or <V>:<edges>")))?;
    let vertices: usize = number(v, "vertex count")?;
    let edges = edges
        .split(',')
        .filter(|e| !e.trim().is_empty())
        .map(|e| {
            let (a, b) = e
                .split_once('-')
                .ok_or_else(|| Error::invalid(format!("edge `{e}` is not u-v")))?;
            let (a, b): (usize, usize) = (number(a, "vertex")?, number(b, "vertex")?);
            if a == 0 || b == 0 {
                return Err(Error::invalid("graph vertices are 1-based"));
            }
            Ok((a - 1, b - 1))
        })
        .collect::<Result<Vec<_>>>()?;
    Graph::new(vertices, edges)
}

pub fn parse_triples(spec: &str) -> Result<Vec<[usize; 3]>> {
    spec.split(';')
        .map(|t| {
            let items: Vec<usize> = list(t, ',', "set element")?;
            match items[..] {
                [a, b, c] if a > 0 && b > 0 && c > 0 => Ok([a - 1, b - 1, c - 1]),
                _ => Err(Error::invalid(format!("`{t}` is not a triple of 1-based elements"))),
            }
        })
        .collect()
}

fn parse_vectors(spec: &str) -> Result<Vec<ElementVector>> {
    spec.split(',').map(|v| v.trim().parse()).collect()
}

fn parse_rows(spec: &str) -> Result<Vec<Vec<i64>>> {
    spec.split(';').map(|r| list(r, ',', "cost")).collect()
}

pub fn build_gadget(kind: GadgetKind, p: &GadgetParams) -> Result<Instance> {
    match kind {
        GadgetKind::IndependentSet => {
            let graph = parse_graph(required(&p.graph, "graph", "independent-set")?)?;
            independent_set_gadget(&graph, *required(&p.n, "n", "independent-set")?)
        }
        GadgetKind::Hexagon => {
            let sets = parse_triples(required(&p.sets, "sets", "hexagon")?)?;
            hexagon_gadget(&sets, *required(&p.k, "k", "hexagon")?)?.to_instance()
        }
        GadgetKind::Coloring => {
            let graph = parse_graph(required(&p.graph, "graph", "coloring")?)?;
            coloring_gadget(&graph)?.to_instance()
        }
        GadgetKind::Congestion => congestion_instance(p),
        GadgetKind::LiftBody => lift_body_instance(p),
    }
}

/// Prescribed congestion over the down-closure of `vectors`, or over all of
/// `{0,1}^d` when no vectors are given.
fn congestion_instance(p: &GadgetParams) -> Result<Instance> {
    let n = *required(&p.n, "n", "congestion")?;
    let sets: Vec<Vec<usize>> = required(&p.allowed, "allowed", "congestion")?
        .split(';')
        .map(|s| list(s, ',', "congestion"))
        .collect::<Result<_>>()?;
    let pc = PrescribedCongestion::new(n, &sets)?;
    let (c, target) = congestion_to_cost(&pc);
    let d = pc.d();
    let system = match &p.vectors {
        Some(v) => SystemSpec::Explicit(ExplicitSystem::down_closure(d, &parse_vectors(v)?)?),
        None => SystemSpec::Matroid(MatroidSpec::uniform(d, d)?),
    };
    Ok(Instance::new(system, c)?.with_meta(Meta {
        target: Some(target),
        optimum: None,
        description: Some(format!("prescribed congestion on {d} elements with n = {n}")),
    }))
}

/// Lifts costs over an equal-cardinality body onto its down-closure. The
/// target is the lifted value of the best solution inside the body.
fn lift_body_instance(p: &GadgetParams) -> Result<Instance> {
    let body_vectors = parse_vectors(required(&p.vectors, "vectors", "lift-body")?)?;
    let d = body_vectors.first().map(ElementVector::len).unwrap_or(0);
    let body = ExplicitSystem::new(d, body_vectors)?;
    let c = CostMatrix::from_rows(parse_rows(required(&p.costs, "costs", "lift-body")?)?)?;
    let (closure, b) = instances::body_to_system(&body, &c)?;
    let (body_opt, _) = brute_force_sco(&body, &c, DEFAULT_BUDGET)?;
    let (_, shift_by) = instances::lift_costs(&c)?;
    let per_column = body.vectors()[0].count_ones() as i64;
    let target = shift_by
        .checked_mul(per_column * c.n() as i64)
        .and_then(|v| v.checked_add(body_opt))
        .ok_or(Error::Overflow("lifted target"))?;
    Ok(Instance::new(SystemSpec::Explicit(closure), b)?.with_meta(Meta {
        target: Some(target),
        optimum: Some(target),
        description: Some(format!("body of {} vectors lifted to its down-closure", body.len())),
    }))
}

pub fn cmd_gadget(kind: GadgetKind, params: &GadgetParams, out: &Path) -> std::result::Result<Instance, CliError> {
    let instance = build_gadget(kind, params)?;
    write_file(out, &instances::serialize(&instance))?;
    Ok(instance)
}
