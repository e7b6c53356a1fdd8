//! Approximation algorithms for `max { c · shift(x) : x in S^n }`.
//!
//! * [`constant_shifted`]: nonincreasing cost rows, ratio `1 - (1 - 1/n)^n`.
//! * [`log_approx`]: arbitrary costs, ratio `β / (4⌈log₂ n⌉ + 8)`.
//! * [`small_n_approx`]: tighter level sets for `n ∈ {2, 3, 4}`.
//! * [`convex_identical`]: separable convex objectives of the congestion.
//!
//! Every algorithm is deterministic and uses the system only through its
//! linear optimization oracle.

mod clean;
mod convex;
mod levels;

pub use clean::{clean, potential_profit, PotentialProfile};
pub use convex::convex_identical;
pub use levels::{
    constant_shifted, constant_shifted_with, log_approx, log_approx_with, small_n_approx, small_n_approx_with,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::dup::greedy_ratio;
use crate::error::{Error, Result};
use crate::model::SolutionMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    ShiftedConstant,
    GeneralLog,
    SmallN,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::ShiftedConstant => "shifted",
            Variant::GeneralLog => "log",
            Variant::SmallN => "small-n",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shifted" => Ok(Variant::ShiftedConstant),
            "log" => Ok(Variant::GeneralLog),
            "small-n" => Ok(Variant::SmallN),
            other => Err(Error::invalid(format!("unknown variant {other:?}"))),
        }
    }
}

/// One candidate built by an algorithm: `k` disjoint columns, each used `copies` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelOutcome {
    pub level: usize,
    pub k: usize,
    pub copies: usize,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub solution: SolutionMatrix,
    pub value: i64,
    /// Level of the winning candidate.
    pub level: usize,
    pub bound: BigRational,
    pub levels: Vec<LevelOutcome>,
}

/// `⌈log₂ n⌉` for `n >= 1`.
pub fn ceil_log2(n: usize) -> usize {
    assert!(n >= 1);
    (usize::BITS - (n - 1).leading_zeros()) as usize
}

/// Proven worst-case ratio of each algorithm.
pub fn ratio_bound(variant: Variant, n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let frac = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
    match variant {
        Variant::ShiftedConstant => Ok(greedy_ratio(n)),
        Variant::GeneralLog => {
            let denom = 4 * ceil_log2(n) + 8;
            Ok(greedy_ratio(n) / BigRational::from_integer(BigInt::from(denom)))
        }
        Variant::SmallN => match n {
            2 => Ok(frac(3, 5)),
            3 => Ok(frac(19, 42)),
            4 => Ok(frac(2625, 6692)),
            _ => Err(Error::Unsupported(format!("small-n bound for n = {n}"))),
        },
    }
}

/// `1 - (1 - 1/n)^n` in floating point, for sizes where the exact rational is too large.
pub fn greedy_ratio_f64(n: usize) -> f64 {
    let n = n as f64;
    1.0 - (n * (-1.0 / n).ln_1p()).exp()
}
