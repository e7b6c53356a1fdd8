//! Linear optimization oracles for independence systems.
//!
//! Every system here is accessed only through [`LinearOracle::maximize`]:
//! given integer weights `w`, return a member `s` maximizing `w·s`. For an
//! independence system the optimum is never negative, and all oracles in this
//! module leave out elements with negative weight.

mod bipartite;
mod explicit;
mod lift;
mod matroid;

pub use bipartite::BipartiteGraph;
pub use explicit::ExplicitSystem;
pub use lift::{flatten, lift_maximize, unflatten, LiftOracle};
pub use matroid::{MatroidSpec, PartitionBlock};

use crate::error::{Error, Result};
use crate::model::ElementVector;

pub trait LinearOracle {
    fn ground_size(&self) -> usize;

    fn maximize(&self, weights: &[i64]) -> Result<ElementVector>;
}

/// Systems that can also answer membership queries, used to verify
/// feasibility of computed solutions.
pub trait Membership {
    fn contains(&self, s: &ElementVector) -> bool;
}

impl<T: LinearOracle + ?Sized> LinearOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn maximize(&self, weights: &[i64]) -> Result<ElementVector> {
        (**self).maximize(weights)
    }
}

pub(crate) fn check_weights(context: &'static str, d: usize, weights: &[i64]) -> Result<()> {
    if weights.len() != d {
        return Err(Error::dims(context, d, weights.len()));
    }
    Ok(())
}

/// Any of the supported system presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemSpec {
    Explicit(ExplicitSystem),
    Matroid(MatroidSpec),
    Bipartite(BipartiteGraph),
}

impl SystemSpec {
    /// Lists every member by testing all `2^d` subsets. Only meant for small `d`.
    pub fn enumerate(&self, max_ground: usize) -> Result<ExplicitSystem> {
        match self {
            SystemSpec::Explicit(sys) => Ok(sys.clone()),
            _ => {
                let d = self.ground_size();
                if d > max_ground {
                    return Err(Error::Unsupported(format!(
                        "enumerating a system over {d} elements (limit {max_ground})"
                    )));
                }
                let members = (0u64..1 << d)
                    .map(|mask| ElementVector::from_support(d, (0..d).filter(|i| mask >> i & 1 == 1)))
                    .filter(|s| self.contains(s))
                    .collect();
                ExplicitSystem::new(d, members)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SystemSpec::Explicit(_) => "explicit",
            SystemSpec::Matroid(MatroidSpec::Uniform { .. }) => "uniform",
            SystemSpec::Matroid(MatroidSpec::Partition { .. }) => "partition",
            SystemSpec::Matroid(MatroidSpec::Graphic { .. }) => "graphic",
            SystemSpec::Bipartite(_) => "bipartite",
        }
    }

    /// Whether the system is known to be downward monotone.
    pub fn is_independence_system(&self) -> bool {
        match self {
            SystemSpec::Explicit(sys) => sys.is_downward_closed(),
            _ => true,
        }
    }
}

impl LinearOracle for SystemSpec {
    fn ground_size(&self) -> usize {
        match self {
            SystemSpec::Explicit(s) => s.ground_size(),
            SystemSpec::Matroid(s) => s.ground_size(),
            SystemSpec::Bipartite(s) => s.ground_size(),
        }
    }

    fn maximize(&self, weights: &[i64]) -> Result<ElementVector> {
        match self {
            SystemSpec::Explicit(s) => s.maximize(weights),
            SystemSpec::Matroid(s) => s.maximize(weights),
            SystemSpec::Bipartite(s) => s.maximize(weights),
        }
    }
}

impl Membership for SystemSpec {
    fn contains(&self, s: &ElementVector) -> bool {
        match self {
            SystemSpec::Explicit(sys) => sys.contains(s),
            SystemSpec::Matroid(sys) => sys.contains(s),
            SystemSpec::Bipartite(sys) => sys.contains(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_uniform_matches_binomials() {
        let sys = SystemSpec::Matroid(MatroidSpec::uniform(4, 2).unwrap());
        let explicit = sys.enumerate(10).unwrap();
        assert_eq!(explicit.len(), 1 + 4 + 6);
        assert!(explicit.is_downward_closed());
    }

    #[test]
    fn enumerate_refuses_large_ground_sets() {
        let sys = SystemSpec::Matroid(MatroidSpec::uniform(30, 2).unwrap());
        assert!(matches!(sys.enumerate(20), Err(Error::Unsupported(_))));
    }
}
