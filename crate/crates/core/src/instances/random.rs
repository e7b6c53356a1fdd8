use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Instance;
use crate::error::{Error, Result};
use crate::model::{CostMatrix, ElementVector};
use crate::oracles::{ExplicitSystem, SystemSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomShape {
    pub d: usize,
    pub n: usize,
    /// Target number of members; the result may be smaller when `2^d` is.
    pub set_size: usize,
    /// Costs are drawn uniformly from `-cost_range..=cost_range`.
    pub cost_range: i64,
    pub shifted: bool,
}

/// A downward-closed explicit system with at most `size` members, grown by
/// adding the closures of random vectors while they fit.
pub fn random_down_closed<R: Rng>(rng: &mut R, d: usize, size: usize) -> Result<ExplicitSystem> {
    if size == 0 {
        return Err(Error::invalid("system size must be at least 1"));
    }
    if d > 16 {
        return Err(Error::Unsupported("random systems beyond 16 elements".into()));
    }
    let mut members: BTreeSet<ElementVector> = BTreeSet::new();
    members.insert(ElementVector::zeros(d));
    let cap = size.min(1 << d);
    let mut attempts = 0;
    while members.len() < cap && attempts < 64 * size {
        attempts += 1;
        let density = rng.gen_range(0.15..0.85);
        let g = ElementVector::from_bits((0..d).map(|_| rng.gen_bool(density)).collect());
        let closure = ExplicitSystem::down_closure(d, &[g])?;
        let fresh = closure.vectors().iter().filter(|v| !members.contains(*v)).count();
        if fresh > 0 && members.len() + fresh <= cap {
            members.extend(closure.vectors().iter().cloned());
        }
    }
    ExplicitSystem::new(d, members.into_iter().collect())
}

pub fn random_costs<R: Rng>(rng: &mut R, d: usize, n: usize, range: i64, shifted: bool) -> Result<CostMatrix> {
    if range < 0 {
        return Err(Error::invalid("cost range must be nonnegative"));
    }
    let mut rows: Vec<Vec<i64>> = (0..d)
        .map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect())
        .collect();
    if shifted {
        for row in &mut rows {
            row.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    CostMatrix::new(d, n, rows.into_iter().flatten().collect())
}

/// Reproducible instance over a random downward-closed explicit system.
pub fn random_instance(seed: u64, shape: &RandomShape) -> Result<Instance> {
    if shape.n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let system = random_down_closed(&mut rng, shape.d, shape.set_size)?;
    let c = random_costs(&mut rng, shape.d, shape.n, shape.cost_range, shape.shifted)?;
    Instance::new(SystemSpec::Explicit(system), c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape() -> RandomShape {
        RandomShape {
            d: 5,
            n: 3,
            set_size: 12,
            cost_range: 6,
            shifted: true,
        }
    }

    #[test]
    fn same_seed_same_instance() {
        assert_eq!(
            random_instance(7, &shape()).unwrap(),
            random_instance(7, &shape()).unwrap()
        );
        assert_ne!(
            random_instance(7, &shape()).unwrap(),
            random_instance(8, &shape()).unwrap()
        );
    }

    #[test]
    fn shifted_rows_are_nonincreasing() {
        for seed in 0..50 {
            assert!(random_instance(seed, &shape()).unwrap().c.is_shifted());
        }
    }

    #[test]
    fn systems_are_closed_and_sized() {
        for seed in 0..50 {
            let inst = random_instance(seed, &shape()).unwrap();
            let SystemSpec::Explicit(sys) = &inst.system else {
                unreachable!()
            };
            assert!(sys.is_downward_closed());
            assert!(sys.len() <= 12);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(random_down_closed(&mut rng, 2, 100).unwrap().len(), 4);
    }
}
