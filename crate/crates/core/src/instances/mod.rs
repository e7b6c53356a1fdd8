//! Problem instances: exact enumeration baselines, the reductions and
//! hardness gadgets, random generators, and the instance file format.

mod brute;
mod format;
mod gadgets;
mod random;
mod reductions;

pub use brute::{
    brute_force_dup, brute_force_generalized, brute_force_sco, lifted_disjoint_unions, multiset_count,
    prescribed_congestion_feasible, shift_classes, DEFAULT_BUDGET,
};
pub use format::{parse, serialize};
pub use gadgets::{
    coloring_gadget, has_exact_cover, hexagon_gadget, independent_set_gadget, ColoringGadget, Graph, HexagonGadget,
};
pub use random::{random_costs, random_down_closed, random_instance, RandomShape};
pub(crate) use reductions::lift_costs;
pub use reductions::{body_to_system, congestion_to_cost, game_to_cost, social_cost};

use crate::error::{Error, Result};
use crate::model::CostMatrix;
use crate::oracles::{LinearOracle, SystemSpec};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Meta {
    pub target: Option<i64>,
    pub optimum: Option<i64>,
    pub description: Option<String>,
}

/// A system, a `d x n` cost matrix, and optional known values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub system: SystemSpec,
    pub c: CostMatrix,
    pub meta: Meta,
}

impl Instance {
    pub fn new(system: SystemSpec, c: CostMatrix) -> Result<Self> {
        if c.d() != system.ground_size() {
            return Err(Error::dims("instance cost rows", system.ground_size(), c.d()));
        }
        Ok(Instance {
            system,
            c,
            meta: Meta::default(),
        })
    }

    pub fn with_meta(mut self, meta: Meta) -> Self {
        self.meta = meta;
        self
    }

    pub fn d(&self) -> usize {
        self.c.d()
    }

    pub fn n(&self) -> usize {
        self.c.n()
    }
}

/// Congestion costs `f_i : {0..n} -> Z`, one table of length `n + 1` per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostTables {
    n: usize,
    tables: Vec<Vec<i64>>,
}

impl CostTables {
    pub fn new(tables: Vec<Vec<i64>>) -> Result<Self> {
        let len = tables
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("cost tables need at least one element"))?;
        if len < 2 {
            return Err(Error::invalid("cost tables need n >= 1 (length >= 2)"));
        }
        if let Some(bad) = tables.iter().find(|t| t.len() != len) {
            return Err(Error::dims("cost table length", len, bad.len()));
        }
        Ok(CostTables { n: len - 1, tables })
    }

    pub fn d(&self) -> usize {
        self.tables.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, i: usize, t: usize) -> i64 {
        self.tables[i][t]
    }

    pub fn table(&self, i: usize) -> &[i64] {
        &self.tables[i]
    }

    /// First `(element, t)` with `f(t-1) - 2f(t) + f(t+1) < 0`.
    pub fn convexity_violation(&self) -> Option<(usize, usize)> {
        self.tables.iter().enumerate().find_map(|(i, f)| {
            f.windows(3)
                .position(|w| (w[0] as i128) - 2 * (w[1] as i128) + (w[2] as i128) < 0)
                .map(|t| (i, t + 1))
        })
    }

    pub fn is_convex(&self) -> bool {
        self.convexity_violation().is_none()
    }
}

/// Target congestion sets `C_i ⊆ {0..n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrescribedCongestion {
    n: usize,
    allowed: Vec<Vec<bool>>,
}

impl PrescribedCongestion {
    pub fn new(n: usize, sets: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("prescribed congestion needs n >= 1"));
        }
        let mut allowed = Vec::with_capacity(sets.len());
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::invalid(format!("congestion set {i} is empty")));
            }
            let mut row = vec![false; n + 1];
            for &t in set {
                *row.get_mut(t)
                    .ok_or_else(|| Error::invalid(format!("congestion set {i} contains {t} > n = {n}")))? = true;
            }
            allowed.push(row);
        }
        Ok(PrescribedCongestion { n, allowed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.allowed.len()
    }

    pub fn allows(&self, i: usize, t: usize) -> bool {
        self.allowed[i][t]
    }

    pub fn set(&self, i: usize) -> Vec<usize> {
        (0..=self.n).filter(|&t| self.allowed[i][t]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convexity_check() {
        assert!(CostTables::new(vec![vec![0, 1, 4], vec![3, 3, 3]]).unwrap().is_convex());
        let bad = CostTables::new(vec![vec![0, 1, 4], vec![0, 2, 3]]).unwrap();
        assert_eq!(bad.convexity_violation(), Some((1, 1)));
        assert!(CostTables::new(vec![vec![1]]).is_err());
        assert!(CostTables::new(vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn prescribed_congestion_validation() {
        let pc = PrescribedCongestion::new(2, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(pc.set(0), vec![0, 1]);
        assert!(pc.allows(1, 2) && !pc.allows(1, 0));
        assert!(PrescribedCongestion::new(2, &[vec![]]).is_err());
        assert!(PrescribedCongestion::new(2, &[vec![3]]).is_err());
    }
}
