use std::collections::BTreeSet;

use super::{check_weights, LinearOracle, Membership};
use crate::error::{Error, Result};
use crate::model::ElementVector;

/// A system given as a finite list of distinct vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitSystem {
    d: usize,
    vectors: Vec<ElementVector>,
    downward_closed: bool,
}

impl ExplicitSystem {
    /// List order is kept; it decides oracle ties.
    pub fn new(d: usize, vectors: Vec<ElementVector>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::invalid("explicit system must list at least one vector"));
        }
        let mut seen = BTreeSet::new();
        for v in &vectors {
            if v.len() != d {
                return Err(Error::dims("explicit system vector", d, v.len()));
            }
            if !seen.insert(v) {
                return Err(Error::invalid(format!("vector {v} listed twice")));
            }
        }
        let downward_closed = is_downward_closed(&seen);
        Ok(ExplicitSystem {
            d,
            vectors,
            downward_closed,
        })
    }

    /// The independence system generated by `generators`: every vector below some
    /// generator, listed in lexicographic order (so the zero vector comes first).
    pub fn down_closure(d: usize, generators: &[ElementVector]) -> Result<Self> {
        let mut members = BTreeSet::new();
        members.insert(ElementVector::zeros(d));
        for g in generators {
            if g.len() != d {
                return Err(Error::dims("generator", d, g.len()));
            }
            let support: Vec<usize> = g.support().collect();
            if support.len() >= 63 {
                return Err(Error::Unsupported("closure of a vector with 63+ ones".into()));
            }
            for mask in 0u64..1 << support.len() {
                members.insert(ElementVector::from_support(
                    d,
                    support
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &i)| i),
                ));
            }
        }
        Ok(ExplicitSystem {
            d,
            vectors: members.into_iter().collect(),
            downward_closed: true,
        })
    }

    pub fn vectors(&self) -> &[ElementVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.downward_closed
    }
}

fn is_downward_closed(members: &BTreeSet<&ElementVector>) -> bool {
    let Some(first) = members.iter().next() else {
        return false;
    };
    if !first.is_zero() {
        return false;
    }
    // closure under single-element removal implies closure under all subsets
    members.iter().all(|v| {
        v.support().all(|i| {
            let mut smaller = (*v).clone();
            smaller.set(i, false);
            members.contains(&smaller)
        })
    })
}

impl LinearOracle for ExplicitSystem {
    fn ground_size(&self) -> usize {
        self.d
    }

    /// Scans the list; the first maximizer wins. For downward-closed lists the
    /// zero-weight coordinates are then dropped, which keeps membership and value.
    fn maximize(&self, weights: &[i64]) -> Result<ElementVector> {
        check_weights("explicit oracle weights", self.d, weights)?;
        let mut best: Option<(&ElementVector, i64)> = None;
        for v in &self.vectors {
            let value = v.weight(weights)?;
            if best.is_none_or(|(_, b)| value > b) {
                best = Some((v, value));
            }
        }
        let (winner, _) = best.expect("explicit system is never empty");
        let mut s = winner.clone();
        if self.downward_closed {
            for (i, &w) in weights.iter().enumerate() {
                if w <= 0 {
                    s.set(i, false);
                }
            }
        }
        Ok(s)
    }
}

impl Membership for ExplicitSystem {
    fn contains(&self, s: &ElementVector) -> bool {
        self.vectors.iter().any(|v| v == s)
    }
}
