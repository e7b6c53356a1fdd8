use super::{check_weights, LinearOracle, Membership};
use crate::error::{Error, Result};
use crate::model::ElementVector;

/// Matchings of a bipartite multigraph. Edge `e = (l, r)` joins left vertex `l`
/// to right vertex `r` (both 0-based) and is ground element `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(e) = edges.iter().position(|&(l, r)| l >= left || r >= right) {
            return Err(Error::invalid(format!(
                "edge {e} = {:?} leaves the {left}x{right} bipartition",
                edges[e]
            )));
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Perfect matchings (every vertex on both sides covered), in a fixed order.
    /// Empty when the sides differ in size.
    pub fn perfect_matchings(&self) -> Vec<ElementVector> {
        let mut out = Vec::new();
        if self.left != self.right {
            return out;
        }
        let mut incident = vec![Vec::new(); self.left];
        for (e, &(l, _)) in self.edges.iter().enumerate() {
            incident[l].push(e);
        }
        let mut right_used = vec![false; self.right];
        let mut chosen = Vec::with_capacity(self.left);
        self.extend_perfect(0, &incident, &mut right_used, &mut chosen, &mut out);
        out
    }

    fn extend_perfect(
        &self,
        l: usize,
        incident: &[Vec<usize>],
        right_used: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<ElementVector>,
    ) {
        if l == self.left {
            out.push(ElementVector::from_support(self.edges.len(), chosen.iter().copied()));
            return;
        }
        for &e in &incident[l] {
            let r = self.edges[e].1;
            if !right_used[r] {
                right_used[r] = true;
                chosen.push(e);
                self.extend_perfect(l + 1, incident, right_used, chosen, out);
                chosen.pop();
                right_used[r] = false;
            }
        }
    }
}

impl LinearOracle for BipartiteGraph {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    /// Maximum-weight matching on the strictly positive edges, solved as a
    /// square assignment problem with zero-weight padding.
    fn maximize(&self, weights: &[i64]) -> Result<ElementVector> {
        check_weights("matching oracle weights", self.edges.len(), weights)?;
        let size = self.left.max(self.right);
        let mut best_edge: Vec<Option<usize>> = vec![None; size * size];
        for (e, &(l, r)) in self.edges.iter().enumerate() {
            if weights[e] <= 0 {
                continue;
            }
            let slot = &mut best_edge[l * size + r];
            if slot.is_none_or(|prev| weights[e] > weights[prev]) {
                *slot = Some(e);
            }
        }
        let cost: Vec<i64> = best_edge.iter().map(|slot| slot.map_or(0, |e| -weights[e])).collect();
        let assignment = min_cost_assignment(size, &cost);
        let chosen = assignment
            .iter()
            .enumerate()
            .filter_map(|(l, &r)| best_edge[l * size + r]);
        Ok(ElementVector::from_support(self.edges.len(), chosen))
    }
}

impl Membership for BipartiteGraph {
    fn contains(&self, s: &ElementVector) -> bool {
        if s.len() != self.edges.len() {
            return false;
        }
        let mut left_used = vec![false; self.left];
        let mut right_used = vec![false; self.right];
        s.support().all(|e| {
            let (l, r) = self.edges[e];
            let free = !left_used[l] && !right_used[r];
            left_used[l] = true;
            right_used[r] = true;
            free
        })
    }
}

/// Hungarian method with potentials on a square `size x size` cost matrix
/// (row-major). Returns the column assigned to each row.
fn min_cost_assignment(size: usize, cost: &[i64]) -> Vec<usize> {
    const INF: i64 = i64::MAX / 4;
    // 1-based with a virtual column 0
    let mut u = vec![0i64; size + 1];
    let mut v = vec![0i64; size + 1];
    let mut row_of = vec![0usize; size + 1];
    let mut way = vec![0usize; size + 1];
    for row in 1..=size {
        row_of[0] = row;
        let mut col0 = 0;
        let mut min_v = vec![INF; size + 1];
        let mut used = vec![false; size + 1];
        loop {
            used[col0] = true;
            let r = row_of[col0];
            let mut delta = INF;
            let mut col1 = 0;
            for col in 1..=size {
                if used[col] {
                    continue;
                }
                let reduced = cost[(r - 1) * size + (col - 1)] - u[r] - v[col];
                if reduced < min_v[col] {
                    min_v[col] = reduced;
                    way[col] = col0;
                }
                if min_v[col] < delta {
                    delta = min_v[col];
                    col1 = col;
                }
            }
            for col in 0..=size {
                if used[col] {
                    u[row_of[col]] += delta;
                    v[col] -= delta;
                } else {
                    min_v[col] -= delta;
                }
            }
            col0 = col1;
            if row_of[col0] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col0];
            row_of[col0] = row_of[prev];
            col0 = prev;
            if col0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; size];
    for col in 1..=size {
        if row_of[col] > 0 {
            assignment[row_of[col] - 1] = col - 1;
        }
    }
    assignment
}
