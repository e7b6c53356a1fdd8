//! Constructions behind the hardness results for shifted matching, plus the
//! independent-set encoding over an explicit list.

use std::collections::BTreeSet;

use super::{congestion_to_cost, Instance, Meta, PrescribedCongestion};
use crate::error::{Error, Result};
use crate::model::{CostMatrix, ElementVector};
use crate::oracles::{BipartiteGraph, ExplicitSystem, SystemSpec};

/// A simple undirected graph on vertices `0..vertices`; edge `e` is ground element `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::invalid(format!("edge {e} references a vertex >= {vertices}")));
            }
            if u == v {
                return Err(Error::invalid(format!("edge {e} is a loop")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::invalid(format!("edge {e} repeats {{{u}, {v}}}")));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Edges incident on `v`.
    pub fn star(&self, v: usize) -> ElementVector {
        ElementVector::from_support(
            self.edges.len(),
            self.edges
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(e, _)| e),
        )
    }

    /// All perfect matchings, by always matching the lowest free vertex.
    pub fn perfect_matchings(&self) -> Vec<ElementVector> {
        let mut out = Vec::new();
        if self.vertices % 2 == 1 {
            return out;
        }
        let mut incident = vec![Vec::new(); self.vertices];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push((e, v));
            incident[v].push((e, u));
        }
        let mut matched = vec![false; self.vertices];
        let mut chosen = Vec::new();
        self.extend(&incident, &mut matched, &mut chosen, &mut out);
        out
    }

    fn extend(
        &self,
        incident: &[Vec<(usize, usize)>],
        matched: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<ElementVector>,
    ) {
        let Some(u) = matched.iter().position(|&m| !m) else {
            out.push(ElementVector::from_support(self.edges.len(), chosen.iter().copied()));
            return;
        };
        matched[u] = true;
        for &(e, v) in &incident[u] {
            if !matched[v] {
                matched[v] = true;
                chosen.push(e);
                self.extend(incident, matched, chosen, out);
                chosen.pop();
                matched[v] = false;
            }
        }
        matched[u] = false;
    }

    pub fn complete(vertices: usize) -> Self {
        let edges = (0..vertices)
            .flat_map(|u| (u + 1..vertices).map(move |v| (u, v)))
            .collect();
        Graph { vertices, edges }
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph { vertices: 10, edges }
    }
}

/// Stars of the vertices as the member list, first column free and every
/// further use of an edge costing one. The optimum is 0 exactly when the
/// graph has an independent set of size `n`.
///
/// Isolated vertices are rejected: their empty star could be repeated in
/// every column at no cost.
pub fn independent_set_gadget(graph: &Graph, n: usize) -> Result<Instance> {
    if n == 0 {
        return Err(Error::invalid("independent-set gadget needs n >= 1"));
    }
    if let Some(v) = (0..graph.vertices()).find(|&v| graph.degree(v) == 0) {
        return Err(Error::invalid(format!("vertex {v} is isolated")));
    }
    if graph.vertices() == 0 {
        return Err(Error::invalid("independent-set gadget needs at least one vertex"));
    }
    let d = graph.edges().len();
    let stars = (0..graph.vertices()).map(|v| graph.star(v)).collect();
    let system = ExplicitSystem::new(d, stars)?;
    let mut entries = Vec::with_capacity(d * n);
    for _ in 0..d {
        entries.push(0);
        entries.extend(std::iter::repeat_n(-1, n - 1));
    }
    Ok(
        Instance::new(SystemSpec::Explicit(system), CostMatrix::new(d, n, entries)?)?.with_meta(Meta {
            target: Some(0),
            optimum: None,
            description: Some(format!(
                "independent set of size {n} in a graph with {} vertices and {d} edges",
                graph.vertices()
            )),
        }),
    )
}

/// Hexagon construction for exact cover by 3-sets, with `n = 2`.
#[derive(Debug, Clone)]
pub struct HexagonGadget {
    pub graph: BipartiteGraph,
    pub congestion: PrescribedCongestion,
    /// Number of ground elements of the cover problem.
    pub k: usize,
}

impl HexagonGadget {
    /// Perfect matchings of the gadget graph, the body `T` of the reduction.
    pub fn perfect_matchings(&self) -> Vec<ElementVector> {
        self.graph.perfect_matchings()
    }

    /// Lifts the congestion costs onto all matchings of the graph. The target
    /// is met exactly when the sets admit an exact cover.
    pub fn to_instance(&self) -> Result<Instance> {
        let (c, target) = congestion_to_cost(&self.congestion);
        let half = self.graph.left();
        let (b, target) = lift_costs(&c, target, half)?;
        Ok(
            Instance::new(SystemSpec::Bipartite(self.graph.clone()), b)?.with_meta(Meta {
                target: Some(target),
                optimum: None,
                description: Some(format!(
                    "exact cover of {} elements by {} triples",
                    self.k,
                    self.graph.edges().len() / 12
                )),
            }),
        )
    }
}

/// Lifted costs and target when every member of the body has `body_size` ones.
fn lift_costs(c: &CostMatrix, target: i64, body_size: usize) -> Result<(CostMatrix, i64)> {
    let (b, shift_by) = super::reductions::lift_costs(c)?;
    let lifted_target = (c.n() as i64 * body_size as i64)
        .checked_mul(shift_by)
        .and_then(|v| v.checked_add(target))
        .ok_or(Error::Overflow("lifted target"))?;
    Ok((b, lifted_target))
}

/// Builds the bipartite hexagon graph for triples `sets` over `0..k`.
///
/// Left side: `u[i][r]` for each set `i` and `r = 0..3` (in `(i, r)` order),
/// then `b[j]`. Right side: `v[i][r]`, then `a[j]`. Per set, the six hexagon
/// edges come first in cycle order `u0 v0 u1 v1 u2 v2`, followed by
/// `{a_r,u0} {a_s,u1} {a_t,u2} {b_r,v0} {b_s,v1} {b_t,v2}`. Hexagon edges allow
/// congestion `{0,1}`, the others `{0,2}`.
pub fn hexagon_gadget(sets: &[[usize; 3]], k: usize) -> Result<HexagonGadget> {
    let m = sets.len();
    let u = |i: usize, r: usize| 3 * i + r;
    let v = |i: usize, r: usize| 3 * i + r;
    let b = |j: usize| 3 * m + j;
    let a = |j: usize| 3 * m + j;
    let mut edges = Vec::with_capacity(12 * m);
    let mut allowed = Vec::with_capacity(12 * m);
    for (i, set) in sets.iter().enumerate() {
        let mut sorted = *set;
        sorted.sort_unstable();
        if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
            return Err(Error::invalid(format!("set {i} repeats an element")));
        }
        if sorted[2] >= k {
            return Err(Error::invalid(format!(
                "set {i} names element {} >= k = {k}",
                sorted[2]
            )));
        }
        for r in 0..3 {
            edges.push((u(i, r), v(i, r)));
            edges.push((u(i, (r + 1) % 3), v(i, r)));
        }
        for (r, &j) in sorted.iter().enumerate() {
            edges.push((u(i, r), a(j)));
        }
        for (r, &j) in sorted.iter().enumerate() {
            edges.push((b(j), v(i, r)));
        }
        allowed.extend(std::iter::repeat_n(vec![0, 1], 6));
        allowed.extend(std::iter::repeat_n(vec![0, 2], 6));
    }
    let side = 3 * m + k;
    Ok(HexagonGadget {
        graph: BipartiteGraph::new(side, side, edges)?,
        congestion: PrescribedCongestion::new(2, &allowed)?,
        k,
    })
}

/// Exact cover decision by trying every subfamily.
pub fn has_exact_cover(sets: &[[usize; 3]], k: usize) -> bool {
    assert!(sets.len() < 32, "subset enumeration limited to 31 sets");
    (0u32..1 << sets.len()).any(|mask| {
        let mut hit = vec![0u8; k];
        for (i, set) in sets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &j in set {
                    if j < k {
                        hit[j] += 1;
                    }
                }
            }
        }
        hit.iter().all(|&h| h == 1)
    })
}

/// Two edge-disjoint perfect matchings of a cubic graph, as prescribed
/// congestion `{0,1}` on every edge over the perfect matchings with `n = 2`.
#[derive(Debug, Clone)]
pub struct ColoringGadget {
    pub graph: Graph,
    pub perfect_matchings: Vec<ElementVector>,
    pub congestion: PrescribedCongestion,
}

impl ColoringGadget {
    /// The perfect matchings as an explicit body, if there are any.
    pub fn body(&self) -> Option<ExplicitSystem> {
        ExplicitSystem::new(self.graph.edges().len(), self.perfect_matchings.clone()).ok()
    }

    /// Shifted `{0,-1}` costs lifted onto the downward closure of the perfect
    /// matchings; the target is met exactly for 3-edge-colorable graphs.
    pub fn to_instance(&self) -> Result<Instance> {
        let d = self.graph.edges().len();
        let (c, target) = congestion_to_cost(&self.congestion);
        let (b, target) = lift_costs(&c, target, self.graph.vertices() / 2)?;
        let closure = ExplicitSystem::down_closure(d, &self.perfect_matchings)?;
        Ok(Instance::new(SystemSpec::Explicit(closure), b)?.with_meta(Meta {
            target: Some(target),
            optimum: None,
            description: Some(format!(
                "two disjoint perfect matchings in a cubic graph on {} vertices",
                self.graph.vertices()
            )),
        }))
    }
}

pub fn coloring_gadget(graph: &Graph) -> Result<ColoringGadget> {
    if let Some(v) = (0..graph.vertices()).find(|&v| graph.degree(v) != 3) {
        return Err(Error::invalid(format!(
            "vertex {v} has degree {}, not 3",
            graph.degree(v)
        )));
    }
    let congestion = PrescribedCongestion::new(2, &vec![vec![0, 1]; graph.edges().len()])?;
    Ok(ColoringGadget {
        graph: graph.clone(),
        perfect_matchings: graph.perfect_matchings(),
        congestion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{brute_force_sco, prescribed_congestion_feasible, DEFAULT_BUDGET};

    #[test]
    fn hexagon_sizes() {
        let g = hexagon_gadget(&[[0, 1, 2]], 3).unwrap();
        assert_eq!(g.graph.edges().len(), 12);
        assert_eq!(g.graph.left() + g.graph.right(), 12);
        let g2 = hexagon_gadget(&[[0, 1, 2], [2, 3, 4]], 6).unwrap();
        assert_eq!(g2.graph.edges().len(), 24);
        assert_eq!(g2.graph.left() + g2.graph.right(), 6 * 2 + 2 * 6);
    }

    #[test]
    fn hexagon_feasibility_single_set() {
        let yes = hexagon_gadget(&[[0, 1, 2]], 3).unwrap();
        let body = ExplicitSystem::new(12, yes.perfect_matchings()).unwrap();
        assert!(prescribed_congestion_feasible(&body, &yes.congestion, DEFAULT_BUDGET).unwrap());

        let no = hexagon_gadget(&[[0, 1, 2]], 4).unwrap();
        assert!(no.perfect_matchings().is_empty());
    }

    #[test]
    fn hexagon_rejects_bad_sets() {
        assert!(hexagon_gadget(&[[0, 0, 1]], 3).is_err());
        assert!(hexagon_gadget(&[[0, 1, 3]], 3).is_err());
    }

    #[test]
    fn exact_cover_decisions() {
        assert!(has_exact_cover(&[[0, 1, 2], [3, 4, 5], [1, 2, 3]], 6));
        assert!(!has_exact_cover(&[[0, 1, 2], [2, 3, 4], [1, 4, 5]], 6));
        assert!(!has_exact_cover(&[[0, 1, 2]], 4));
    }

    #[test]
    fn k4_is_colorable_petersen_is_not() {
        let k4 = coloring_gadget(&Graph::complete(4)).unwrap();
        assert_eq!(k4.perfect_matchings.len(), 3);
        assert!(prescribed_congestion_feasible(&k4.body().unwrap(), &k4.congestion, DEFAULT_BUDGET).unwrap());

        let pet = coloring_gadget(&Graph::petersen()).unwrap();
        assert_eq!(pet.perfect_matchings.len(), 6);
        assert!(!prescribed_congestion_feasible(&pet.body().unwrap(), &pet.congestion, DEFAULT_BUDGET).unwrap());
        assert!(pet.congestion.set(0) == vec![0, 1]);
    }

    #[test]
    fn coloring_requires_cubic() {
        assert!(coloring_gadget(&Graph::complete(5)).is_err());
    }

    #[test]
    fn independent_set_examples() {
        let triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let solve = |g: &Graph, n| {
            let inst = independent_set_gadget(g, n).unwrap();
            let SystemSpec::Explicit(sys) = &inst.system else {
                unreachable!()
            };
            brute_force_sco(sys, &inst.c, DEFAULT_BUDGET).unwrap().0
        };
        assert!(solve(&triangle, 2) < 0);
        assert_eq!(solve(&path, 2), 0);
        assert_eq!(solve(&triangle, 1), 0);
        let isolated = Graph::new(3, vec![(0, 1)]).unwrap();
        assert!(independent_set_gadget(&isolated, 2).is_err());
    }
}
