//! Small worked instances, each cross-checked against exhaustive enumeration.

mod common;

use common::*;
use proptest::prelude::*;
use shifted_opt::dup::greedy_dup;
use shifted_opt::instances::{
    body_to_system, brute_force_sco, coloring_gadget, congestion_to_cost, game_to_cost, hexagon_gadget,
    independent_set_gadget, prescribed_congestion_feasible, social_cost, CostTables, Graph, PrescribedCongestion,
    DEFAULT_BUDGET,
};
use shifted_opt::model::{frobenius, shift, shifted_value, CostMatrix, ElementVector, SolutionMatrix};
use shifted_opt::oracles::{lift_maximize, BipartiteGraph, ExplicitSystem, LinearOracle, MatroidSpec, SystemSpec};
use shifted_opt::sco::{constant_shifted, convex_identical, log_approx};

fn ev(s: &str) -> ElementVector {
    s.parse().unwrap()
}

fn rank_one_pair() -> ExplicitSystem {
    ExplicitSystem::new(2, vec![ev("00"), ev("10"), ev("01")]).unwrap()
}

/// Best member by enumerating all subsets through the membership test.
fn best_by_enumeration(spec: &SystemSpec, w: &[i64]) -> i64 {
    let mem = members(&spec.enumerate(12).unwrap());
    mem.iter()
        .map(|m| m.iter().zip(w).map(|(&b, &wi)| b as i64 * wi).sum())
        .max()
        .unwrap()
}

#[test]
fn graphic_triangle() {
    let g = SystemSpec::Matroid(MatroidSpec::graphic(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap());
    let w = [5, 4, 3];
    let best = g.maximize(&w).unwrap();
    assert_eq!(best, ev("110"));
    assert_eq!(best.weight(&w).unwrap(), 9);
    assert_eq!(best_by_enumeration(&g, &w), 9);
    assert_eq!(g.enumerate(12).unwrap().len(), 7);
}

#[test]
fn bipartite_k22() {
    let k22 = SystemSpec::Bipartite(BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap());
    let w = [1, 9, 9, 1];
    assert_eq!(k22.maximize(&w).unwrap(), ev("0110"));
    assert_eq!(best_by_enumeration(&k22, &w), 18);
    assert_eq!(k22.enumerate(12).unwrap().len(), 7);
}

#[test]
fn lift_example() {
    let c = CostMatrix::from_rows(vec![vec![5, 1], vec![2, 7]]).unwrap();
    let x = lift_maximize(&rank_one_pair(), &c).unwrap();
    assert_eq!(x, SolutionMatrix::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap());
    assert_eq!(frobenius(&c, &x).unwrap(), 7);
    assert_eq!(lift_opt(&members(&rank_one_pair()), &rows(&c), 2), 7);
}

#[test]
fn dup_example() {
    let sel = greedy_dup(&rank_one_pair(), 2, &[3, 5]).unwrap();
    assert_eq!(sel.value, 8);
    let mut cols: Vec<String> = sel.columns.iter().map(ToString::to_string).collect();
    cols.sort();
    assert_eq!(cols, ["01", "10"]);
    assert_eq!(dup_opt(&members(&rank_one_pair()), 2, &[3, 5]), 8);
}

#[test]
fn shifted_example() {
    let c = CostMatrix::from_rows(vec![vec![3, 1], vec![2, 2]]).unwrap();
    let result = constant_shifted(&rank_one_pair(), &c).unwrap();
    assert_eq!(result.value, 5);
    assert_eq!(sco_opt(&members(&rank_one_pair()), &rows(&c), 2), 5);
    assert_eq!(brute_force_sco(&rank_one_pair(), &c, DEFAULT_BUDGET).unwrap().0, 5);
    let mut cols: Vec<String> = result.solution.columns().iter().map(ToString::to_string).collect();
    cols.sort();
    assert_eq!(cols, ["01", "10"]);
}

#[test]
fn independent_set_cost_example() {
    let c = CostMatrix::from_rows(vec![vec![0, -1]]).unwrap();
    let x = SolutionMatrix::from_rows(&[vec![1, 1]]).unwrap();
    assert_eq!(shifted_value(&c, &x).unwrap(), -1);
}

#[test]
fn independent_set_gadgets() {
    let opt = |g: Graph| {
        let inst = independent_set_gadget(&g, 2).unwrap();
        sco_opt(&members(explicit(&inst.system)), &rows(&inst.c), 2)
    };
    assert!(opt(Graph::complete(3)) < 0);
    assert_eq!(opt(Graph::new(3, vec![(0, 1), (1, 2)]).unwrap()), 0);
}

#[test]
fn convex_squares() {
    let sys = MatroidSpec::uniform(2, 1).unwrap();
    let tables = CostTables::new(vec![vec![0, 1, 4, 9], vec![0, 1, 4, 9]]).unwrap();
    let (s, value) = convex_identical(&sys, &tables).unwrap();
    assert_eq!(value, 9);
    assert_eq!(s.count_ones(), 1);
    let mem = members(&SystemSpec::Matroid(sys).enumerate(4).unwrap());
    assert_eq!(generalized_opt(&mem, &[vec![0, 1, 4, 9], vec![0, 1, 4, 9]], 3), 9);
}

#[test]
fn convex_linear_matches_constant_rows() {
    let sys = MatroidSpec::uniform(3, 2).unwrap();
    let slopes = [4, -1, 2];
    let n = 3;
    let tables = CostTables::new(
        slopes
            .iter()
            .map(|&a| (0..=n as i64).map(|t| a * t).collect())
            .collect(),
    )
    .unwrap();
    let (_, value) = convex_identical(&sys, &tables).unwrap();
    let c = CostMatrix::from_rows(slopes.iter().map(|&a| vec![a; n]).collect()).unwrap();
    let explicit = SystemSpec::Matroid(sys).enumerate(4).unwrap();
    assert_eq!(value, brute_force_sco(&explicit, &c, DEFAULT_BUDGET).unwrap().0);
    assert_eq!(value, 18);
}

#[test]
fn log_on_one_column_is_exact() {
    let sys = ExplicitSystem::down_closure(3, &[ev("110"), ev("011")]).unwrap();
    let c = CostMatrix::from_rows(vec![vec![2], vec![-1], vec![4]]).unwrap();
    assert_eq!(
        log_approx(&sys, &c).unwrap().value,
        sco_opt(&members(&sys), &rows(&c), 1)
    );
}

#[test]
fn hexagon_single_set() {
    let g = hexagon_gadget(&[[0, 1, 2]], 3).unwrap();
    assert_eq!(g.graph.edges().len(), 12);
    assert_eq!(g.graph.left() + g.graph.right(), 12);
    let body = ExplicitSystem::new(12, g.perfect_matchings()).unwrap();
    assert!(prescribed_congestion_feasible(&body, &g.congestion, DEFAULT_BUDGET).unwrap());
    let no = hexagon_gadget(&[[0, 1, 2]], 4).unwrap();
    let pms = no.perfect_matchings();
    let feasible = !pms.is_empty()
        && prescribed_congestion_feasible(&ExplicitSystem::new(12, pms).unwrap(), &no.congestion, DEFAULT_BUDGET)
            .unwrap();
    assert!(!feasible);
}

#[test]
fn coloring_k4_and_petersen() {
    let k4 = coloring_gadget(&Graph::complete(4)).unwrap();
    assert!(prescribed_congestion_feasible(&k4.body().unwrap(), &k4.congestion, DEFAULT_BUDGET).unwrap());
    let p = coloring_gadget(&Graph::petersen()).unwrap();
    assert_eq!(p.perfect_matchings.len(), 6);
    assert!(!prescribed_congestion_feasible(&p.body().unwrap(), &p.congestion, DEFAULT_BUDGET).unwrap());
}

#[test]
fn lifting_example() {
    let body = ExplicitSystem::new(2, vec![ev("10"), ev("01")]).unwrap();
    let c = CostMatrix::from_rows(vec![vec![0, -1], vec![0, -1]]).unwrap();
    let (closure, b) = body_to_system(&body, &c).unwrap();
    assert_eq!(rows(&b), [vec![5, 4], vec![5, 4]]);
    let (_, winners) = sco_argmax(&members(&closure), &rows(&b), 2);
    let closed = members(&closure);
    assert!(winners
        .iter()
        .all(|w| w.iter().all(|&p| closed[p].iter().sum::<u8>() == 1)));
}

#[test]
fn congestion_rows() {
    let pc = PrescribedCongestion::new(2, &[vec![0, 1], vec![0, 1, 2], vec![2]]).unwrap();
    let (c, target) = congestion_to_cost(&pc);
    assert_eq!(rows(&c), [vec![0, -1], vec![0, 0], vec![0, 1]]);
    assert_eq!(target, 1);
}

fn matrix(d: usize, n: usize) -> impl Strategy<Value = Vec<Bits>> {
    prop::collection::vec(prop::collection::vec(0u8..=1, n), d)
}

proptest! {
    #[test]
    fn shifted_value_matches_definition(
        (c, x) in (1usize..6, 1usize..5).prop_flat_map(|(d, n)| (
            prop::collection::vec(prop::collection::vec(-9i64..=9, n), d),
            matrix(d, n),
        ))
    ) {
        let cm = cost_matrix(&c);
        let xm = SolutionMatrix::from_rows(&x).unwrap();
        prop_assert_eq!(shifted_value(&cm, &xm).unwrap(), shifted_value_def(&c, &x));
        prop_assert_eq!(frobenius(&cm, &shift(&xm)).unwrap(), shifted_value_def(&c, &x));
    }

    #[test]
    fn game_identity(
        (tables, x) in (1usize..5, 1usize..4).prop_flat_map(|(d, n)| (
            prop::collection::vec(prop::collection::vec(-9i64..=9, n + 1), d),
            matrix(d, n),
        ))
    ) {
        let t = CostTables::new(tables.clone()).unwrap();
        let c = game_to_cost(&t).unwrap();
        let xm = SolutionMatrix::from_rows(&x).unwrap();
        let base: i64 = tables.iter().map(|f| f[0]).sum();
        prop_assert_eq!(base - social_cost(&t, &xm).unwrap(), shifted_value_def(&rows(&c), &x));
    }

    #[test]
    fn lift_oracle_on_matroids(d in 1usize..6, rank in 0usize..4, n in 1usize..4, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let sys = SystemSpec::Matroid(MatroidSpec::uniform(d, rank.min(d)).unwrap());
        let c = random_costs(&mut rng, d, n, 6);
        let x = lift_maximize(&sys, &cost_matrix(&c)).unwrap();
        let mem = members(&sys.enumerate(8).unwrap());
        prop_assert_eq!(frobenius(&cost_matrix(&c), &x).unwrap(), lift_opt(&mem, &c, n));
    }
}
