//! Hardness constructions: exact cover through the hexagon graph and edge
//! coloring through perfect matchings, decided by exhaustive search.

use shifted_opt::instances::{
    coloring_gadget, has_exact_cover, hexagon_gadget, prescribed_congestion_feasible, Graph, DEFAULT_BUDGET,
};
use shifted_opt::oracles::{ExplicitSystem, LinearOracle};

fn main() -> shifted_opt::Result<()> {
    for sets in [
        vec![[0, 1, 2], [3, 4, 5], [1, 2, 3]],
        vec![[0, 1, 2], [2, 3, 4], [1, 4, 5]],
    ] {
        let gadget = hexagon_gadget(&sets, 6)?;
        let body = ExplicitSystem::new(gadget.graph.edges().len(), gadget.perfect_matchings())?;
        let feasible = prescribed_congestion_feasible(&body, &gadget.congestion, DEFAULT_BUDGET)?;
        println!(
            "{sets:?}: {} edges, congestion feasible {feasible}, exact cover {}",
            body.ground_size(),
            has_exact_cover(&sets, 6)
        );
    }
    for (name, graph) in [("K4", Graph::complete(4)), ("Petersen", Graph::petersen())] {
        let gadget = coloring_gadget(&graph)?;
        let feasible = match gadget.body() {
            Some(body) => prescribed_congestion_feasible(&body, &gadget.congestion, DEFAULT_BUDGET)?,
            None => false,
        };
        println!(
            "{name}: {} perfect matchings, two disjoint ones exist: {feasible}",
            gadget.perfect_matchings.len()
        );
    }
    Ok(())
}
