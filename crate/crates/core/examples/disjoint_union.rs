//! Greedy disjoint union: pick `k` pairwise disjoint bipartite matchings that
//! cover as much weight as possible.

use shifted_opt::dup::{greedy_dup, greedy_ratio};
use shifted_opt::oracles::BipartiteGraph;

fn main() -> shifted_opt::Result<()> {
    // 3x3 complete bipartite graph, edge (l, r) is element 3l + r
    let edges = (0..3).flat_map(|l| (0..3).map(move |r| (l, r))).collect();
    let graph = BipartiteGraph::new(3, 3, edges)?;
    let weights = [9, 1, 4, 2, 8, 3, 5, 6, 7];
    for k in 1..=3 {
        let sel = greedy_dup(&graph, k, &weights)?;
        let cols: Vec<String> = sel.columns.iter().map(ToString::to_string).collect();
        println!(
            "k = {k}: covered weight {} via {cols:?}, guarantee {}",
            sel.value,
            greedy_ratio(k)
        );
    }
    Ok(())
}
