//! Constant-ratio approximation for shifted costs on a graphic matroid.
//!
//! Three columns each pick a forest of K4; the first use of an edge pays more
//! than later ones, so the solver balances coverage against reuse.

use shifted_opt::instances::Graph;
use shifted_opt::model::{congestion, CostMatrix};
use shifted_opt::oracles::MatroidSpec;
use shifted_opt::sco::constant_shifted;

fn main() -> shifted_opt::Result<()> {
    let k4 = Graph::complete(4);
    let forests = MatroidSpec::graphic(4, k4.edges().to_vec())?;
    let rows = (0..k4.edges().len() as i64).map(|e| vec![6 + e, 2, -3]).collect();
    let c = CostMatrix::from_rows(rows)?;

    let result = constant_shifted(&forests, &c)?;
    println!("value {} with proven ratio {}", result.value, result.bound);
    println!("edge congestion {:?}", congestion(&result.solution).counts());
    print!("{}", result.solution);
    Ok(())
}
