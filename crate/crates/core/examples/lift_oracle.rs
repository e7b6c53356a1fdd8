//! Optimizing over the n-lift with one call to the underlying oracle.

use shifted_opt::model::{frobenius, CostMatrix};
use shifted_opt::oracles::{lift_maximize, LiftOracle, LinearOracle, MatroidSpec};

fn main() -> shifted_opt::Result<()> {
    let rank_two = MatroidSpec::uniform(4, 2)?;
    let c = CostMatrix::from_rows(vec![vec![1, 5, -2], vec![3, 3, 0], vec![-1, -4, -1], vec![2, 0, 6]])?;
    let x = lift_maximize(&rank_two, &c)?;
    println!("best lifted matrix (value {}):\n{x}", frobenius(&c, &x)?);
    println!(
        "its column sum {}",
        x.column_sum().expect("lift members have 0/1 row sums")
    );

    let lifted = LiftOracle::new(&rank_two, 3)?;
    println!("flattened ground set of the lift: {} elements", lifted.ground_size());
    Ok(())
}
