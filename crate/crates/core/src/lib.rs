//! Shifted combinatorial optimization over independence systems.
//!
//! An independence system `S ⊆ {0,1}^d` is accessed only through a linear
//! optimization oracle ([`oracles::LinearOracle`]). Given a `d x n` cost
//! matrix `c`, the problem is to pick `n` members `x^1..x^n` of `S` maximizing
//! `c · shift(x)`, where the shift pushes the ones of every row to the left.
//!
//! The [`sco`] module holds the approximation algorithms, built on the greedy
//! disjoint-union routine in [`dup`] and the lift oracle in [`oracles`].
//! [`instances`] has exact enumeration baselines, reductions, gadgets,
//! random generators and the JSON instance format. [`cli`] implements the
//! `sco` binary.

pub mod cli;
pub mod dup;
pub mod error;
pub mod instances;
pub mod model;
pub mod oracles;
pub mod sco;

pub use error::{Error, Result};
pub use model::{CostMatrix, ElementVector, SolutionMatrix};
