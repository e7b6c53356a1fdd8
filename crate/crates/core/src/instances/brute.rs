//! Exhaustive baselines. Objectives that only depend on congestion are
//! invariant under column permutation, so these enumerate multisets of
//! members rather than ordered tuples.

use std::collections::BTreeSet;

use super::{CostTables, PrescribedCongestion};
use crate::dup::OrthogonalSelection;
use crate::error::{Error, Result};
use crate::model::{CostMatrix, ElementVector, SolutionMatrix};
use crate::oracles::{flatten, unflatten, ExplicitSystem, LinearOracle};

/// Default cap on enumerated candidates.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// `C(members + k - 1, k)`, saturating.
pub fn multiset_count(members: usize, k: usize) -> u128 {
    if members == 0 {
        return u128::from(k == 0);
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.saturating_mul(members as u128 + i) / (i + 1);
    }
    acc
}

fn check_budget(members: usize, k: usize, budget: u64) -> Result<()> {
    if multiset_count(members, k) > budget as u128 {
        return Err(Error::BudgetExceeded { budget });
    }
    Ok(())
}

/// Visits every nondecreasing index tuple of length `k` over `0..members`.
/// `accept(tuple_so_far, next)` can prune a branch.
fn for_each_multiset(
    members: usize,
    k: usize,
    accept: &mut dyn FnMut(&[usize], usize) -> bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn go(
        start: usize,
        members: usize,
        k: usize,
        stack: &mut Vec<usize>,
        accept: &mut dyn FnMut(&[usize], usize) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if stack.len() == k {
            visit(stack);
            return;
        }
        for idx in start..members {
            if accept(stack, idx) {
                stack.push(idx);
                go(idx, members, k, stack, accept, visit);
                stack.pop();
            }
        }
    }
    go(0, members, k, &mut Vec::with_capacity(k), accept, visit);
}

fn supports(sys: &ExplicitSystem) -> Vec<Vec<usize>> {
    sys.vectors().iter().map(|v| v.support().collect()).collect()
}

/// Shared driver: maximize `score(congestion)` over multisets of size `n`.
fn best_by_congestion(
    sys: &ExplicitSystem,
    n: usize,
    budget: u64,
    score: &dyn Fn(&[usize]) -> i64,
) -> Result<(i64, Vec<usize>)> {
    check_budget(sys.len(), n, budget)?;
    let supp = supports(sys);
    let mut counts = vec![0usize; sys.ground_size()];
    let mut best: Option<(i64, Vec<usize>)> = None;
    for_each_multiset(sys.len(), n, &mut |_, _| true, &mut |tuple| {
        counts.iter_mut().for_each(|c| *c = 0);
        for &idx in tuple {
            for &i in &supp[idx] {
                counts[i] += 1;
            }
        }
        let value = score(&counts);
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, tuple.to_vec()));
        }
    });
    Ok(best.expect("explicit systems are nonempty"))
}

fn witness(sys: &ExplicitSystem, tuple: &[usize]) -> Result<SolutionMatrix> {
    SolutionMatrix::new(
        sys.ground_size(),
        tuple.iter().map(|&idx| sys.vectors()[idx].clone()).collect(),
    )
}

/// Exact `max { c · shift(x) : x in S^n }` with a witness.
pub fn brute_force_sco(sys: &ExplicitSystem, c: &CostMatrix, budget: u64) -> Result<(i64, SolutionMatrix)> {
    let d = sys.ground_size();
    if c.d() != d {
        return Err(Error::dims("cost rows", d, c.d()));
    }
    // prefix[i][m] = Σ_{j<m} c_ij
    let prefix = (0..d)
        .map(|i| {
            let mut acc = vec![0i64];
            for &v in c.row(i) {
                let next = acc
                    .last()
                    .unwrap()
                    .checked_add(v)
                    .ok_or(Error::Overflow("prefix sum"))?;
                acc.push(next);
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    // |value| <= Σ|c| which fits once the prefix sums did
    c.l1_norm()?;
    let (value, tuple) = best_by_congestion(sys, c.n(), budget, &|counts| {
        counts.iter().enumerate().map(|(i, &m)| prefix[i][m]).sum()
    })?;
    Ok((value, witness(sys, &tuple)?))
}

/// Exact separable objective `max { Σ_i f_i(congestion_i) : x in S^n }`.
pub fn brute_force_generalized(sys: &ExplicitSystem, tables: &CostTables, budget: u64) -> Result<i64> {
    let d = sys.ground_size();
    if tables.d() != d {
        return Err(Error::dims("cost tables", d, tables.d()));
    }
    for i in 0..d {
        tables
            .table(i)
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v.checked_abs()?))
            .ok_or(Error::Overflow("cost tables"))?;
    }
    let (value, _) = best_by_congestion(sys, tables.n(), budget, &|counts| {
        counts.iter().enumerate().map(|(i, &m)| tables.value(i, m)).sum()
    })?;
    Ok(value)
}

/// Exact disjoint union optimum over `k` pairwise disjoint members.
pub fn brute_force_dup(
    sys: &ExplicitSystem,
    k: usize,
    weights: &[i64],
    budget: u64,
) -> Result<(i64, OrthogonalSelection)> {
    let d = sys.ground_size();
    if k == 0 {
        return Err(Error::invalid("disjoint union needs k >= 1"));
    }
    if weights.len() != d {
        return Err(Error::dims("disjoint union weights", d, weights.len()));
    }
    check_budget(sys.len(), k, budget)?;
    let vectors = sys.vectors();
    let values = vectors.iter().map(|v| v.weight(weights)).collect::<Result<Vec<_>>>()?;
    let mut best: Option<(i64, Vec<usize>)> = None;
    for_each_multiset(
        sys.len(),
        k,
        &mut |chosen, next| chosen.iter().all(|&idx| vectors[idx].is_disjoint(&vectors[next])),
        &mut |tuple| {
            let value: i64 = tuple.iter().map(|&idx| values[idx]).sum();
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, tuple.to_vec()));
            }
        },
    );
    let (value, tuple) =
        best.ok_or_else(|| Error::invalid("no k pairwise disjoint members (the zero vector is missing)"))?;
    Ok((
        value,
        OrthogonalSelection {
            columns: tuple.iter().map(|&idx| vectors[idx].clone()).collect(),
            value,
        },
    ))
}

/// Whether some `x in S^n` has congestion in `C_i` at every element. Walks
/// ordered `n`-tuples, independently of the multiset enumeration above.
pub fn prescribed_congestion_feasible(sys: &ExplicitSystem, pc: &PrescribedCongestion, budget: u64) -> Result<bool> {
    let d = sys.ground_size();
    if pc.d() != d {
        return Err(Error::dims("congestion sets", d, pc.d()));
    }
    let n = pc.n();
    let total = (sys.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded { budget });
    }
    let mut odometer = vec![0usize; n];
    loop {
        let ok = (0..d).all(|i| {
            let m = odometer.iter().filter(|&&idx| sys.vectors()[idx].get(i)).count();
            pc.allows(i, m)
        });
        if ok {
            return Ok(true);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(false);
            }
            odometer[pos] += 1;
            if odometer[pos] < sys.len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

/// All `d x n` 0/1 matrices equivalent to some member of `S^n`.
pub fn shift_classes(sys: &ExplicitSystem, n: usize) -> Result<BTreeSet<SolutionMatrix>> {
    let d = sys.ground_size();
    if d * n > 20 {
        return Err(Error::Unsupported("shift classes beyond 20 cells".into()));
    }
    let mut profiles = BTreeSet::new();
    let supp = supports(sys);
    for_each_multiset(sys.len(), n, &mut |_, _| true, &mut |tuple| {
        let mut counts = vec![0usize; d];
        for &idx in tuple {
            for &i in &supp[idx] {
                counts[i] += 1;
            }
        }
        profiles.insert(counts);
    });
    Ok(all_matrices(d, n)
        .filter(|x| profiles.contains(&(0..d).map(|i| x.row_sum(i)).collect::<Vec<_>>()))
        .collect())
}

/// All sums of `n` pairwise disjoint members of the n-lift of `S`.
pub fn lifted_disjoint_unions(sys: &ExplicitSystem, n: usize) -> Result<BTreeSet<SolutionMatrix>> {
    let d = sys.ground_size();
    if d * n > 20 {
        return Err(Error::Unsupported("lifted unions beyond 20 cells".into()));
    }
    let lift: Vec<u64> = all_matrices(d, n)
        .filter(|x| x.column_sum().is_some_and(|s| sys.vectors().contains(&s)))
        .map(|x| mask_of(&x))
        .collect();
    let mut layer: BTreeSet<u64> = lift.iter().copied().collect();
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for &u in &layer {
            for &x in &lift {
                if u & x == 0 {
                    next.insert(u | x);
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|mask| {
            unflatten(
                d,
                n,
                &ElementVector::from_support(d * n, (0..d * n).filter(|b| mask >> b & 1 == 1)),
            )
        })
        .collect()
}

fn mask_of(x: &SolutionMatrix) -> u64 {
    flatten(x).support().fold(0u64, |m, b| m | 1 << b)
}

fn all_matrices(d: usize, n: usize) -> impl Iterator<Item = SolutionMatrix> {
    let cells = d * n;
    (0u64..1 << cells).map(move |mask| {
        unflatten(
            d,
            n,
            &ElementVector::from_support(cells, (0..cells).filter(|b| mask >> b & 1 == 1)),
        )
        .expect("sizes agree")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::shifted_value;

    fn sys(vs: &[&str]) -> ExplicitSystem {
        let vectors: Vec<ElementVector> = vs.iter().map(|s| s.parse().unwrap()).collect();
        ExplicitSystem::new(vectors[0].len(), vectors).unwrap()
    }

    fn ordered_tuple_optimum(s: &ExplicitSystem, c: &CostMatrix) -> i64 {
        let n = c.n();
        let mut best = i64::MIN;
        for code in 0..s.len().pow(n as u32) {
            let mut rest = code;
            let cols = (0..n)
                .map(|_| {
                    let idx = rest % s.len();
                    rest /= s.len();
                    s.vectors()[idx].clone()
                })
                .collect();
            let x = SolutionMatrix::new(s.ground_size(), cols).unwrap();
            best = best.max(shifted_value(c, &x).unwrap());
        }
        best
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(multiset_count(20, 4), 8855);
        assert_eq!(multiset_count(3, 2), 6);
        assert_eq!(multiset_count(0, 0), 1);
    }

    #[test]
    fn sco_example_and_cross_check() {
        let s = sys(&["00", "10", "01"]);
        let c = CostMatrix::from_rows(vec![vec![3, 1], vec![2, 2]]).unwrap();
        let (value, x) = brute_force_sco(&s, &c, DEFAULT_BUDGET).unwrap();
        assert_eq!(value, 5);
        assert_eq!(shifted_value(&c, &x).unwrap(), 5);
        assert_eq!(ordered_tuple_optimum(&s, &c), 5);
    }

    #[test]
    fn sco_negative_costs_give_zero() {
        let s = sys(&["00", "10", "01", "11"]);
        let c = CostMatrix::from_rows(vec![vec![-3, -1], vec![-2, -2]]).unwrap();
        assert_eq!(brute_force_sco(&s, &c, DEFAULT_BUDGET).unwrap().0, 0);
    }

    #[test]
    fn sco_single_column_is_the_oracle() {
        let s = sys(&["000", "100", "010", "001", "110"]);
        let w = [4, 3, 5];
        let c = CostMatrix::from_rows(w.iter().map(|&v| vec![v]).collect()).unwrap();
        let best = s.maximize(&w).unwrap().weight(&w).unwrap();
        assert_eq!(brute_force_sco(&s, &c, DEFAULT_BUDGET).unwrap().0, best);
    }

    #[test]
    fn budget_is_enforced() {
        let s = sys(&["00", "10", "01", "11"]);
        let c = CostMatrix::zeros(2, 4);
        assert_eq!(brute_force_sco(&s, &c, 10), Err(Error::BudgetExceeded { budget: 10 }));
    }

    #[test]
    fn dup_examples() {
        let s = sys(&["00", "10", "01"]);
        assert_eq!(brute_force_dup(&s, 2, &[3, 5], DEFAULT_BUDGET).unwrap().0, 8);
        assert_eq!(brute_force_dup(&s, 3, &[3, 5], DEFAULT_BUDGET).unwrap().0, 8);
        assert_eq!(brute_force_dup(&s, 2, &[-3, 0], DEFAULT_BUDGET).unwrap().0, 0);
        let (_, sel) = brute_force_dup(&s, 2, &[3, 5], DEFAULT_BUDGET).unwrap();
        assert!(sel.columns[0].is_disjoint(&sel.columns[1]));
    }

    #[test]
    fn generalized_squares() {
        let s = sys(&["00", "10", "01"]);
        let sq = CostTables::new(vec![vec![0, 1, 4, 9]; 2]).unwrap();
        assert_eq!(brute_force_generalized(&s, &sq, DEFAULT_BUDGET).unwrap(), 9);
        let zero = CostTables::new(vec![vec![0; 4]; 2]).unwrap();
        assert_eq!(brute_force_generalized(&s, &zero, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn generalized_linear_matches_constant_row_sco() {
        let s = sys(&["000", "100", "010", "001", "011"]);
        let slopes = [2i64, -1, 3];
        let n = 3;
        let tables = CostTables::new(
            slopes
                .iter()
                .map(|&a| (0..=n as i64).map(|t| a * t).collect())
                .collect(),
        )
        .unwrap();
        let c = CostMatrix::from_rows(slopes.iter().map(|&a| vec![a; n]).collect()).unwrap();
        assert_eq!(
            brute_force_generalized(&s, &tables, DEFAULT_BUDGET).unwrap(),
            brute_force_sco(&s, &c, DEFAULT_BUDGET).unwrap().0
        );
    }

    #[test]
    fn feasibility_by_tuples() {
        let s = sys(&["00", "10", "01"]);
        let both_once = PrescribedCongestion::new(2, &[vec![1], vec![1]]).unwrap();
        assert!(prescribed_congestion_feasible(&s, &both_once, DEFAULT_BUDGET).unwrap());
        let both_twice = PrescribedCongestion::new(2, &[vec![2], vec![2]]).unwrap();
        assert!(!prescribed_congestion_feasible(&s, &both_twice, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn partition_identity_small() {
        let s = sys(&["00", "10", "01"]);
        assert_eq!(shift_classes(&s, 2).unwrap(), lifted_disjoint_unions(&s, 2).unwrap());
    }
}
