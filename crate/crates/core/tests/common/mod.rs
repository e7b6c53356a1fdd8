//! Reference computations for the integration tests. Everything here works on
//! plain `Vec<u8>` rows and exhaustive enumeration, sharing no code with the
//! library's solvers.
#![allow(dead_code)]

use rand::Rng;
use shifted_opt::model::{CostMatrix, ElementVector, SolutionMatrix};
use shifted_opt::oracles::{ExplicitSystem, SystemSpec};

pub type Bits = Vec<u8>;

pub fn bits(v: &ElementVector) -> Bits {
    v.bits().iter().map(|&b| b as u8).collect()
}

pub fn members(sys: &ExplicitSystem) -> Vec<Bits> {
    sys.vectors().iter().map(bits).collect()
}

pub fn explicit(spec: &SystemSpec) -> &ExplicitSystem {
    match spec {
        SystemSpec::Explicit(s) => s,
        _ => panic!("expected an explicit system"),
    }
}

pub fn rows(c: &CostMatrix) -> Vec<Vec<i64>> {
    c.rows().map(<[i64]>::to_vec).collect()
}

pub fn matrix_rows(x: &SolutionMatrix) -> Vec<Bits> {
    (0..x.d())
        .map(|i| (0..x.n()).map(|j| x.get(i, j) as u8).collect())
        .collect()
}

/// Calls `f` on every nondecreasing index tuple of length `n` over `0..m`.
pub fn multisets(m: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(m: usize, n: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == n {
            f(cur);
            return;
        }
        for i in start..m {
            cur.push(i);
            go(m, n, i, cur, f);
            cur.pop();
        }
    }
    go(m, n, 0, &mut Vec::with_capacity(n), f);
}

/// Calls `f` on every ordered tuple of length `n` over `0..m`.
pub fn tuples(m: usize, n: usize, f: &mut dyn FnMut(&[usize])) {
    let mut cur = vec![0usize; n];
    if m == 0 {
        return;
    }
    loop {
        f(&cur);
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            cur[pos] += 1;
            if cur[pos] < m {
                break;
            }
            cur[pos] = 0;
            pos += 1;
        }
    }
}

pub fn congestion_of(members: &[Bits], pick: &[usize]) -> Vec<usize> {
    let d = members.first().map_or(0, Vec::len);
    (0..d)
        .map(|i| pick.iter().filter(|&&p| members[p][i] == 1).count())
        .collect()
}

/// `Σ_i (c_i1 + ... + c_im_i)`: the shifted value of any matrix with congestion `m`.
pub fn value_of_congestion(c: &[Vec<i64>], m: &[usize]) -> i64 {
    c.iter().zip(m).map(|(row, &k)| row[..k].iter().sum::<i64>()).sum()
}

/// Shifted value straight from the definition: sort each row, then dot product.
pub fn shifted_value_def(c: &[Vec<i64>], x: &[Bits]) -> i64 {
    c.iter()
        .zip(x)
        .map(|(crow, xrow)| {
            let mut sorted = xrow.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            crow.iter().zip(&sorted).map(|(&cv, &xv)| cv * xv as i64).sum::<i64>()
        })
        .sum()
}

/// Exact SCO optimum over `S^n`.
pub fn sco_opt(members: &[Bits], c: &[Vec<i64>], n: usize) -> i64 {
    let mut best = i64::MIN;
    multisets(members.len(), n, &mut |pick| {
        best = best.max(value_of_congestion(c, &congestion_of(members, pick)));
    });
    best
}

/// Every congestion profile reached by an optimal `x ∈ S^n`, along with the member indices.
pub fn sco_argmax(members: &[Bits], c: &[Vec<i64>], n: usize) -> (i64, Vec<Vec<usize>>) {
    let mut best = i64::MIN;
    let mut winners = Vec::new();
    multisets(members.len(), n, &mut |pick| {
        let v = value_of_congestion(c, &congestion_of(members, pick));
        if v > best {
            best = v;
            winners.clear();
        }
        if v == best {
            winners.push(pick.to_vec());
        }
    });
    (best, winners)
}

/// Exact `max Σ_i f_i(m_i)` over `S^n`.
pub fn generalized_opt(members: &[Bits], f: &[Vec<i64>], n: usize) -> i64 {
    let mut best = i64::MIN;
    multisets(members.len(), n, &mut |pick| {
        let m = congestion_of(members, pick);
        best = best.max(f.iter().zip(&m).map(|(t, &k)| t[k]).sum());
    });
    best
}

/// Exact disjoint-union optimum: `k` pairwise disjoint members maximizing `w · union`.
pub fn dup_opt(members: &[Bits], k: usize, w: &[i64]) -> i64 {
    let mut best = i64::MIN;
    multisets(members.len(), k, &mut |pick| {
        let d = w.len();
        let mut cover = vec![0u8; d];
        for &p in pick {
            for i in 0..d {
                if members[p][i] == 1 {
                    if cover[i] == 1 {
                        return;
                    }
                    cover[i] = 1;
                }
            }
        }
        best = best.max((0..d).map(|i| w[i] * cover[i] as i64).sum());
    });
    best
}

/// Exact optimum of `Σ c_ij x_ij` over matrices whose row sums form a member:
/// every row in the member's support puts its single one in some column.
pub fn lift_opt(members: &[Bits], c: &[Vec<i64>], n: usize) -> i64 {
    let mut best = i64::MIN;
    for s in members {
        let support: Vec<usize> = (0..s.len()).filter(|&i| s[i] == 1).collect();
        tuples(n, support.len(), &mut |cols| {
            best = best.max(support.iter().zip(cols).map(|(&i, &j)| c[i][j]).sum());
        });
        if support.is_empty() {
            best = best.max(0);
        }
    }
    best
}

pub fn is_member(members: &[Bits], v: &[u8]) -> bool {
    members.iter().any(|m| m.as_slice() == v)
}

/// `1 - (1 - 1/k)^k` as `(numerator, denominator)`.
pub fn beta(k: u32) -> (i128, i128) {
    let kk = (k as i128).pow(k);
    (kk - (k as i128 - 1).pow(k), kk)
}

pub fn ceil_log2(n: usize) -> u32 {
    let mut l = 0;
    while (1usize << l) < n {
        l += 1;
    }
    l
}

/// `apx >= (num/den) · opt`, exactly.
pub fn meets(apx: i64, opt: i64, (num, den): (i128, i128)) -> bool {
    apx as i128 * den >= num * opt as i128
}

pub fn random_costs<R: Rng>(rng: &mut R, d: usize, n: usize, range: i64) -> Vec<Vec<i64>> {
    (0..d)
        .map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect())
        .collect()
}

pub fn cost_matrix(c: &[Vec<i64>]) -> CostMatrix {
    CostMatrix::from_rows(c.to_vec()).unwrap()
}

/// Downward closure of random generators, built by subset enumeration.
pub fn random_closed<R: Rng>(rng: &mut R, d: usize, generators: usize) -> ExplicitSystem {
    let gens: Vec<u32> = (0..generators).map(|_| rng.gen_range(0..1u32 << d)).collect();
    let vectors = (0u32..1 << d)
        .filter(|&mask| gens.iter().any(|&g| mask & !g == 0))
        .map(|mask| ElementVector::from_bits((0..d).map(|i| mask >> i & 1 == 1).collect()))
        .collect();
    ExplicitSystem::new(d, vectors).unwrap()
}

pub struct Ratio {
    pub min: Option<(i64, i64)>,
}

impl Ratio {
    pub fn new() -> Self {
        Ratio { min: None }
    }

    pub fn observe(&mut self, apx: i64, opt: i64) {
        if opt <= 0 {
            return;
        }
        match self.min {
            Some((a, o)) if (apx as i128) * (o as i128) >= (a as i128) * (opt as i128) => {}
            _ => self.min = Some((apx, opt)),
        }
    }

    pub fn describe(&self) -> String {
        match self.min {
            Some((a, o)) => format!("min ratio {a}/{o} = {:.4}", a as f64 / o as f64),
            None => "no positive optimum".into(),
        }
    }
}
