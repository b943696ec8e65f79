//! Restricted Birkhoff and transportation polytopes.
//!
//! Coordinates are the matrix entries in row-major order: `x[i][j]` is
//! variable `i * n + j`, with `0 <= i, j < n`.

use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{rat, HPolytope, Rat, RatMatrix};

/// A monotone lattice path from the top-left to the bottom-right cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonotonePath {
    pub steps: Vec<(usize, usize)>,
}

impl MonotonePath {
    pub fn sum(&self, x: &RatMatrix) -> Rat {
        self.steps.iter().map(|&(i, j)| &x[(i, j)]).sum()
    }
}

/// All monotone paths `(0,0) -> (n-1,n-1)` in lexicographic order of their cell
/// sequences (a right step sorts before a down step).
pub fn monotone_paths(n: usize) -> Vec<MonotonePath> {
    assert!(n >= 1);
    fn go(n: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<MonotonePath>) {
        let (i, j) = *cur.last().unwrap();
        if i == n - 1 && j == n - 1 {
            out.push(MonotonePath { steps: cur.clone() });
            return;
        }
        if j + 1 < n {
            cur.push((i, j + 1));
            go(n, cur, out);
            cur.pop();
        }
        if i + 1 < n {
            cur.push((i + 1, j));
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![(0, 0)], &mut out);
    out
}

/// Row sums `alpha` and column sums `beta` of a contingency table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Margins {
    alpha: Vec<u64>,
    beta: Vec<u64>,
}

impl Margins {
    pub fn new(alpha: Vec<u64>, beta: Vec<u64>) -> Result<Self> {
        if alpha.len() != beta.len() || alpha.is_empty() {
            return Err(Error::InvalidInput(
                "margins must be nonempty and of equal length".into(),
            ));
        }
        let (a, b): (u64, u64) = (alpha.iter().sum(), beta.iter().sum());
        if a != b {
            return Err(Error::InfeasibleMargins { alpha: a, beta: b });
        }
        Ok(Margins { alpha, beta })
    }

    /// All row and column sums equal to one.
    pub fn ones(n: usize) -> Self {
        Margins {
            alpha: vec![1; n],
            beta: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    /// Largest single margin.
    pub fn r(&self) -> u64 {
        self.alpha
            .iter()
            .chain(&self.beta)
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Common total of the margins.
    pub fn s(&self) -> u64 {
        self.alpha.iter().sum()
    }

    pub fn scaled(&self, t: u64) -> Margins {
        Margins {
            alpha: self.alpha.iter().map(|a| a * t).collect(),
            beta: self.beta.iter().map(|b| b * t).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BirkhoffSpec {
    pub n: usize,
    pub k: u64,
}

impl BirkhoffSpec {
    pub fn new(n: usize, k: u64) -> Result<Self> {
        if n == 0 || k == 0 || k > n as u64 {
            return Err(Error::InvalidInput(format!(
                "need 1 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        Ok(BirkhoffSpec { n, k })
    }
}

/// Diagonal sums `d_l` for `l = -(n-1) ..= n-1`, in that order.
pub fn diag_sums(y: &RatMatrix) -> Vec<Rat> {
    let n = y.n() as isize;
    (-(n - 1)..n).map(|l| y.diagonal_sum(l)).collect()
}

fn margin_polytope(margins: &Margins, k: u64) -> HPolytope {
    let n = margins.n();
    let mut p = HPolytope::new(n * n);
    for v in 0..n * n {
        p.add_sparse_inequality(&[(v, -1)], Rat::zero());
    }
    for i in 0..n {
        let row: Vec<(usize, i64)> = (0..n).map(|j| (i * n + j, 1)).collect();
        p.add_sparse_equality(&row, Rat::from_integer(margins.alpha[i].into()));
    }
    for j in 0..n {
        let col: Vec<(usize, i64)> = (0..n).map(|i| (i * n + j, 1)).collect();
        p.add_sparse_equality(&col, Rat::from_integer(margins.beta[j].into()));
    }
    let cap = Rat::from_integer(k.into());
    for path in monotone_paths(n) {
        let terms: Vec<(usize, i64)> = path.steps.iter().map(|&(i, j)| (i * n + j, 1)).collect();
        p.add_sparse_inequality(&terms, cap.clone());
    }
    p
}

/// `B_n^k`: doubly stochastic matrices whose monotone chains sum to at most `k`.
pub fn build_restricted_birkhoff(spec: BirkhoffSpec) -> HPolytope {
    margin_polytope(&Margins::ones(spec.n), spec.k)
}

/// `B^k_{alpha,beta}`: nonnegative tables with the given margins and chain cap `k`.
pub fn build_transportation(margins: &Margins, k: u64) -> HPolytope {
    margin_polytope(margins, k)
}

/// Maximum entry sum over monotone paths, by the usual grid DP.
pub fn max_chain_sum(x: &RatMatrix) -> Rat {
    let n = x.n();
    let mut m: Vec<Rat> = vec![Rat::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let best = match (i, j) {
                (0, 0) => Rat::zero(),
                (0, _) => m[j - 1].clone(),
                (_, 0) => m[(i - 1) * n].clone(),
                _ => std::cmp::max(&m[(i - 1) * n + j], &m[i * n + j - 1]).clone(),
            };
            m[i * n + j] = best + &x[(i, j)];
        }
    }
    m.last().cloned().unwrap_or_else(Rat::zero)
}

/// The `(2n+1) x (2n+1)` matrix with `2n/(2n+1)` on the diagonal and
/// `1/(2n+1)` at `(i, i+n mod 2n+1)`.
pub fn remark62_matrix(n: usize) -> RatMatrix {
    assert!(n >= 2, "defined for n >= 2");
    let size = 2 * n + 1;
    let d = size as i64;
    let mut x = RatMatrix::zeros(size);
    for i in 0..size {
        x[(i, i)] = rat(d - 1, d);
        x[(i, (i + n) % size)] = rat(1, d);
    }
    x
}

/// Node count beyond which the direct search is not attempted automatically:
/// a crude `(t+1)^((n-1)^2)` bound on free cells.
pub fn direct_node_estimate(n: usize, t: u64) -> f64 {
    ((t + 1) as f64).powi(((n.saturating_sub(1)) * (n.saturating_sub(1))) as i32)
}

#[derive(Clone)]
struct Table {
    n: usize,
    cap: i64,
    row_rem: Vec<i64>,
    col_rem: Vec<i64>,
    /// Chain DP values of the cells filled so far.
    chain: Vec<i64>,
}

struct Counter<'a> {
    nodes: &'a AtomicU64,
    max_nodes: Option<u64>,
}

impl Counter<'_> {
    fn tick(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.max_nodes {
            Some(cap) if seen > cap => Err(Error::BudgetExceeded(format!(
                "direct count exceeded {cap} nodes"
            ))),
            _ => Ok(()),
        }
    }

    /// Places `v` at cell `c`; `false` if a chain or budget bound fails.
    fn place(tab: &mut Table, c: usize, v: i64) -> bool {
        let n = tab.n;
        let (i, j) = (c / n, c % n);
        let up = if i > 0 { tab.chain[c - n] } else { 0 };
        let left = if j > 0 { tab.chain[c - 1] } else { 0 };
        let m = up.max(left) + v;
        tab.row_rem[i] -= v;
        tab.col_rem[j] -= v;
        tab.chain[c] = m;
        // Every completion extends this chain along the rest of row i, or down
        // the rest of column j, both of which have known totals.
        m + tab.row_rem[i] <= tab.cap && m + tab.col_rem[j] <= tab.cap
    }

    fn count(&self, tab: &mut Table, c: usize) -> Result<u128> {
        self.tick()?;
        let n = tab.n;
        if c == n * n {
            return Ok(1);
        }
        let (i, j) = (c / n, c % n);
        let (lo, hi) = if i == n - 1 {
            // Last row is forced by the column budgets.
            let v = tab.col_rem[j];
            if v > tab.row_rem[i] {
                return Ok(0);
            }
            (v, v)
        } else if j == n - 1 {
            let v = tab.row_rem[i];
            if v > tab.col_rem[j] {
                return Ok(0);
            }
            (v, v)
        } else {
            (0, tab.row_rem[i].min(tab.col_rem[j]))
        };
        let mut total = 0u128;
        for v in lo..=hi {
            let saved = (tab.row_rem[i], tab.col_rem[j], tab.chain[c]);
            if Self::place(tab, c, v) {
                total += self.count(tab, c + 1)?;
            }
            tab.row_rem[i] = saved.0;
            tab.col_rem[j] = saved.1;
            tab.chain[c] = saved.2;
        }
        Ok(total)
    }

    /// Every feasible filling of the first row.
    fn first_rows(tab: &Table) -> Vec<Table> {
        fn go(tab: &mut Table, c: usize, out: &mut Vec<Table>) {
            let n = tab.n;
            if c == n {
                out.push(tab.clone());
                return;
            }
            let (lo, hi) = if c == n - 1 {
                (tab.row_rem[0], tab.row_rem[0])
            } else {
                (0, tab.row_rem[0].min(tab.col_rem[c]))
            };
            for v in lo..=hi {
                if v > tab.col_rem[c] {
                    continue;
                }
                let mut next = tab.clone();
                if Counter::place(&mut next, c, v) {
                    go(&mut next, c + 1, out);
                }
            }
        }
        let mut out = Vec::new();
        go(&mut tab.clone(), 0, &mut out);
        out
    }
}

/// `#(t B^k_{alpha,beta} ∩ Z^{n x n})` by a row-major search over the table.
pub fn count_transportation_direct(
    margins: &Margins,
    k: u64,
    t: u64,
    max_nodes: Option<u64>,
) -> Result<u128> {
    let n = margins.n();
    let m = margins.scaled(t);
    let tab = Table {
        n,
        cap: (k * t) as i64,
        row_rem: m.alpha.iter().map(|&a| a as i64).collect(),
        col_rem: m.beta.iter().map(|&b| b as i64).collect(),
        chain: vec![0; n * n],
    };
    let nodes = AtomicU64::new(0);
    let counter = Counter {
        nodes: &nodes,
        max_nodes,
    };
    if n == 1 {
        let mut tab = tab;
        return counter.count(&mut tab, 0);
    }
    Counter::first_rows(&tab)
        .into_par_iter()
        .map(|mut sub| counter.count(&mut sub, n))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// `#(t B_n^k ∩ Z^{n x n})`.
pub fn count_lattice_points_direct(
    spec: BirkhoffSpec,
    t: u64,
    max_nodes: Option<u64>,
) -> Result<u128> {
    count_transportation_direct(&Margins::ones(spec.n), spec.k, t, max_nodes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{count_lattice_points, int, lattice_points, vertices};

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
    }

    #[test]
    fn path_counts_and_order() {
        for n in 1..=6 {
            let paths = monotone_paths(n);
            assert_eq!(paths.len() as u64, binomial(2 * n as u64 - 2, n as u64 - 1));
            assert!(paths.windows(2).all(|w| w[0] < w[1]));
            assert!(paths.iter().all(|p| p.steps.len() == 2 * n - 1));
        }
        assert_eq!(monotone_paths(2)[0].steps, vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn margins_validation() {
        assert_eq!(
            Margins::new(vec![1, 2], vec![1, 1]),
            Err(Error::InfeasibleMargins { alpha: 3, beta: 2 })
        );
        let m = Margins::new(vec![2, 1], vec![0, 3]).unwrap();
        assert_eq!((m.r(), m.s()), (3, 3));
    }

    #[test]
    fn small_birkhoff_facts() {
        let b33 = build_restricted_birkhoff(BirkhoffSpec::new(3, 3).unwrap());
        let pts = lattice_points(&b33).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts
            .iter()
            .all(|p| RatMatrix::from_vector(p).unwrap().is_integral()));

        let b32 = build_restricted_birkhoff(BirkhoffSpec::new(3, 2).unwrap());
        let half = RatMatrix::from_rows(vec![
            vec![rat(1, 2), int(0), rat(1, 2)],
            vec![int(0), int(1), int(0)],
            vec![rat(1, 2), int(0), rat(1, 2)],
        ])
        .unwrap();
        assert!(b32.contains(&half.to_vector()));

        let b31 = build_restricted_birkhoff(BirkhoffSpec::new(3, 1).unwrap());
        let v = vertices(&b31).unwrap();
        assert_eq!(v.vertices, vec![RatMatrix::anti_identity(3).to_vector()]);
    }

    #[test]
    fn transportation_specializes() {
        let ones = Margins::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap();
        assert_eq!(
            build_transportation(&ones, 2),
            build_restricted_birkhoff(BirkhoffSpec::new(3, 2).unwrap())
        );
        let forced = Margins::new(vec![2, 0], vec![2, 0]).unwrap();
        let pts = lattice_points(&build_transportation(&forced, 2)).unwrap();
        assert_eq!(
            pts,
            vec![RatMatrix::from_int_rows(&[vec![2, 0], vec![0, 0]]).to_vector()]
        );
        let two = Margins::new(vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(count_transportation_direct(&two, 2, 1, None).unwrap(), 2);
    }

    #[test]
    fn direct_counts() {
        let c = |n, k, t| {
            count_lattice_points_direct(BirkhoffSpec::new(n, k).unwrap(), t, None).unwrap()
        };
        assert_eq!(c(3, 2, 1), 5);
        assert_eq!(c(3, 2, 2), 16);
        assert_eq!(c(3, 3, 2), 21);
        assert_eq!(c(3, 1, 7), 1);
        assert_eq!(c(4, 2, 1), 14);
        assert_eq!(c(5, 3, 1), 103);
        assert_eq!(c(1, 1, 4), 1);
    }

    #[test]
    fn direct_matches_generic() {
        for n in 1..=3 {
            for k in 1..=n as u64 {
                let p = build_restricted_birkhoff(BirkhoffSpec::new(n, k).unwrap());
                for t in 1..=3 {
                    assert_eq!(
                        count_lattice_points_direct(BirkhoffSpec { n, k }, t, None).unwrap(),
                        count_lattice_points(&p.dilate(t)).unwrap(),
                        "n={n} k={k} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn node_budget() {
        let r = count_lattice_points_direct(BirkhoffSpec::new(4, 4).unwrap(), 3, Some(10));
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn chain_sums() {
        assert_eq!(max_chain_sum(&RatMatrix::zeros(3)), int(0));
        assert_eq!(max_chain_sum(&RatMatrix::anti_identity(3)), int(1));
        let half = RatMatrix::from_rows(vec![
            vec![rat(1, 2), int(0), rat(1, 2)],
            vec![int(0), int(1), int(0)],
            vec![rat(1, 2), int(0), rat(1, 2)],
        ])
        .unwrap();
        assert_eq!(max_chain_sum(&half), int(2));
        let brute = monotone_paths(3)
            .iter()
            .map(|p| p.sum(&half))
            .max()
            .unwrap();
        assert_eq!(brute, int(2));
    }

    #[test]
    fn circulant_vertex_shape() {
        let x = remark62_matrix(2);
        assert_eq!(x.n(), 5);
        assert_eq!(x[(0, 0)], rat(4, 5));
        assert_eq!(x[(0, 2)], rat(1, 5));
        assert_eq!(x[(4, 1)], rat(1, 5));
        assert!(x.row_sums().iter().all(|s| *s == int(1)));
        assert!(x.col_sums().iter().all(|s| *s == int(1)));
        for n in 2..=3 {
            let x = remark62_matrix(n);
            let p = build_restricted_birkhoff(BirkhoffSpec::new(2 * n + 1, 2 * n as u64).unwrap());
            assert!(p.contains(&x.to_vector()));
            assert!(max_chain_sum(&x) <= int(2 * n as i64));
        }
    }
}
