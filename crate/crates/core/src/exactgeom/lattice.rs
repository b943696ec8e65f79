//! Integer points of a bounded polytope by depth-first search with interval
//! propagation over single constraints.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::hpoly::{Constraint, HPolytope};
use super::rat::{Rat, RatVector};
use crate::error::{Error, Result};

/// Magnitude used for "no bound yet". Large enough to dominate every real
/// bound, small enough that coefficient products stay far from overflow.
const INF: i128 = 1 << 80;

#[derive(Clone, Debug, Default)]
pub struct LatticeOptions {
    /// Abort with [`Error::BudgetExceeded`] after visiting this many search nodes.
    pub max_nodes: Option<u64>,
    /// Replace every inequality by its strict version (relative interior when
    /// no inequality is an implicit equality).
    pub strict: bool,
}

#[derive(Clone, Debug)]
struct Row {
    terms: Vec<(usize, i128)>,
    b: i128,
}

#[derive(Clone, Debug)]
struct IntSystem {
    n: usize,
    rows: Vec<Row>,
    var_rows: Vec<Vec<usize>>,
}

fn to_i128(v: &BigInt) -> Result<i128> {
    v.to_i128()
        .filter(|x| x.abs() < INF / 1024)
        .ok_or_else(|| Error::InvalidInput("constraint coefficient too large".into()))
}

fn integer_row(c: &Constraint) -> (Vec<BigInt>, BigInt) {
    let l =
        c.a.iter()
            .chain(std::iter::once(&c.b))
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scale = Rat::from_integer(l);
    let a = c.a.iter().map(|v| (v * &scale).to_integer()).collect();
    (a, (&c.b * &scale).to_integer())
}

/// `floor(p / q)` for `q > 0`.
fn floor_div(p: i128, q: i128) -> i128 {
    Integer::div_floor(&p, &q)
}

impl IntSystem {
    /// `None` when some equality has no integer solution at all.
    fn build(p: &HPolytope, strict: bool) -> Result<Option<Self>> {
        let n = p.ambient_dim();
        let mut rows = Vec::new();
        let push = |a: &[BigInt], b: BigInt, rows: &mut Vec<Row>| -> Result<()> {
            let g = a.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            let (a, b) = if g.is_zero() {
                (a.to_vec(), b)
            } else {
                (a.iter().map(|v| v / &g).collect(), b.div_floor(&g))
            };
            let mut terms = Vec::new();
            for (i, v) in a.iter().enumerate() {
                if !v.is_zero() {
                    terms.push((i, to_i128(v)?));
                }
            }
            rows.push(Row {
                terms,
                b: to_i128(&b)?,
            });
            Ok(())
        };
        for c in p.inequalities() {
            let (a, mut b) = integer_row(c);
            if strict {
                b -= 1;
            }
            push(&a, b, &mut rows)?;
        }
        for c in p.equalities() {
            let (a, b) = integer_row(c);
            let g = a.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if (!g.is_zero() && !b.is_multiple_of(&g)) || (g.is_zero() && !b.is_zero()) {
                return Ok(None);
            }
            let neg_a: Vec<BigInt> = a.iter().map(|v| -v).collect();
            push(&a, b.clone(), &mut rows)?;
            push(&neg_a, -b, &mut rows)?;
        }
        let mut var_rows = vec![Vec::new(); n];
        for (r, row) in rows.iter().enumerate() {
            for &(i, _) in &row.terms {
                var_rows[i].push(r);
            }
        }
        Ok(Some(IntSystem { n, rows, var_rows }))
    }

    /// Tightens bounds to a fixpoint; `false` when infeasible.
    fn propagate(&self, lo: &mut [i128], hi: &mut [i128], seed: Option<usize>) -> bool {
        let mut queued = vec![false; self.rows.len()];
        let mut work: Vec<usize> = match seed {
            Some(v) => self.var_rows[v].clone(),
            None => (0..self.rows.len()).collect(),
        };
        for &r in &work {
            queued[r] = true;
        }
        while let Some(r) = work.pop() {
            queued[r] = false;
            let row = &self.rows[r];
            let mut min_act: i128 = 0;
            let mut infinite = 0usize;
            for &(i, a) in &row.terms {
                let bound = if a > 0 { lo[i] } else { hi[i] };
                if bound.abs() >= INF {
                    infinite += 1;
                } else {
                    min_act += a * bound;
                }
            }
            if infinite == 0 && min_act > row.b {
                return false;
            }
            if infinite > 1 {
                continue;
            }
            for &(i, a) in &row.terms {
                let bound = if a > 0 { lo[i] } else { hi[i] };
                let own_inf = bound.abs() >= INF;
                if infinite == 1 && !own_inf {
                    continue;
                }
                let rest = if own_inf {
                    min_act
                } else {
                    min_act - a * bound
                };
                let residual = row.b - rest;
                let changed = if a > 0 {
                    let nb = floor_div(residual, a);
                    if nb < hi[i] {
                        hi[i] = nb;
                        true
                    } else {
                        false
                    }
                } else {
                    let nb = -floor_div(residual, -a);
                    if nb > lo[i] {
                        lo[i] = nb;
                        true
                    } else {
                        false
                    }
                };
                if changed {
                    if lo[i] > hi[i] {
                        return false;
                    }
                    for &r2 in &self.var_rows[i] {
                        if !queued[r2] {
                            queued[r2] = true;
                            work.push(r2);
                        }
                    }
                }
            }
        }
        true
    }

    fn satisfied(&self, x: &[i128]) -> bool {
        self.rows
            .iter()
            .all(|row| row.terms.iter().map(|&(i, a)| a * x[i]).sum::<i128>() <= row.b)
    }
}

struct Search<'a> {
    sys: &'a IntSystem,
    nodes: &'a AtomicU64,
    max_nodes: Option<u64>,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        let seen = self.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        match self.max_nodes {
            Some(cap) if seen > cap => Err(Error::BudgetExceeded(format!(
                "lattice search exceeded {cap} nodes"
            ))),
            _ => Ok(()),
        }
    }

    fn dfs(&self, lo: &[i128], hi: &[i128], visit: &mut dyn FnMut(&[i128])) -> Result<()> {
        self.tick()?;
        let Some(var) = (0..self.sys.n).find(|&i| lo[i] < hi[i]) else {
            if self.sys.satisfied(lo) {
                visit(lo);
            }
            return Ok(());
        };
        for v in lo[var]..=hi[var] {
            let mut l2 = lo.to_vec();
            let mut h2 = hi.to_vec();
            l2[var] = v;
            h2[var] = v;
            if self.sys.propagate(&mut l2, &mut h2, Some(var)) {
                self.dfs(&l2, &h2, visit)?;
            }
        }
        Ok(())
    }
}

type RootBounds = (IntSystem, Vec<i128>, Vec<i128>);

/// Root bounds after propagation, or `None` if the polytope has no integer point.
fn root(p: &HPolytope, opts: &LatticeOptions) -> Result<Option<RootBounds>> {
    let Some(sys) = IntSystem::build(p, opts.strict)? else {
        return Ok(None);
    };
    let mut lo = vec![-INF; sys.n];
    let mut hi = vec![INF; sys.n];
    if !sys.propagate(&mut lo, &mut hi, None) {
        return Ok(None);
    }
    if let Some(i) = (0..sys.n).find(|&i| lo[i].abs() >= INF || hi[i].abs() >= INF) {
        return Err(Error::UnboundedPolytope(format!(
            "interval propagation leaves coordinate {i} unbounded"
        )));
    }
    Ok(Some((sys, lo, hi)))
}

/// Runs the search, splitting the first branching coordinate across threads.
/// Each branch's results are produced by `leaf` and returned in branch order.
fn split_search<R: Send>(
    sys: &IntSystem,
    lo: &[i128],
    hi: &[i128],
    opts: &LatticeOptions,
    leaf: impl Fn(&Search, &[i128], &[i128]) -> Result<R> + Sync,
) -> Result<Vec<R>> {
    let nodes = AtomicU64::new(0);
    let search = Search {
        sys,
        nodes: &nodes,
        max_nodes: opts.max_nodes,
    };
    let Some(var) = (0..sys.n).find(|&i| lo[i] < hi[i]) else {
        return Ok(vec![leaf(&search, lo, hi)?]);
    };
    let branches: Vec<(Vec<i128>, Vec<i128>)> = (lo[var]..=hi[var])
        .filter_map(|v| {
            let mut l2 = lo.to_vec();
            let mut h2 = hi.to_vec();
            l2[var] = v;
            h2[var] = v;
            sys.propagate(&mut l2, &mut h2, Some(var))
                .then_some((l2, h2))
        })
        .collect();
    branches
        .par_iter()
        .map(|(l, h)| leaf(&search, l, h))
        .collect()
}

/// All integer points of `P` in lexicographic order.
pub fn lattice_points_with(p: &HPolytope, opts: &LatticeOptions) -> Result<Vec<RatVector>> {
    let Some((sys, lo, hi)) = root(p, opts)? else {
        return Ok(Vec::new());
    };
    let parts = split_search(&sys, &lo, &hi, opts, |s, l, h| {
        let mut out: Vec<Vec<i128>> = Vec::new();
        s.dfs(l, h, &mut |x| out.push(x.to_vec()))?;
        Ok(out)
    })?;
    Ok(parts
        .into_iter()
        .flatten()
        .map(|x| RatVector(x.into_iter().map(|v| Rat::from_integer(v.into())).collect()))
        .collect())
}

pub fn lattice_points(p: &HPolytope) -> Result<Vec<RatVector>> {
    lattice_points_with(p, &LatticeOptions::default())
}

/// Number of integer points of `P` without materializing them.
pub fn count_lattice_points_with(p: &HPolytope, opts: &LatticeOptions) -> Result<u128> {
    let Some((sys, lo, hi)) = root(p, opts)? else {
        return Ok(0);
    };
    let parts = split_search(&sys, &lo, &hi, opts, |s, l, h| {
        let mut count: u128 = 0;
        s.dfs(l, h, &mut |_| count += 1)?;
        Ok(count)
    })?;
    Ok(parts.into_iter().sum())
}

pub fn count_lattice_points(p: &HPolytope) -> Result<u128> {
    count_lattice_points_with(p, &LatticeOptions::default())
}

/// Integer points satisfying every inequality strictly.
pub fn count_interior_lattice_points(p: &HPolytope) -> Result<u128> {
    count_lattice_points_with(
        p,
        &LatticeOptions {
            strict: true,
            ..Default::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{int, rat};

    fn simplex(scale: i64) -> HPolytope {
        let mut p = HPolytope::new(3);
        for i in 0..3 {
            p.add_sparse_inequality(&[(i, -1)], int(0));
        }
        p.add_sparse_inequality(&[(0, 1), (1, 1), (2, 1)], int(scale));
        p
    }

    #[test]
    fn simplex_counts() {
        // C(t + 3, 3)
        for t in 0..6i64 {
            let expected = ((t + 1) * (t + 2) * (t + 3) / 6) as u128;
            assert_eq!(count_lattice_points(&simplex(t)).unwrap(), expected);
        }
    }

    #[test]
    fn lexicographic_and_complete() {
        let pts = lattice_points(&simplex(1)).unwrap();
        let as_ints: Vec<Vec<i64>> = pts
            .iter()
            .map(|v| {
                v.iter()
                    .map(|r| r.to_integer().try_into().unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(
            as_ints,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn rational_bounds_round_inward() {
        let mut p = HPolytope::new(1);
        p.add_sparse_inequality(&[(0, -2)], int(-1)); // x >= 1/2
        p.add_inequality(RatVector(vec![int(1)]), rat(7, 2));
        assert_eq!(count_lattice_points(&p).unwrap(), 3);
    }

    #[test]
    fn equality_without_integer_solution() {
        let mut p = simplex(3);
        p.add_sparse_equality(&[(0, 2), (1, 2)], int(3));
        assert_eq!(count_lattice_points(&p).unwrap(), 0);
    }

    #[test]
    fn unbounded_is_reported() {
        let mut p = HPolytope::new(2);
        p.add_sparse_inequality(&[(0, -1)], int(0));
        p.add_sparse_inequality(&[(0, 1)], int(2));
        assert!(matches!(
            count_lattice_points(&p),
            Err(Error::UnboundedPolytope(_))
        ));
    }

    #[test]
    fn budget() {
        let opts = LatticeOptions {
            max_nodes: Some(3),
            ..Default::default()
        };
        assert!(matches!(
            count_lattice_points_with(&simplex(5), &opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn interior_points() {
        // strict simplex 0 < x_i, sum < 5: x_i >= 1, sum <= 4 -> C(4, 3) = 4
        assert_eq!(count_interior_lattice_points(&simplex(5)).unwrap(), 4);
    }
}
