//! Transfer-matrix count of integer points of `t M^k_{alpha,beta}`.
//!
//! A monotone matrix is determined by its `2n-1` diagonals. Each diagonal is a
//! weakly increasing tuple with a prescribed sum, and the monotonicity
//! conditions only relate neighbouring diagonals, where they say that the
//! shorter one `a` interlaces the longer one `b`:
//!
//! ```text
//! b[0] <= a[0] <= b[1] <= a[1] <= ... <= a[m-1] <= b[m]
//! ```
//!
//! Both triangles are swept from their corner towards the main diagonal and
//! the two tallies are joined there. A step from `a` to `b` places one entry of
//! `b` at a time; the intermediate state `b[0..j] ++ a[j-1..m]` is again a
//! weakly increasing tuple, so equal partial states from different `a` merge.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::birkhoff::Margins;
use crate::error::{Error, Result};

type Tally = HashMap<Vec<u16>, u128>;

fn merge(mut a: Tally, b: Tally) -> Tally {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn guard(t: &Tally, max_states: Option<usize>) -> Result<()> {
    match max_states {
        Some(cap) if t.len() > cap => Err(Error::BudgetExceeded(format!(
            "diagonal DP holds {} states, cap is {cap}",
            t.len()
        ))),
        _ => Ok(()),
    }
}

/// Whether the entries still to be placed (positions `j+1..=m`) can bring the
/// prefix sum to `target`. `s` is `b[0..=j] ++ a[j..m]`.
fn reachable(s: &[u16], j: usize, target: i64, cap: i64) -> bool {
    let m = s.len() - 1;
    let prefix: i64 = s[..=j].iter().map(|&v| v as i64).sum();
    let min_rest: i64 = s[j + 1..].iter().map(|&v| v as i64).sum();
    let max_rest: i64 = if j < m {
        s[j + 2..].iter().map(|&v| v as i64).sum::<i64>() + cap
    } else {
        0
    };
    prefix + min_rest <= target && target <= prefix + max_rest
}

/// Extends every diagonal of length `m` to all interlacing diagonals of
/// length `m + 1` with entries in `[0, cap]` and sum `target`.
fn extend(tally: Tally, target: i64, cap: i64, max_states: Option<usize>) -> Result<Tally> {
    // Place b[0] in [0, a[0]]; state becomes b[0] ++ a.
    let mut cur: Tally = tally
        .into_par_iter()
        .fold(Tally::new, |mut acc, (a, w)| {
            for v in 0..=a[0] {
                let mut s = Vec::with_capacity(a.len() + 1);
                s.push(v);
                s.extend_from_slice(&a);
                if reachable(&s, 0, target, cap) {
                    *acc.entry(s).or_insert(0) += w;
                }
            }
            acc
        })
        .reduce(Tally::new, merge);
    guard(&cur, max_states)?;
    let m = cur.keys().next().map_or(0, |s| s.len() - 1);
    for j in 1..=m {
        cur = cur
            .into_par_iter()
            .fold(Tally::new, |mut acc, (s, w)| {
                let lo = s[j];
                let hi = if j < m {
                    s[j + 1]
                } else {
                    let prefix: i64 = s[..j].iter().map(|&v| v as i64).sum();
                    let last = target - prefix;
                    if last < lo as i64 || last > cap {
                        return acc;
                    }
                    let mut t = s;
                    t[j] = last as u16;
                    *acc.entry(t).or_insert(0) += w;
                    return acc;
                };
                for v in lo..=hi {
                    let mut t = s.clone();
                    t[j] = v;
                    if reachable(&t, j, target, cap) {
                        *acc.entry(t).or_insert(0) += w;
                    }
                }
                acc
            })
            .reduce(Tally::new, merge);
        guard(&cur, max_states)?;
    }
    Ok(cur)
}

/// Tally of main diagonals reachable from one corner; `sums[q]` is the
/// required sum of the diagonal of length `q + 1`.
fn sweep(sums: &[i64], cap: i64, max_states: Option<usize>) -> Result<Tally> {
    let mut tally = Tally::new();
    if (0..=cap).contains(&sums[0]) {
        tally.insert(vec![sums[0] as u16], 1);
    }
    for &target in &sums[1..] {
        if tally.is_empty() {
            break;
        }
        tally = extend(tally, target, cap, max_states)?;
    }
    Ok(tally)
}

fn partial_sums(v: &[u64], t: u64) -> Vec<i64> {
    v.iter()
        .scan(0i64, |acc, &x| {
            *acc += (x * t) as i64;
            Some(*acc)
        })
        .collect()
}

/// `#(t M^k_{alpha,beta} ∩ Z^{n x n})`.
pub fn count_m_diagonal_dp(
    margins: &Margins,
    k: u64,
    t: u64,
    max_states: Option<usize>,
) -> Result<u128> {
    let cap = (k * t) as i64;
    if cap > u16::MAX as i64 {
        return Err(Error::InvalidInput(format!(
            "entry bound {cap} exceeds the supported range"
        )));
    }
    let upper = sweep(&partial_sums(margins.alpha(), t), cap, max_states)?;
    let lower = sweep(&partial_sums(margins.beta(), t), cap, max_states)?;
    let (small, large) = if upper.len() <= lower.len() {
        (&upper, &lower)
    } else {
        (&lower, &upper)
    };
    Ok(small
        .iter()
        .filter_map(|(s, w)| large.get(s).map(|v| v * w))
        .sum())
}

/// `#(t M_n^k ∩ Z^{n x n})`.
pub fn count_m_nk(n: usize, k: u64, t: u64, max_states: Option<usize>) -> Result<u128> {
    count_m_diagonal_dp(&Margins::ones(n), k, t, max_states)
}
