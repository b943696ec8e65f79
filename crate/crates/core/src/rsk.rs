//! RSK on nonnegative integer matrices and the piecewise-linear map it induces
//! on rational matrices.
//!
//! Tableau rows are stored as multiplicity vectors: `counts[r][v]` is the
//! number of entries equal to `v + 1` in row `r`. Inserting a whole weakly
//! increasing word into a row, or reverse-bumping a whole weakly decreasing
//! word out of it, is then linear in `n` regardless of the multiplicities.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{Rat, RatMatrix};
use crate::gtpatterns::{GTPattern, MMatrix};

/// The biword of an integer matrix: pairs `(i, j)` repeated `x[i][j]` times,
/// sorted lexicographically. Indices are 1-based, as in tableau entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biword {
    pub pairs: Vec<(u64, u64)>,
}

impl Biword {
    pub fn from_matrix(x: &[Vec<u64>]) -> Self {
        let mut pairs = Vec::new();
        for (i, row) in x.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                pairs.extend(std::iter::repeat_n(
                    (i as u64 + 1, j as u64 + 1),
                    c as usize,
                ));
            }
        }
        Biword { pairs }
    }
}

/// A semistandard tableau with entries in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SSYTableau {
    n: usize,
    counts: Vec<Vec<u64>>,
}

impl SSYTableau {
    pub fn empty(n: usize) -> Self {
        SSYTableau {
            n,
            counts: Vec::new(),
        }
    }

    /// Builds a tableau from explicit rows, checking semistandardness.
    pub fn from_rows(n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut counts = Vec::new();
        for row in rows.iter().filter(|r| !r.is_empty()) {
            if row.windows(2).any(|w| w[0] > w[1]) || row.iter().any(|&v| v == 0 || v as usize > n)
            {
                return Err(Error::InvalidInput(format!("bad tableau row {row:?}")));
            }
            let mut c = vec![0; n];
            for &v in row {
                c[v as usize - 1] += 1;
            }
            counts.push(c);
        }
        let t = SSYTableau { n, counts };
        if !t.is_semistandard() {
            return Err(Error::InvalidInput("columns must strictly increase".into()));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.counts
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .flat_map(|(v, &m)| std::iter::repeat_n(v as u64 + 1, m as usize))
                    .collect()
            })
            .collect()
    }

    pub fn shape(&self) -> Vec<u64> {
        self.counts.iter().map(|c| c.iter().sum()).collect()
    }

    /// Number of entries equal to each of `1..=n`.
    pub fn content(&self) -> Vec<u64> {
        (0..self.n)
            .map(|v| self.counts.iter().map(|c| c[v]).sum())
            .collect()
    }

    /// Shape of the subtableau of entries `<= a`, padded with zeros to length `a`.
    pub fn restricted_shape(&self, a: usize) -> Vec<u64> {
        (0..a)
            .map(|r| {
                self.counts
                    .get(r)
                    .map_or(0, |c| c[..a.min(self.n)].iter().sum())
            })
            .collect()
    }

    /// Every restricted shape is a partition and consecutive ones differ by a
    /// horizontal strip.
    pub fn is_semistandard(&self) -> bool {
        let mut prev: Vec<u64> = Vec::new();
        for a in 1..=self.n {
            let cur = self.restricted_shape(a);
            if cur.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
            for r in 0..a {
                let p = prev.get(r).copied().unwrap_or(0);
                if cur[r] < p {
                    return false;
                }
                if r + 1 < a && cur[r + 1] > p {
                    return false;
                }
            }
            prev = cur;
        }
        self.counts.len() <= self.n && self.counts.iter().all(|c| c.iter().any(|&m| m > 0))
    }

    /// Inserts a weakly increasing word, given by multiplicities, starting at
    /// row `r`; returns how much each row grew.
    fn insert_word(&mut self, mut word: Vec<u64>) -> Vec<u64> {
        let n = self.n;
        let mut growth = Vec::new();
        let mut r = 0;
        while word.iter().any(|&c| c > 0) {
            if r == self.counts.len() {
                self.counts.push(vec![0; n]);
            }
            let row = &mut self.counts[r];
            let mut bumped = vec![0; n];
            for v in 0..n {
                let c = word[v];
                if c == 0 {
                    continue;
                }
                let mut need = c;
                for u in v + 1..n {
                    if need == 0 {
                        break;
                    }
                    let take = need.min(row[u]);
                    row[u] -= take;
                    bumped[u] += take;
                    need -= take;
                }
                row[v] += c;
            }
            let added: u64 = word.iter().sum::<u64>() - bumped.iter().sum::<u64>();
            growth.push(added);
            word = bumped;
            r += 1;
        }
        growth
    }

    /// Removes the `q` largest entries of row `r` and reverse-bumps them up to
    /// the first row; returns the multiplicities ejected from the first row.
    fn eject(&mut self, r: usize, q: u64) -> Vec<u64> {
        let n = self.n;
        let mut word = vec![0u64; n];
        let mut need = q;
        for v in (0..n).rev() {
            let take = need.min(self.counts[r][v]);
            self.counts[r][v] -= take;
            word[v] += take;
            need -= take;
            if need == 0 {
                break;
            }
        }
        for row in (0..r).rev() {
            let cur = &mut self.counts[row];
            let mut out = vec![0u64; n];
            for x in (0..n).rev() {
                let c = word[x];
                if c == 0 {
                    continue;
                }
                // Each copy of x displaces the largest entry below it.
                let mut need = c;
                for u in (0..x).rev() {
                    if need == 0 {
                        break;
                    }
                    let take = need.min(cur[u]);
                    cur[u] -= take;
                    out[u] += take;
                    need -= take;
                }
                debug_assert_eq!(need, 0, "reverse bump ran out of entries");
                cur[x] += c;
            }
            word = out;
        }
        while self
            .counts
            .last()
            .is_some_and(|c| c.iter().all(|&m| m == 0))
        {
            self.counts.pop();
        }
        word
    }
}

impl std::fmt::Debug for SSYTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Insertion tableau `p` and recording tableau `q` of equal shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauPair {
    pub p: SSYTableau,
    pub q: SSYTableau,
}

fn to_counts(x: &RatMatrix) -> Result<Vec<Vec<u64>>> {
    if !x.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    if !x.is_integral() {
        return Err(Error::NonIntegerInput);
    }
    x.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    v.to_integer()
                        .to_u64()
                        .ok_or_else(|| Error::InvalidInput("entry too large".into()))
                })
                .collect()
        })
        .collect()
}

/// Row-insertion RSK of the biword of `X`: `P` has content equal to the
/// column sums of `X`, `Q` to its row sums.
pub fn rsk_forward(x: &RatMatrix) -> Result<TableauPair> {
    rsk_forward_counts(&to_counts(x)?)
}

pub fn rsk_forward_counts(x: &[Vec<u64>]) -> Result<TableauPair> {
    let n = x.len();
    let mut p = SSYTableau::empty(n);
    let mut q = SSYTableau::empty(n);
    for (i, row) in x.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidInput("matrix must be square".into()));
        }
        let growth = p.insert_word(row.clone());
        for (r, g) in growth.into_iter().enumerate() {
            if g == 0 {
                continue;
            }
            if r == q.counts.len() {
                q.counts.push(vec![0; n]);
            }
            q.counts[r][i] += g;
        }
    }
    Ok(TableauPair { p, q })
}

/// The matrix `X` with `rsk_forward(X) = (P, Q)`.
pub fn rsk_inverse(pq: &TableauPair) -> Result<RatMatrix> {
    let x = rsk_inverse_counts(pq)?;
    Ok(RatMatrix::from_rows(
        x.into_iter()
            .map(|r| r.into_iter().map(|v| Rat::from_integer(v.into())).collect())
            .collect(),
    )
    .expect("square"))
}

pub fn rsk_inverse_counts(pq: &TableauPair) -> Result<Vec<Vec<u64>>> {
    let n = pq.p.n;
    if pq.q.n != n || pq.p.shape() != pq.q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let mut p = pq.p.clone();
    let q = &pq.q;
    let mut x = vec![vec![0u64; n]; n];
    for i in (0..n).rev() {
        // The cells holding i in Q form a horizontal strip; its rightmost
        // cells sit in the top rows, so rows are emptied top to bottom.
        for r in 0..q.counts.len() {
            let c = q.counts[r][i];
            if c == 0 {
                continue;
            }
            let out = p.eject(r, c);
            for (j, m) in out.into_iter().enumerate() {
                x[i][j] += m;
            }
        }
    }
    Ok(x)
}

/// Reads `T` as a pattern: diagonal `n - a` holds the shape of the entries `<= a`.
pub fn tableau_to_gt(t: &SSYTableau, n: usize) -> GTPattern {
    let mut g = GTPattern::zeros(n);
    for a in 1..=n {
        let lam = t.restricted_shape(a);
        for (i, part) in lam.into_iter().enumerate() {
            g.set(i, i + n - a, Rat::from_integer(part.into()));
        }
    }
    g
}

/// Glues the two patterns of `(P, Q)` along their common shape: `Q` fills the
/// upper triangle and `P` the lower one, both read so that `Y` increases
/// along rows and down columns.
pub fn glue(pq: &TableauPair, n: usize) -> Result<RatMatrix> {
    if pq.p.shape() != pq.q.shape() || pq.p.n != n || pq.q.n != n {
        return Err(Error::ShapeMismatch);
    }
    let mut y = RatMatrix::zeros(n);
    for l in 0..n {
        let lq = pq.q.restricted_shape(n - l);
        let lp = pq.p.restricted_shape(n - l);
        for i in 0..n - l {
            y[(i, i + l)] = Rat::from_integer(lq[n - l - i - 1].into());
            if l > 0 {
                y[(i + l, i)] = Rat::from_integer(lp[n - l - i - 1].into());
            }
        }
    }
    Ok(y)
}

fn tableau_from_shapes(n: usize, shapes: &[Vec<u64>]) -> SSYTableau {
    let mut counts: Vec<Vec<u64>> = Vec::new();
    for a in 1..=n {
        for r in 0..a {
            let prev = if r < a - 1 { shapes[a - 2][r] } else { 0 };
            let add = shapes[a - 1][r] - prev;
            if add > 0 {
                while counts.len() <= r {
                    counts.push(vec![0; n]);
                }
                counts[r][a - 1] += add;
            }
        }
    }
    SSYTableau { n, counts }
}

/// The pair whose gluing is `Y`.
pub fn unglue(y: &RatMatrix) -> Result<TableauPair> {
    let n = y.n();
    let bad = |why: &str| Error::NotAValidGluing(why.to_string());
    if !y.is_integral() {
        return Err(bad("entries must be integers"));
    }
    let mut q_shapes = Vec::with_capacity(n);
    let mut p_shapes = Vec::with_capacity(n);
    for a in 1..=n {
        let l = n - a;
        let read = |upper: bool| -> Result<Vec<u64>> {
            (0..a)
                .map(|p| {
                    let i = a - 1 - p;
                    let v = if upper {
                        &y[(i, i + l)]
                    } else {
                        &y[(i + l, i)]
                    };
                    v.to_integer()
                        .to_u64()
                        .ok_or_else(|| bad("entries must be nonnegative"))
                })
                .collect()
        };
        q_shapes.push(read(true)?);
        p_shapes.push(read(false)?);
    }
    for shapes in [&q_shapes, &p_shapes] {
        for a in 1..=n {
            let cur = &shapes[a - 1];
            if cur.windows(2).any(|w| w[0] < w[1]) {
                return Err(bad("a diagonal is not weakly increasing"));
            }
            if a > 1 {
                let prev = &shapes[a - 2];
                for r in 0..a - 1 {
                    if !(cur[r + 1] <= prev[r] && prev[r] <= cur[r]) {
                        return Err(bad("adjacent diagonals do not interlace"));
                    }
                }
            }
        }
    }
    Ok(TableauPair {
        p: tableau_from_shapes(n, &p_shapes),
        q: tableau_from_shapes(n, &q_shapes),
    })
}

fn clear_denominators(x: &RatMatrix) -> (BigInt, RatMatrix) {
    let m = x.denominator_lcm();
    let scaled = x.scale(&Rat::from_integer(m.clone()));
    (m, scaled)
}

/// `rho(X) = glue(RSK(m X)) / m` with `m` the lcm of the entry denominators.
pub fn rho(x: &RatMatrix) -> Result<RatMatrix> {
    if !x.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let (m, scaled) = clear_denominators(x);
    let y = glue(&rsk_forward(&scaled)?, x.n())?;
    Ok(y.scale(&Rat::new(1.into(), m)))
}

/// `rho^{-1}(Y) = RSK^{-1}(unglue(m Y)) / m`.
pub fn rho_inverse(y: &RatMatrix) -> Result<RatMatrix> {
    MMatrix::new(y.clone())?;
    let (m, scaled) = clear_denominators(y);
    let x = rsk_inverse(&unglue(&scaled)?)?;
    Ok(x.scale(&Rat::new(1.into(), m)))
}

/// The explicit `2 x 2` formula for `rho`.
pub fn rho_2x2_closed_form(x: &RatMatrix) -> RatMatrix {
    assert_eq!(x.n(), 2);
    let (a, b, c, d) = (&x[(0, 0)], &x[(0, 1)], &x[(1, 0)], &x[(1, 1)]);
    RatMatrix::from_rows(vec![
        vec![std::cmp::min(b, c).clone(), a + b],
        vec![a + c, a + d + std::cmp::max(b, c)],
    ])
    .expect("square")
}

/// Whether every entry is zero.
pub fn is_zero_matrix(x: &RatMatrix) -> bool {
    x.entries().iter().all(|v| v.is_zero())
}
