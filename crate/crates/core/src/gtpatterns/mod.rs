//! Gelfand-Tsetlin patterns, the monotone-matrix polytopes `M^k_{alpha,beta}`,
//! and the maps relating them.

mod diagonal_dp;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

pub use diagonal_dp::{count_m_diagonal_dp, count_m_nk};

use crate::birkhoff::Margins;
use crate::error::{Error, Result};
use crate::exactgeom::{count_lattice_points, HPolytope, Rat, RatMatrix, RatVector};

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionVec {
    parts: Vec<u64>,
}

impl PartitionVec {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(PartitionVec { parts })
    }

    /// `(k^n, 0^n)`.
    pub fn rectangle(k: u64, n: usize) -> Self {
        let mut parts = vec![k; n];
        parts.extend(std::iter::repeat_n(0, n));
        PartitionVec { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// Triangular array `g[i][j]`, `0 <= i <= j < n`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GTPattern {
    n: usize,
    g: Vec<Rat>,
}

/// Position of `g[i][j]` in the row-major flattening of the triangle.
pub fn gt_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    // Rows 0..i hold n, n-1, ..., n-i+1 entries.
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

impl GTPattern {
    pub fn zeros(n: usize) -> Self {
        GTPattern {
            n,
            g: vec![Rat::zero(); n * (n + 1) / 2],
        }
    }

    pub fn from_flat(n: usize, g: Vec<Rat>) -> Result<Self> {
        if g.len() != n * (n + 1) / 2 {
            return Err(Error::InvalidInput(format!(
                "a size {n} pattern has {} entries, got {}",
                n * (n + 1) / 2,
                g.len()
            )));
        }
        Ok(GTPattern { n, g })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[Rat] {
        &self.g
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.g[gt_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        let idx = gt_index(self.n, i, j);
        self.g[idx] = v;
    }

    pub fn shape(&self) -> Vec<Rat> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// `d_l = sum_i g[i][i + l]`, with `d_n = 0`.
    pub fn diagonal_sum(&self, l: usize) -> Rat {
        (0..self.n.saturating_sub(l))
            .map(|i| self.get(i, i + l).clone())
            .sum()
    }

    /// `(d_{n-1} - d_n, d_{n-2} - d_{n-1}, ..., d_0 - d_1)`.
    pub fn content(&self) -> Vec<Rat> {
        let n = self.n;
        (1..=n)
            .map(|q| self.diagonal_sum(n - q) - self.diagonal_sum(n - q + 1))
            .collect()
    }

    /// Weak decrease along rows and down columns.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (i..n.saturating_sub(1)).all(|j| {
                self.get(i, j) >= self.get(i, j + 1) && self.get(i, j + 1) >= self.get(i + 1, j + 1)
            })
        })
    }

    pub fn is_integral(&self) -> bool {
        self.g.iter().all(|v| v.is_integer())
    }
}

impl fmt::Debug for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (i..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "GT{rows:?}")
    }
}

/// A matrix in the monotone cone: `y[0][0] >= 0`, weakly increasing along rows
/// and down columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MMatrix(RatMatrix);

impl MMatrix {
    pub fn new(y: RatMatrix) -> Result<Self> {
        if y.n() == 0 || y[(0, 0)] < Rat::zero() || !y.is_monotone() {
            return Err(Error::NotInCone);
        }
        Ok(MMatrix(y))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn into_inner(self) -> RatMatrix {
        self.0
    }
}

fn add_monotone_cone(p: &mut HPolytope, n: usize) {
    for i in 0..n {
        for j in 0..n {
            if i + 1 < n {
                p.add_sparse_inequality(&[(i * n + j, 1), ((i + 1) * n + j, -1)], Rat::zero());
            }
            if j + 1 < n {
                p.add_sparse_inequality(&[(i * n + j, 1), (i * n + j + 1, -1)], Rat::zero());
            }
        }
    }
    p.add_sparse_inequality(&[(0, -1)], Rat::zero());
}

fn diagonal_terms(n: usize, l: isize) -> Vec<(usize, i64)> {
    (0..n as isize)
        .filter_map(|i| {
            let j = i + l;
            (0..n as isize)
                .contains(&j)
                .then(|| (i as usize * n + j as usize, 1))
        })
        .collect()
}

/// `M^k_{alpha,beta}` in the coordinates `y[i][j] = i * n + j`.
pub fn build_m_transportation(margins: &Margins, k: u64) -> HPolytope {
    let n = margins.n();
    let mut p = HPolytope::new(n * n);
    add_monotone_cone(&mut p, n);
    p.add_sparse_inequality(&[(n * n - 1, 1)], Rat::from_integer(k.into()));
    let mut acc = 0u64;
    for (q, a) in margins.alpha().iter().enumerate() {
        acc += a;
        let l = (n - 1 - q) as isize;
        p.add_sparse_equality(&diagonal_terms(n, l), Rat::from_integer(acc.into()));
    }
    let mut acc = 0u64;
    for (q, b) in margins.beta().iter().enumerate().take(n - 1) {
        acc += b;
        let l = -((n - 1 - q) as isize);
        p.add_sparse_equality(&diagonal_terms(n, l), Rat::from_integer(acc.into()));
    }
    p
}

/// `M_n^k`.
pub fn build_m(n: usize, k: u64) -> HPolytope {
    build_m_transportation(&Margins::ones(n), k)
}

/// `GT_{lambda,mu}` in the flattened triangular coordinates of [`gt_index`].
pub fn build_gt(lambda: &PartitionVec, mu: &[u64]) -> Result<HPolytope> {
    let n = lambda.len();
    if mu.len() != n {
        return Err(Error::InvalidInput(format!(
            "shape has {n} parts but content has {}",
            mu.len()
        )));
    }
    let idx = |i, j| gt_index(n, i, j);
    let mut p = HPolytope::new(n * (n + 1) / 2);
    for i in 0..n {
        for j in i..n.saturating_sub(1) {
            p.add_sparse_inequality(&[(idx(i, j + 1), 1), (idx(i, j), -1)], Rat::zero());
            p.add_sparse_inequality(&[(idx(i + 1, j + 1), 1), (idx(i, j + 1), -1)], Rat::zero());
        }
    }
    for (i, &part) in lambda.parts().iter().enumerate() {
        p.add_sparse_equality(&[(idx(i, i), 1)], Rat::from_integer(part.into()));
    }
    let mut acc = 0u64;
    for (q, &m) in mu.iter().enumerate() {
        acc += m;
        let l = n - 1 - q;
        let terms: Vec<(usize, i64)> = (0..n - l).map(|i| (idx(i, i + l), 1)).collect();
        p.add_sparse_equality(&terms, Rat::from_integer(acc.into()));
    }
    Ok(p)
}

/// Content `(alpha, k - beta_n, ..., k - beta_1)` of the pattern that
/// [`embed_m_to_gt`] produces from a point of `M^k_{alpha,beta}`.
pub fn embedded_content(margins: &Margins, k: u64) -> Result<Vec<u64>> {
    let mut mu = margins.alpha().to_vec();
    for &b in margins.beta().iter().rev() {
        mu.push(
            k.checked_sub(b)
                .ok_or_else(|| Error::InvalidInput(format!("column margin {b} exceeds k = {k}")))?,
        );
    }
    Ok(mu)
}

/// The size `2n` pattern with a triangle of `k`s, a triangle of `0`s and `Y`
/// rotated into the remaining square block: `g[i][n + j] = y[n-1-j][n-1-i]`.
pub fn embed_m_to_gt(y: &MMatrix, k: u64) -> Result<GTPattern> {
    let y = y.matrix();
    let n = y.n();
    let kr = Rat::from_integer(k.into());
    if y[(n - 1, n - 1)] > kr {
        return Err(Error::CapExceeded {
            found: y[(n - 1, n - 1)].to_string(),
            cap: k as i64,
        });
    }
    let mut g = GTPattern::zeros(2 * n);
    for i in 0..n {
        for j in i..n {
            g.set(i, j, kr.clone());
        }
        for j in 0..n {
            g.set(i, n + j, y[(n - 1 - j, n - 1 - i)].clone());
        }
    }
    Ok(g)
}

/// Inverse of [`embed_m_to_gt`]: reads the square block back out.
pub fn gt_to_m(g: &GTPattern) -> Result<RatMatrix> {
    if !g.n().is_multiple_of(2) {
        return Err(Error::InvalidInput("pattern size must be even".into()));
    }
    let n = g.n() / 2;
    let mut y = RatMatrix::zeros(n);
    for a in 0..n {
        for b in 0..n {
            y[(a, b)] = g.get(n - 1 - b, 2 * n - 1 - a).clone();
        }
    }
    Ok(y)
}

/// First row and column fixed; below the diagonal subtract the left
/// neighbour, above it subtract the upper neighbour.
pub fn unimodular_map(y: &RatMatrix) -> RatMatrix {
    let n = y.n();
    let mut out = y.clone();
    for i in 1..n {
        for j in 1..n {
            out[(i, j)] = if j <= i {
                &y[(i, j)] - &y[(i, j - 1)]
            } else {
                &y[(i, j)] - &y[(i - 1, j)]
            };
        }
    }
    out
}

/// Inverse of [`unimodular_map`], filled in row-major order.
pub fn unimodular_map_inverse(z: &RatMatrix) -> RatMatrix {
    let n = z.n();
    let mut y = z.clone();
    for i in 1..n {
        for j in 1..n {
            y[(i, j)] = if j <= i {
                &z[(i, j)] + &y[(i, j - 1)]
            } else {
                &z[(i, j)] + &y[(i - 1, j)]
            };
        }
    }
    y
}

/// Margins `(alpha, beta)` and `k` when `GT_{lambda,mu}` is the embedding of an
/// `M^k_{alpha,beta}`, i.e. `lambda = (k^n, 0^n)`.
fn rectangle_margins(lambda: &PartitionVec, mu: &[u64]) -> Option<(Margins, u64)> {
    let len = lambda.len();
    if len == 0 || !len.is_multiple_of(2) || mu.len() != len {
        return None;
    }
    let n = len / 2;
    let k = lambda.parts()[0];
    if k == 0
        || lambda.parts()[..n].iter().any(|&p| p != k)
        || lambda.parts()[n..].iter().any(|&p| p != 0)
    {
        return None;
    }
    let alpha = mu[..n].to_vec();
    let mut beta = Vec::with_capacity(n);
    for j in 0..n {
        beta.push(k.checked_sub(mu[len - 1 - j])?);
    }
    Margins::new(alpha, beta).ok().map(|m| (m, k))
}

/// Kostka number `K_{lambda,mu}`: integral patterns of shape `lambda` and
/// content `mu`.
pub fn kostka(lambda: &PartitionVec, mu: &[u64]) -> Result<u128> {
    if mu.len() != lambda.len() {
        return Err(Error::InvalidInput(
            "shape and content must have the same length".into(),
        ));
    }
    if lambda.size() != mu.iter().sum::<u64>() {
        return Ok(0);
    }
    if let Some((margins, k)) = rectangle_margins(lambda, mu) {
        return count_m_diagonal_dp(&margins, k, 1, None);
    }
    count_lattice_points(&build_gt(lambda, mu)?)
}

/// Lattice points of `t GT_{lambda,mu}`, i.e. the stretched Kostka number.
pub fn stretched_kostka(lambda: &PartitionVec, mu: &[u64], t: u64) -> Result<u128> {
    let scaled = PartitionVec::new(lambda.parts().iter().map(|p| p * t).collect())?;
    let mu_t: Vec<u64> = mu.iter().map(|m| m * t).collect();
    kostka(&scaled, &mu_t)
}

/// A point of the GT polytope as a pattern.
pub fn pattern_from_point(n: usize, x: &RatVector) -> Result<GTPattern> {
    GTPattern::from_flat(n, x.0.clone())
}

/// Whether `Y` lies in `M^k_{alpha,beta}`.
pub fn in_m(y: &RatMatrix, margins: &Margins, k: u64) -> bool {
    y.n() == margins.n() && build_m_transportation(margins, k).contains(&y.to_vector())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{int, is_vertex, lattice_points, rat, vertices};
    use num_traits::One;

    /// Semistandard tableaux of a shape with a given content, by brute force.
    fn ssyt_count(shape: &[usize], content: &[usize]) -> usize {
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let n = content.len();
        fn go(
            idx: usize,
            cells: &[(usize, usize)],
            fill: &mut Vec<Vec<usize>>,
            used: &mut Vec<usize>,
            content: &[usize],
            n: usize,
        ) -> usize {
            if idx == cells.len() {
                return (used == content) as usize;
            }
            let (r, c) = cells[idx];
            let mut total = 0;
            for v in 1..=n {
                if used[v - 1] == content[v - 1] {
                    continue;
                }
                if c > 0 && fill[r][c - 1] > v {
                    continue;
                }
                if r > 0 && fill[r - 1][c] >= v {
                    continue;
                }
                fill[r][c] = v;
                used[v - 1] += 1;
                total += go(idx + 1, cells, fill, used, content, n);
                used[v - 1] -= 1;
                fill[r][c] = 0;
            }
            total
        }
        let mut fill: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
        go(0, &cells, &mut fill, &mut vec![0; n], content, n)
    }

    fn m(rows: &[Vec<i64>]) -> RatMatrix {
        RatMatrix::from_int_rows(rows)
    }

    #[test]
    fn index_layout() {
        let n = 4;
        let mut seen = vec![];
        for i in 0..n {
            for j in i..n {
                seen.push(gt_index(n, i, j));
            }
        }
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
    }

    #[test]
    fn partition_validation() {
        assert!(PartitionVec::new(vec![1, 2]).is_err());
        assert_eq!(PartitionVec::rectangle(2, 2).parts(), &[2, 2, 0, 0]);
    }

    #[test]
    fn m_polytope_examples() {
        let m31 = build_m(3, 1);
        let pts = lattice_points(&m31).unwrap();
        assert_eq!(pts, vec![RatMatrix::filled(3, int(1)).to_vector()]);

        let m32 = build_m(3, 2);
        assert_eq!(lattice_points(&m32).unwrap().len(), 5);
        assert_eq!(vertices(&m32).unwrap().len(), 7);

        let special = RatMatrix::from_rows(vec![
            vec![int(0), rat(1, 2), int(1)],
            vec![rat(1, 2), rat(3, 2), rat(3, 2)],
            vec![int(1), rat(3, 2), rat(3, 2)],
        ])
        .unwrap()
        .to_vector();
        assert!(vertices(&build_m(3, 3))
            .unwrap()
            .vertices
            .contains(&special));
    }

    #[test]
    fn m_transportation() {
        let ones = Margins::ones(3);
        assert_eq!(build_m_transportation(&ones, 2), build_m(3, 2));
        let two = Margins::new(vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(
            count_lattice_points(&build_m_transportation(&two, 2)).unwrap(),
            2
        );
        let forced = Margins::new(vec![2, 0], vec![2, 0]).unwrap();
        assert_eq!(
            count_lattice_points(&build_m_transportation(&forced, 2)).unwrap(),
            1
        );
    }

    #[test]
    fn gt_polytope_counts() {
        let gt = |l: Vec<u64>, mu: &[u64]| {
            count_lattice_points(&build_gt(&PartitionVec::new(l).unwrap(), mu).unwrap()).unwrap()
        };
        assert_eq!(gt(vec![2, 0], &[1, 1]), 1);
        assert_eq!(gt(vec![2, 1, 0], &[1, 1, 1]), 2);
        assert_eq!(gt(vec![2, 2, 2, 0, 0, 0], &[1, 1, 1, 1, 1, 1]), 5);
    }

    #[test]
    fn kostka_numbers() {
        let p = |v: Vec<u64>| PartitionVec::new(v).unwrap();
        assert_eq!(kostka(&p(vec![2, 0]), &[1, 1]).unwrap(), 1);
        assert_eq!(kostka(&p(vec![2, 1, 0]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&p(vec![2, 2, 2, 0, 0, 0]), &[1; 6]).unwrap(), 5);
        assert_eq!(ssyt_count(&[2, 1], &[1, 1, 1]), 2);
        for (shape, content) in [
            (vec![3u64, 1, 0], vec![2u64, 1, 1]),
            (vec![2, 2, 0, 0], vec![1, 1, 1, 1]),
            (vec![3, 2, 1, 0], vec![2, 1, 2, 1]),
            (vec![2, 2, 1, 1], vec![1, 2, 1, 2]),
            (vec![3, 3, 0, 0], vec![1, 2, 2, 1]),
        ] {
            let shape_us: Vec<usize> = shape
                .iter()
                .map(|&v| v as usize)
                .filter(|&v| v > 0)
                .collect();
            let content_us: Vec<usize> = content.iter().map(|&v| v as usize).collect();
            assert_eq!(
                kostka(&p(shape.clone()), &content).unwrap() as usize,
                ssyt_count(&shape_us, &content_us),
                "{shape:?} {content:?}"
            );
        }
    }

    #[test]
    fn embedding_round_trip_and_content() {
        let y = MMatrix::new(RatMatrix::filled(3, int(1))).unwrap();
        let g = embed_m_to_gt(&y, 1).unwrap();
        assert_eq!(
            g.shape(),
            vec![int(1), int(1), int(1), int(0), int(0), int(0)]
        );
        assert!(g.is_valid());
        for pt in lattice_points(&build_m(3, 2)).unwrap() {
            let y = RatMatrix::from_vector(&pt).unwrap();
            let g = embed_m_to_gt(&MMatrix::new(y.clone()).unwrap(), 2).unwrap();
            assert!(g.is_valid());
            assert_eq!(
                g.content(),
                vec![int(1), int(1), int(1), int(1), int(1), int(1)]
            );
            assert_eq!(gt_to_m(&g).unwrap(), y);
        }
        let over = MMatrix::new(m(&[vec![0, 1], vec![1, 3]])).unwrap();
        assert!(matches!(
            embed_m_to_gt(&over, 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn transportation_embedding_content() {
        let margins = Margins::new(vec![2, 0, 1], vec![1, 1, 1]).unwrap();
        let k = 2;
        let mu = embedded_content(&margins, k).unwrap();
        assert_eq!(mu, vec![2, 0, 1, 1, 1, 1]);
        for pt in lattice_points(&build_m_transportation(&margins, k)).unwrap() {
            let y = MMatrix::new(RatMatrix::from_vector(&pt).unwrap()).unwrap();
            let g = embed_m_to_gt(&y, k).unwrap();
            let want: Vec<Rat> = mu.iter().map(|&v| int(v as i64)).collect();
            assert_eq!(g.content(), want);
        }
    }

    #[test]
    fn integral_counts_agree() {
        for n in 1..=3usize {
            for k in 1..=n as u64 {
                let lambda = PartitionVec::rectangle(k, n);
                let mut mu = vec![1u64; n];
                mu.extend(vec![k - 1; n]);
                let gt = build_gt(&lambda, &mu).unwrap();
                let mp = build_m(n, k);
                for t in 1..=3 {
                    assert_eq!(
                        count_lattice_points(&gt.dilate(t)).unwrap(),
                        count_lattice_points(&mp.dilate(t)).unwrap(),
                        "n={n} k={k} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn unimodular_examples() {
        assert_eq!(
            unimodular_map(&RatMatrix::filled(3, int(1))),
            m(&[vec![1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]])
        );
        // Each output entry names the input entries it is built from.
        let n = 4;
        let mut sym = RatMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                sym[(i, j)] = Rat::from_integer((1i64 << (i * n + j)).into());
            }
        }
        let out = unimodular_map(&sym);
        let bit = |i: usize, j: usize| 1i64 << (i * n + j);
        let expected = [
            [bit(0, 0), bit(0, 1), bit(0, 2), bit(0, 3)],
            [
                bit(1, 0),
                bit(1, 1) - bit(1, 0),
                bit(1, 2) - bit(0, 2),
                bit(1, 3) - bit(0, 3),
            ],
            [
                bit(2, 0),
                bit(2, 1) - bit(2, 0),
                bit(2, 2) - bit(2, 1),
                bit(2, 3) - bit(1, 3),
            ],
            [
                bit(3, 0),
                bit(3, 1) - bit(3, 0),
                bit(3, 2) - bit(3, 1),
                bit(3, 3) - bit(3, 2),
            ],
        ];
        for i in 0..n {
            for j in 0..n {
                assert_eq!(out[(i, j)], int(expected[i][j]));
            }
        }
        assert_eq!(unimodular_map_inverse(&out), sym);
    }

    #[test]
    fn unimodular_image_of_m() {
        for n in 1..=4usize {
            for k in 1..=n as u64 {
                for pt in lattice_points(&build_m(n, k)).unwrap() {
                    let z = unimodular_map(&RatMatrix::from_vector(&pt).unwrap());
                    assert!(z.is_nonnegative());
                    let l = n as isize;
                    assert!((-(l - 1)..l).all(|d| z.diagonal_sum(d) == Rat::one()));
                }
            }
        }
    }

    #[test]
    fn lattice_points_of_m_are_vertices() {
        for n in 1..=3usize {
            for k in 1..=n as u64 {
                let p = build_m(n, k);
                for pt in lattice_points(&p).unwrap() {
                    assert!(is_vertex(&p, &pt).unwrap());
                }
            }
        }
    }

    #[test]
    fn dp_matches_enumeration() {
        for n in 1..=3usize {
            for k in 1..=n as u64 {
                let p = build_m(n, k);
                for t in 1..=3 {
                    assert_eq!(
                        count_m_nk(n, k, t, None).unwrap(),
                        count_lattice_points(&p.dilate(t)).unwrap()
                    );
                }
            }
        }
        for k in 1..=4u64 {
            let p = build_m(4, k);
            for t in 1..=2 {
                assert_eq!(
                    count_m_nk(4, k, t, None).unwrap(),
                    count_lattice_points(&p.dilate(t)).unwrap()
                );
            }
        }
    }
}
