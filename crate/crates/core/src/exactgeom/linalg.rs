//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::rat::Rat;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut rows = rows.to_vec();
    rref(&mut rows).len()
}

/// Incrementally maintained row space; `insert` reports whether the rank grew.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    basis: Vec<(usize, Vec<Rat>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn insert(&mut self, row: &[Rat]) -> bool {
        let mut v = row.to_vec();
        for (c, b) in &self.basis {
            if !v[*c].is_zero() {
                let f = v[*c].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rat::one() / &v[c];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.basis.push((c, v));
        true
    }
}

/// Determinant by elimination.
pub fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (v, pv) in row.iter_mut().zip(&pivot).skip(c) {
                *v -= &f * pv;
            }
        }
    }
    det
}

/// Solution set of `C x = d` as `x = base + basis * y`, where `y` ranges over
/// the free coordinates. `None` when the system is inconsistent.
#[derive(Clone, Debug)]
pub struct AffineParametrization {
    pub base: Vec<Rat>,
    /// One column per free coordinate, each of full ambient length.
    pub directions: Vec<Vec<Rat>>,
    pub free: Vec<usize>,
}

impl AffineParametrization {
    pub fn solve(equalities: &[(Vec<Rat>, Rat)], dim: usize) -> Option<Self> {
        let mut rows: Vec<Vec<Rat>> = equalities
            .iter()
            .map(|(c, d)| {
                let mut r = c.clone();
                r.push(d.clone());
                r
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.last() == Some(&dim) {
            return None;
        }
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let mut base = vec![Rat::zero(); dim];
        for (r, &p) in pivots.iter().enumerate() {
            base[p] = rows[r][dim].clone();
        }
        let directions = free
            .iter()
            .map(|&f| {
                let mut col = vec![Rat::zero(); dim];
                col[f] = Rat::one();
                for (r, &p) in pivots.iter().enumerate() {
                    col[p] = -rows[r][f].clone();
                }
                col
            })
            .collect();
        Some(AffineParametrization {
            base,
            directions,
            free,
        })
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn lift(&self, y: &[Rat]) -> Vec<Rat> {
        let mut x = self.base.clone();
        for (coef, dir) in y.iter().zip(&self.directions) {
            if coef.is_zero() {
                continue;
            }
            for (xi, di) in x.iter_mut().zip(dir) {
                if !di.is_zero() {
                    *xi += coef * di;
                }
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_det() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(determinant(&a), int(0));
        let b = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(&b), int(5));
    }

    #[test]
    fn row_space_tracks_rank() {
        let mut rs = RowSpace::new();
        assert!(rs.insert(&[int(1), int(1)]));
        assert!(!rs.insert(&[int(2), int(2)]));
        assert!(rs.insert(&[int(0), rat(1, 3)]));
        assert_eq!(rs.rank(), 2);
    }

    #[test]
    fn parametrize_plane() {
        // x + y + z = 1
        let eq = vec![(vec![int(1), int(1), int(1)], int(1))];
        let p = AffineParametrization::solve(&eq, 3).unwrap();
        assert_eq!(p.dim(), 2);
        let x = p.lift(&[rat(1, 2), rat(1, 4)]);
        assert_eq!(x.iter().sum::<Rat>(), int(1));
        let inconsistent = vec![(vec![int(1)], int(1)), (vec![int(2)], int(3))];
        assert!(AffineParametrization::solve(&inconsistent, 1).is_none());
    }
}
