use std::fmt;
use std::ops::{Deref, DerefMut, Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses `"p/q"`, `"-p/q"` or a plain integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Dense vector of rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVector(pub Vec<Rat>);

impl RatVector {
    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rat::zero(); dim])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RatVector(values.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &[Rat]) -> Rat {
        debug_assert_eq!(self.0.len(), other.len());
        self.0
            .iter()
            .zip(other)
            .filter(|(a, _)| !a.is_zero())
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatVector(self.0.iter().map(|v| v * c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|v| v.is_integer())
    }

    pub fn denominator_lcm(&self) -> BigInt {
        lcm_of_denominators(&self.0)
    }
}

impl Deref for RatVector {
    type Target = [Rat];
    fn deref(&self) -> &[Rat] {
        &self.0
    }
}

impl DerefMut for RatVector {
    fn deref_mut(&mut self) -> &mut [Rat] {
        &mut self.0
    }
}

impl From<Vec<Rat>> for RatVector {
    fn from(v: Vec<Rat>) -> Self {
        RatVector(v)
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Square `n x n` matrix of rationals, indexed `(row, column)` from zero and
/// stored row-major. Row-major flattening is also the coordinate order used by
/// every matrix polytope in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix {
            n,
            entries: vec![Rat::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Permutation matrix with a one at `(i, perm[i])`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len());
        for (i, &j) in perm.iter().enumerate() {
            m[(i, j)] = Rat::one();
        }
        m
    }

    /// Matrix of the reversed permutation `n, n-1, ..., 1`.
    pub fn anti_identity(n: usize) -> Self {
        let perm: Vec<usize> = (0..n).rev().collect();
        Self::permutation(&perm)
    }

    pub fn filled(n: usize, value: Rat) -> Self {
        RatMatrix {
            n,
            entries: vec![value; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix is not square".into()));
        }
        Ok(RatMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect();
        Self::from_rows(rows).expect("square integer matrix")
    }

    /// Reshapes a flattened row-major vector of length `n*n`.
    pub fn from_vector(v: &[Rat]) -> Result<Self> {
        let n = (v.len() as f64).sqrt().round() as usize;
        if n * n != v.len() {
            return Err(Error::InvalidInput(format!(
                "vector of length {} is not a square matrix",
                v.len()
            )));
        }
        Ok(RatMatrix {
            n,
            entries: v.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn to_vector(&self) -> RatVector {
        RatVector(self.entries.clone())
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        self.entries
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<Rat> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| &self[(i, j)]).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<Rat> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| &self[(i, j)]).sum())
            .collect()
    }

    /// Sum along the diagonal `j - i = offset`, for `-(n-1) <= offset <= n-1`.
    pub fn diagonal_sum(&self, offset: isize) -> Rat {
        self.diagonal(offset).into_iter().sum()
    }

    /// Entries of the diagonal `j - i = offset`, read top to bottom.
    pub fn diagonal(&self, offset: isize) -> Vec<Rat> {
        let n = self.n as isize;
        (0..n)
            .filter_map(|i| {
                let j = i + offset;
                (0..n)
                    .contains(&j)
                    .then(|| self[(i as usize, j as usize)].clone())
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(&Rat) -> Rat) -> Self {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|v| v * c)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|v| v.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|v| !v.is_negative())
    }

    pub fn denominator_lcm(&self) -> BigInt {
        lcm_of_denominators(&self.entries)
    }

    /// Weakly increasing along rows and down columns.
    pub fn is_monotone(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (i + 1 >= n || self[(i, j)] <= self[(i + 1, j)])
                    && (j + 1 >= n || self[(i, j)] <= self[(i, j + 1)])
            })
        })
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rat("2/-4").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(rat(6, 4).to_string(), "3/2");
        assert_eq!(rat(4, 2).to_string(), "2");
    }

    #[test]
    fn diagonals() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(m.diagonal_sum(0), int(15));
        assert_eq!(m.diagonal_sum(2), int(3));
        assert_eq!(m.diagonal_sum(-2), int(7));
        assert_eq!(m.diagonal(-1), vec![int(4), int(8)]);
        assert_eq!(m.row_sums(), vec![int(6), int(15), int(24)]);
        assert_eq!(m.col_sums(), vec![int(12), int(15), int(18)]);
    }
}
