//! Exact fitting of Ehrhart polynomials and quasi-polynomials from counts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{count_lattice_points, HPolytope, Rat};

/// Coefficients `c_0, c_1, ...` from low to high degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rat {
        self.eval(&Rat::from_integer(t.into()))
    }

    /// Coefficients as `p/q` strings, low to high.
    pub fn coeff_strings(&self) -> Vec<String> {
        if self.coeffs.is_empty() {
            return vec!["0".into()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 => format!("{c} t"),
                _ => format!("{c} t^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

/// Newton form through the first `degree + 1` points, checked against the rest.
pub fn interpolate_polynomial(points: &[(i64, BigInt)], degree: usize) -> Result<Polynomial> {
    if points.len() < degree + 1 {
        return Err(Error::InvalidInput(format!(
            "{} points cannot determine a degree {degree} polynomial",
            points.len()
        )));
    }
    let (fit, rest) = points.split_at(degree + 1);
    let xs: Vec<Rat> = fit
        .iter()
        .map(|(t, _)| Rat::from_integer((*t).into()))
        .collect();
    for i in 0..xs.len() {
        if xs[..i].contains(&xs[i]) {
            return Err(Error::InvalidInput(
                "interpolation nodes must be distinct".into(),
            ));
        }
    }
    let mut dd: Vec<Rat> = fit
        .iter()
        .map(|(_, v)| Rat::from_integer(v.clone()))
        .collect();
    for level in 1..dd.len() {
        for i in (level..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand the Newton form into the monomial basis.
    let mut coeffs = vec![Rat::zero(); dd.len()];
    for i in (0..dd.len()).rev() {
        // coeffs <- coeffs * (t - xs[i]) + dd[i]
        let mut next = vec![Rat::zero(); dd.len()];
        for (j, c) in coeffs.iter().enumerate() {
            if j + 1 < next.len() {
                next[j + 1] += c;
            }
            next[j] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let poly = Polynomial::new(coeffs);
    for (t, v) in rest {
        if poly.eval_int(*t) != Rat::from_integer(v.clone()) {
            return Err(Error::DegreeOverflow(degree));
        }
    }
    Ok(poly)
}

type Evaluator = Box<dyn Fn(u64) -> Result<u128> + Send + Sync>;

/// `t -> #(tP ∩ Z^N)` together with `dim P`.
pub struct CountFunction {
    dim: usize,
    label: String,
    eval: Evaluator,
}

impl CountFunction {
    pub fn new(
        dim: usize,
        label: impl Into<String>,
        eval: impl Fn(u64) -> Result<u128> + Send + Sync + 'static,
    ) -> Self {
        CountFunction {
            dim,
            label: label.into(),
            eval: Box::new(eval),
        }
    }

    /// Generic lattice-point search on dilates of `p`.
    pub fn from_polytope(p: HPolytope, dim: usize) -> Self {
        CountFunction::new(dim, "generic", move |t| count_lattice_points(&p.dilate(t)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, t: u64) -> Result<u128> {
        (self.eval)(t)
    }

    /// Evaluates at every `t`, in parallel, returning results in input order.
    pub fn eval_many(&self, ts: &[u64]) -> Result<Vec<u128>> {
        ts.par_iter().map(|&t| self.eval(t)).collect()
    }
}

impl fmt::Debug for CountFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CountFunction")
            .field("dim", &self.dim)
            .field("label", &self.label)
            .finish()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EhrhartFit {
    pub polynomial: Polynomial,
    /// `(t, count)` pairs used for interpolation.
    pub fitted: Vec<(u64, u128)>,
    /// `(t, count)` pairs that the polynomial was checked against.
    pub verified: Vec<(u64, u128)>,
    /// Whether the polynomial takes the value 1 at `t = 0`.
    pub constant_term_is_one: bool,
    pub counter: String,
}

fn points(ts: &[u64], counts: &[u128]) -> Vec<(i64, BigInt)> {
    ts.iter()
        .zip(counts)
        .map(|(&t, &c)| (t as i64, BigInt::from(c)))
        .collect()
}

/// Interpolates through `fit_ts` (exactly `dim + 1` nodes) and checks `verify_ts`.
pub fn fit_and_verify(f: &CountFunction, fit_ts: &[u64], verify_ts: &[u64]) -> Result<EhrhartFit> {
    let d = f.dim();
    if fit_ts.len() != d + 1 {
        return Err(Error::InvalidInput(format!(
            "need {} interpolation nodes, got {}",
            d + 1,
            fit_ts.len()
        )));
    }
    let fit_counts = f.eval_many(fit_ts)?;
    let polynomial = interpolate_polynomial(&points(fit_ts, &fit_counts), d)?;
    let verify_counts = f.eval_many(verify_ts)?;
    for (&t, &c) in verify_ts.iter().zip(&verify_counts) {
        let predicted = polynomial.eval_int(t as i64);
        if predicted != Rat::from_integer(c.into()) {
            return Err(Error::NotAPolynomial {
                t,
                actual: c.to_string(),
                predicted: predicted.to_string(),
            });
        }
    }
    Ok(EhrhartFit {
        constant_term_is_one: polynomial.eval_int(0).is_one(),
        polynomial,
        fitted: fit_ts.iter().copied().zip(fit_counts).collect(),
        verified: verify_ts.iter().copied().zip(verify_counts).collect(),
        counter: f.label().to_string(),
    })
}

pub const DEFAULT_VERIFY_EXTRA: usize = 3;

/// Fits on `t = 1..=d+1` and verifies on the next `verify_extra` values.
pub fn ehrhart_polynomial(f: &CountFunction, verify_extra: usize) -> Result<EhrhartFit> {
    let d = f.dim() as u64;
    let fit: Vec<u64> = (1..=d + 1).collect();
    let verify: Vec<u64> = (d + 2..d + 2 + verify_extra as u64).collect();
    fit_and_verify(f, &fit, &verify)
}

/// Constituent `r` applies to `t ≡ r (mod period)`.
#[derive(Clone, Debug, Serialize)]
pub struct QuasiPolynomial {
    pub period: u64,
    pub constituents: Vec<Polynomial>,
    /// Smaller candidate periods that failed verification.
    pub rejected: Vec<u64>,
    /// The lcm of vertex denominators the search started from.
    pub denominator_lcm: u64,
}

impl QuasiPolynomial {
    pub fn eval(&self, t: u64) -> Rat {
        self.constituents[(t % self.period) as usize].eval_int(t as i64)
    }

    /// The period is strictly smaller than the denominator bound.
    pub fn collapsed(&self) -> bool {
        self.period < self.denominator_lcm
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.period == 1).then(|| &self.constituents[0])
    }
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|p| m.is_multiple_of(*p)).collect()
}

/// Smallest period dividing `denominator_lcm` whose constituents, fitted on
/// `t = 1..=p(d+1)`, also match `t = p(d+1)+1..=p(d+2)`.
pub fn quasi_polynomial(f: &CountFunction, denominator_lcm: u64) -> Result<QuasiPolynomial> {
    if denominator_lcm == 0 {
        return Err(Error::InvalidInput(
            "denominator lcm must be positive".into(),
        ));
    }
    let d = f.dim() as u64;
    let mut cache: BTreeMap<u64, u128> = BTreeMap::new();
    let mut rejected = Vec::new();
    for p in divisors(denominator_lcm) {
        let needed: Vec<u64> = (1..=p * (d + 2))
            .filter(|t| !cache.contains_key(t))
            .collect();
        for (t, c) in needed.iter().zip(f.eval_many(&needed)?) {
            cache.insert(*t, c);
        }
        let fit = |r: u64| -> Result<Polynomial> {
            let pts: Vec<(i64, BigInt)> = (1..=p * (d + 2))
                .filter(|t| t % p == r)
                .map(|t| (t as i64, BigInt::from(cache[&t])))
                .collect();
            interpolate_polynomial(&pts, d as usize)
        };
        match (0..p).map(fit).collect::<Result<Vec<_>>>() {
            Ok(constituents) => {
                return Ok(QuasiPolynomial {
                    period: p,
                    constituents,
                    rejected,
                    denominator_lcm,
                })
            }
            Err(Error::DegreeOverflow(_)) => rejected.push(p),
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoPeriodFound(denominator_lcm))
}

/// `(-1)^d L(P; -1)`, which equals the number of relative interior lattice
/// points of `P`.
pub fn reciprocity_value(poly: &Polynomial, dim: usize) -> Rat {
    let v = poly.eval_int(-1);
    if dim % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Whether every coefficient is nonnegative.
pub fn has_nonnegative_coefficients(poly: &Polynomial) -> bool {
    poly.coeffs().iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::{build_restricted_birkhoff, count_lattice_points_direct, BirkhoffSpec};
    use crate::exactgeom::{count_interior_lattice_points, int, rat};

    fn binom(n: i64, k: i64) -> i64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn b32() -> CountFunction {
        let spec = BirkhoffSpec::new(3, 2).unwrap();
        CountFunction::new(4, "direct", move |t| {
            count_lattice_points_direct(spec, t, None)
        })
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let pts: Vec<(i64, BigInt)> = (0..6)
            .map(|t| (t, BigInt::from(t * t * t - 2 * t + 5)))
            .collect();
        let p = interpolate_polynomial(&pts, 3).unwrap();
        assert_eq!(p.coeffs(), &[int(5), int(-2), int(0), int(1)]);
        assert_eq!(
            interpolate_polynomial(&pts, 2),
            Err(Error::DegreeOverflow(2))
        );
        let one: Vec<(i64, BigInt)> = (1..4).map(|t| (t, BigInt::from(1))).collect();
        assert_eq!(interpolate_polynomial(&one, 0).unwrap().coeffs(), &[int(1)]);
    }

    #[test]
    fn b32_polynomial() {
        let fit = ehrhart_polynomial(&b32(), DEFAULT_VERIFY_EXTRA).unwrap();
        let expected = [int(1), int(2), rat(17, 12), rat(1, 2), rat(1, 12)];
        assert_eq!(fit.polynomial.coeffs(), &expected);
        assert!(fit.constant_term_is_one);
        for t in 0..10 {
            let closed = 2 * binom(t + 3, 4) + binom(t + 2, 2);
            assert_eq!(fit.polynomial.eval_int(t), int(closed));
        }
        assert_eq!(
            fit.polynomial.to_string(),
            "1/12 t^4 + 1/2 t^3 + 17/12 t^2 + 2 t + 1"
        );
    }

    #[test]
    fn b32_reciprocity() {
        let fit = ehrhart_polynomial(&b32(), 1).unwrap();
        let p = build_restricted_birkhoff(BirkhoffSpec::new(3, 2).unwrap());
        for t in 1..=3u64 {
            let interior = count_interior_lattice_points(&p.dilate(t)).unwrap();
            let v = fit.polynomial.eval_int(-(t as i64));
            assert_eq!(v, int(interior as i64));
        }
        assert_eq!(reciprocity_value(&fit.polynomial, 4), int(0));
    }

    #[test]
    fn point_and_segment() {
        let point = CountFunction::new(0, "point", |_| Ok(1));
        assert_eq!(
            ehrhart_polynomial(&point, 3).unwrap().polynomial.coeffs(),
            &[int(1)]
        );
        let seg = CountFunction::new(1, "segment", |t| Ok(t as u128 + 1));
        let q = quasi_polynomial(&seg, 1).unwrap();
        assert_eq!(q.period, 1);
        assert_eq!(q.constituents[0].coeffs(), &[int(1), int(1)]);
    }

    #[test]
    fn half_segment_is_quasi() {
        // [0, 1/2] has floor(t/2) + 1 points.
        let half = CountFunction::new(1, "half", |t| Ok(t as u128 / 2 + 1));
        assert!(matches!(
            ehrhart_polynomial(&half, 3),
            Err(Error::NotAPolynomial { .. }) | Err(Error::DegreeOverflow(_))
        ));
        let q = quasi_polynomial(&half, 2).unwrap();
        assert_eq!((q.period, q.rejected.clone()), (2, vec![1]));
        assert!(!q.collapsed());
        for t in 0..20 {
            assert_eq!(q.eval(t), int((t / 2 + 1) as i64));
        }
        let broken = CountFunction::new(1, "broken", |t| Ok((t * t) as u128 % 7));
        assert_eq!(
            quasi_polynomial(&broken, 2).unwrap_err(),
            Error::NoPeriodFound(2)
        );
    }

    #[test]
    fn b32_collapses() {
        let q = quasi_polynomial(&b32(), 2).unwrap();
        assert_eq!(q.period, 1);
        assert!(q.collapsed());
    }
}
