//! Double description method for pointed polyhedral cones.
//!
//! The cone is `{z : h . z >= 0 for every row h}` in `Z^m`. Constraints are
//! added one at a time; generators are kept as primitive integer vectors with
//! their sets of tight constraints, and new extreme rays are produced only from
//! pairs that pass the combinatorial adjacency test.

use std::cmp::Ordering;
use std::fmt::Debug;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

/// Integer arithmetic needed by the double description step. Operations
/// return `None` on overflow.
pub(crate) trait DdInt: Clone + PartialEq + Send + Sync + Debug {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn sign(&self) -> Ordering;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn neg(&self) -> Option<Self>;
    /// `a * b - c * d`
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn dot(a: &[Self], b: &[Self]) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
}

impl DdInt for i128 {
    fn zero_value() -> Self {
        0
    }
    fn one_value() -> Self {
        1
    }
    fn sign(&self) -> Ordering {
        self.cmp(&0)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn dot(a: &[Self], b: &[Self]) -> Option<Self> {
        let mut acc: i128 = 0;
        for (x, y) in a.iter().zip(b) {
            if *x != 0 && *y != 0 {
                acc = acc.checked_add(x.checked_mul(*y)?)?;
            }
        }
        Some(acc)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl DdInt for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        num_traits::One::one()
    }
    fn sign(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn dot(a: &[Self], b: &[Self]) -> Option<Self> {
        let mut acc = BigInt::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        Some(acc)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

#[derive(Debug)]
pub(crate) struct Overflow;

#[derive(Clone, Debug)]
struct Ray<T> {
    v: Vec<T>,
    zero: FixedBitSet,
    zero_count: usize,
}

/// Generators of a cone: extreme rays plus a lineality basis.
#[derive(Clone, Debug)]
pub(crate) struct ConeGenerators<T> {
    pub rays: Vec<Vec<T>>,
    pub lineality: Vec<Vec<T>>,
}

fn normalize<T: DdInt>(v: &mut [T]) {
    let mut g = T::zero_value();
    for x in v.iter() {
        if x.sign() != Ordering::Equal {
            g = g.gcd(x);
            if g == T::one_value() {
                return;
            }
        }
    }
    if g.sign() == Ordering::Equal || g == T::one_value() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}

/// `a * u - b * w`, normalized.
fn combine<T: DdInt>(a: &T, u: &[T], b: &T, w: &[T]) -> Option<Vec<T>> {
    let mut out = Vec::with_capacity(u.len());
    for (x, y) in u.iter().zip(w) {
        out.push(T::mul_sub(a, x, b, y)?);
    }
    normalize(&mut out);
    Some(out)
}

/// Runs the double description method on the cone `{z : rows[k] . z >= 0}`.
pub(crate) fn double_description<T: DdInt>(
    rows: &[Vec<T>],
    dim: usize,
) -> Result<ConeGenerators<T>, Overflow> {
    let k_total = rows.len();
    let mut lineality: Vec<Vec<T>> = (0..dim)
        .map(|i| {
            let mut e = vec![T::zero_value(); dim];
            e[i] = T::one_value();
            e
        })
        .collect();
    let mut rays: Vec<Ray<T>> = Vec::new();

    for (k, h) in rows.iter().enumerate() {
        let lin_vals: Vec<T> = lineality
            .iter()
            .map(|l| T::dot(h, l).ok_or(Overflow))
            .collect::<Result<_, _>>()?;
        if let Some(pos) = lin_vals.iter().position(|v| v.sign() != Ordering::Equal) {
            // The new constraint cuts the lineality space.
            let mut l = lineality.swap_remove(pos);
            let mut hl = lin_vals[pos].clone();
            let mut rest_vals = lin_vals;
            rest_vals.swap_remove(pos);
            if hl.sign() == Ordering::Less {
                l = l
                    .iter()
                    .map(|x| x.neg())
                    .collect::<Option<_>>()
                    .ok_or(Overflow)?;
                hl = hl.neg().ok_or(Overflow)?;
            }
            for (other, val) in lineality.iter_mut().zip(&rest_vals) {
                if val.sign() != Ordering::Equal {
                    *other = combine(&hl, other, val, &l).ok_or(Overflow)?;
                }
            }
            for r in rays.iter_mut() {
                let hr = T::dot(h, &r.v).ok_or(Overflow)?;
                if hr.sign() != Ordering::Equal {
                    r.v = combine(&hl, &r.v, &hr, &l).ok_or(Overflow)?;
                }
                r.zero.insert(k);
                r.zero_count += 1;
            }
            let mut zero = FixedBitSet::with_capacity(k_total);
            zero.insert_range(0..k);
            rays.push(Ray {
                v: l,
                zero,
                zero_count: k,
            });
            continue;
        }

        let vals: Vec<T> = rays
            .iter()
            .map(|r| T::dot(h, &r.v).ok_or(Overflow))
            .collect::<Result<_, _>>()?;
        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| vals[i].sign() == Ordering::Greater)
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| vals[i].sign() == Ordering::Less)
            .collect();

        let mut new_rays: Vec<Ray<T>> = Vec::new();
        if !neg.is_empty() && !pos.is_empty() {
            // Adjacent pairs share at least (m - lineality - 2) tight constraints.
            let threshold = (dim - lineality.len()).saturating_sub(2);
            let rays_ref = &rays;
            let vals_ref = &vals;
            let found: Vec<Option<Ray<T>>> = pos
                .par_iter()
                .flat_map_iter(|&p| {
                    neg.iter().filter_map(move |&n| {
                        let mut common = rays_ref[p].zero.clone();
                        common.intersect_with(&rays_ref[n].zero);
                        let count = common.count_ones(..);
                        if count < threshold {
                            return None;
                        }
                        let blocked = rays_ref.iter().enumerate().any(|(i, r)| {
                            i != p && i != n && r.zero_count >= count && common.is_subset(&r.zero)
                        });
                        if blocked {
                            return None;
                        }
                        let v = combine(&vals_ref[p], &rays_ref[n].v, &vals_ref[n], &rays_ref[p].v);
                        let mut zero = common;
                        zero.insert(k);
                        Some(v.map(|v| Ray {
                            v,
                            zero,
                            zero_count: count + 1,
                        }))
                    })
                })
                .collect();
            for r in found {
                new_rays.push(r.ok_or(Overflow)?);
            }
        }

        let mut kept: Vec<Ray<T>> = Vec::with_capacity(rays.len() + new_rays.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            match v.sign() {
                Ordering::Greater => kept.push(r),
                Ordering::Equal => {
                    let mut r = r;
                    r.zero.insert(k);
                    r.zero_count += 1;
                    kept.push(r);
                }
                Ordering::Less => {}
            }
        }
        kept.extend(new_rays);
        rays = kept;
    }

    Ok(ConeGenerators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
        v.sort();
        v
    }

    #[test]
    fn square_cone() {
        // Homogenized unit square: s >= 0, x >= 0, y >= 0, s - x >= 0, s - y >= 0.
        let rows: Vec<Vec<i128>> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, -1, 0],
            vec![1, 0, -1],
        ];
        let g = double_description(&rows, 3).unwrap();
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            vec![vec![1, 0, 0], vec![1, 0, 1], vec![1, 1, 0], vec![1, 1, 1]]
        );
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let rows: Vec<Vec<i128>> = vec![vec![1, 0]];
        let g = double_description(&rows, 2).unwrap();
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
    }

    #[test]
    fn bigint_agrees_with_i128() {
        let rows: Vec<Vec<i128>> = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![2, -1, -1],
            vec![3, -2, 1],
        ];
        let small = sorted(double_description(&rows, 3).unwrap().rays);
        let big_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let big = double_description(&big_rows, 3).unwrap().rays;
        let mut big: Vec<Vec<i128>> = big
            .iter()
            .map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect())
            .collect();
        big.sort();
        assert_eq!(small, big);
    }
}
