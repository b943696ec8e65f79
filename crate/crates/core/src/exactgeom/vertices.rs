use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dd::{double_description, DdInt};
use super::hpoly::{HPolytope, VRep};
use super::linalg::{AffineParametrization, RowSpace};
use super::rat::{Rat, RatVector};
use crate::error::{Error, Result};

/// Integer cone rows for the homogenization of `P` restricted to its
/// equality-defined affine subspace. Row 0 is `s >= 0`.
struct ReducedCone {
    param: AffineParametrization,
    rows: Vec<Vec<BigInt>>,
}

fn reduce(p: &HPolytope) -> Result<ReducedCone> {
    let n = p.ambient_dim();
    let eqs: Vec<(Vec<Rat>, Rat)> = p
        .equalities()
        .iter()
        .map(|c| (c.a.0.clone(), c.b.clone()))
        .collect();
    let param = AffineParametrization::solve(&eqs, n).ok_or(Error::EmptyPolytope)?;
    let d = param.dim();

    let mut head = vec![BigInt::zero(); d + 1];
    head[0] = BigInt::one();
    let mut rows = vec![head];
    for c in p.inequalities() {
        // a.(base + N y) <= b  <=>  (b - a.base) - (a N) y >= 0
        let mut row = Vec::with_capacity(d + 1);
        row.push(&c.b - c.a.dot(&param.base));
        for dir in &param.directions {
            row.push(-c.a.dot(dir));
        }
        if row[1..].iter().all(|v| v.is_zero()) {
            if row[0].is_negative() {
                return Err(Error::EmptyPolytope);
            }
            continue;
        }
        let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let mut ints: Vec<BigInt> = row
            .iter()
            .map(|v| (v * Rat::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, v| Integer::gcd(&acc, v));
        if !g.is_one() {
            for v in ints.iter_mut() {
                *v /= &g;
            }
        }
        rows.push(ints);
    }
    Ok(ReducedCone { param, rows })
}

fn cone_vertices<T: DdInt>(cone: &ReducedCone) -> Option<Result<Vec<Vec<Rat>>>> {
    let rows: Vec<Vec<T>> = cone
        .rows
        .iter()
        .map(|r| r.iter().map(T::from_big).collect::<Option<Vec<T>>>())
        .collect::<Option<_>>()?;
    let dim = cone.param.dim() + 1;
    let gens = double_description(&rows, dim).ok()?;
    if !gens.lineality.is_empty() {
        return Some(Err(Error::UnboundedPolytope(
            "homogenized cone has a lineality space".into(),
        )));
    }
    let mut out = Vec::new();
    let mut recession = false;
    for r in &gens.rays {
        match r[0].sign() {
            Ordering::Greater => {
                let s = r[0].to_big();
                let y: Vec<Rat> = r[1..]
                    .iter()
                    .map(|v| Rat::new(v.to_big(), s.clone()))
                    .collect();
                out.push(cone.param.lift(&y));
            }
            _ => recession = true,
        }
    }
    if out.is_empty() {
        return Some(Err(Error::EmptyPolytope));
    }
    if recession {
        return Some(Err(Error::UnboundedPolytope(
            "polytope has a recession direction".into(),
        )));
    }
    Some(Ok(out))
}

/// Complete vertex set of a bounded polytope, lexicographically sorted.
pub fn vertices(p: &HPolytope) -> Result<VRep> {
    let cone = reduce(p)?;
    let verts = match cone_vertices::<i128>(&cone) {
        Some(r) => r?,
        None => cone_vertices::<BigInt>(&cone).expect("bigint arithmetic cannot overflow")?,
    };
    let mut vertices: Vec<RatVector> = verts.into_iter().map(RatVector).collect();
    vertices.sort();
    Ok(VRep {
        ambient_dim: p.ambient_dim(),
        vertices,
    })
}

/// Rank of the affine hull of a point set (`-1` is never returned; an empty
/// set is an error for the caller).
pub(crate) fn affine_rank(points: &[&RatVector]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let mut space = RowSpace::new();
    let dim = first.dim();
    for v in rest {
        let diff: Vec<Rat> = v.iter().zip(first.iter()).map(|(a, b)| a - b).collect();
        space.insert(&diff);
        if space.rank() == dim {
            break;
        }
    }
    space.rank()
}

pub fn affine_dim_of(v: &VRep) -> Result<usize> {
    if v.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let refs: Vec<&RatVector> = v.vertices.iter().collect();
    Ok(affine_rank(&refs))
}

/// Dimension of the affine hull of `P`, read off its vertices.
pub fn affine_dim(p: &HPolytope) -> Result<usize> {
    affine_dim_of(&vertices(p)?)
}

/// Number of facets of `P`, given its vertex set.
pub fn facet_count_with(p: &HPolytope, v: &VRep) -> Result<usize> {
    let dim = affine_dim_of(v)?;
    if dim == 0 {
        return Err(Error::ZeroDimensional);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for c in p.inequalities() {
        let tight: Vec<usize> = v
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, x)| c.slack(x).is_zero())
            .map(|(i, _)| i)
            .collect();
        if tight.is_empty() || tight.len() == v.len() || seen.contains(&tight) {
            continue;
        }
        let pts: Vec<&RatVector> = tight.iter().map(|&i| &v.vertices[i]).collect();
        if affine_rank(&pts) == dim - 1 {
            seen.insert(tight);
        }
    }
    Ok(seen.len())
}

pub fn facet_count(p: &HPolytope) -> Result<usize> {
    let v = vertices(p)?;
    facet_count_with(p, &v)
}

/// Whether `x` is a 0-face of `P`: the constraints tight at `x` have full rank.
pub fn is_vertex(p: &HPolytope, x: &[Rat]) -> Result<bool> {
    if !p.contains(x) {
        return Err(Error::NotInPolytope);
    }
    let n = p.ambient_dim();
    let mut space = RowSpace::new();
    for c in p.equalities() {
        space.insert(&c.a);
        if space.rank() == n {
            return Ok(true);
        }
    }
    for c in p.inequalities() {
        if c.slack(x).is_zero() {
            space.insert(&c.a);
            if space.rank() == n {
                return Ok(true);
            }
        }
    }
    Ok(space.rank() == n)
}

/// Per-vertex lcm of entry denominators, and the maximum over all vertices.
pub fn vertex_denominators(v: &VRep) -> (Vec<BigInt>, BigInt) {
    let per: Vec<BigInt> = v.vertices.iter().map(|x| x.denominator_lcm()).collect();
    let max = per.iter().max().cloned().unwrap_or_else(BigInt::one);
    (per, max)
}

/// Least common multiple of all vertex denominators: the smallest `m` with
/// `m P` integral.
pub fn denominator_lcm(v: &VRep) -> BigInt {
    v.vertices
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator_lcm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{int, rat};

    fn unit_square() -> HPolytope {
        let mut p = HPolytope::new(2);
        for i in 0..2 {
            p.add_sparse_inequality(&[(i, -1)], int(0));
            p.add_sparse_inequality(&[(i, 1)], int(1));
        }
        p
    }

    #[test]
    fn square_geometry() {
        let p = unit_square();
        let v = vertices(&p).unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(affine_dim(&p).unwrap(), 2);
        assert_eq!(facet_count(&p).unwrap(), 4);
        assert!(is_vertex(&p, &[int(1), int(0)]).unwrap());
        assert!(!is_vertex(&p, &[rat(1, 2), int(0)]).unwrap());
        assert_eq!(is_vertex(&p, &[int(2), int(0)]), Err(Error::NotInPolytope));
    }

    #[test]
    fn segment_has_two_facets_point_has_none() {
        let mut seg = HPolytope::new(2);
        seg.add_sparse_inequality(&[(0, -1)], int(0));
        seg.add_sparse_inequality(&[(1, -1)], int(0));
        seg.add_sparse_equality(&[(0, 1), (1, 1)], int(1));
        assert_eq!(facet_count(&seg).unwrap(), 2);

        let mut pt = seg.clone();
        pt.add_sparse_inequality(&[(0, 1)], int(0));
        assert_eq!(affine_dim(&pt).unwrap(), 0);
        assert_eq!(facet_count(&pt), Err(Error::ZeroDimensional));
    }

    #[test]
    fn empty_and_unbounded() {
        let mut e = HPolytope::new(1);
        e.add_sparse_inequality(&[(0, 1)], int(-1));
        e.add_sparse_inequality(&[(0, -1)], int(0));
        assert_eq!(vertices(&e), Err(Error::EmptyPolytope));

        let mut ray = HPolytope::new(1);
        ray.add_sparse_inequality(&[(0, -1)], int(0));
        assert!(matches!(vertices(&ray), Err(Error::UnboundedPolytope(_))));

        let mut inconsistent = HPolytope::new(1);
        inconsistent.add_sparse_equality(&[(0, 1)], int(0));
        inconsistent.add_sparse_equality(&[(0, 1)], int(1));
        assert_eq!(vertices(&inconsistent), Err(Error::EmptyPolytope));
    }

    #[test]
    fn triangle_with_rational_vertex() {
        // x, y >= 0, 2x + 3y <= 1
        let mut p = HPolytope::new(2);
        p.add_sparse_inequality(&[(0, -1)], int(0));
        p.add_sparse_inequality(&[(1, -1)], int(0));
        p.add_sparse_inequality(&[(0, 2), (1, 3)], int(1));
        let v = vertices(&p).unwrap();
        assert_eq!(
            v.vertices,
            vec![
                RatVector(vec![int(0), int(0)]),
                RatVector(vec![int(0), rat(1, 3)]),
                RatVector(vec![rat(1, 2), int(0)]),
            ]
        );
        assert_eq!(denominator_lcm(&v), BigInt::from(6));
        assert_eq!(vertex_denominators(&v).1, BigInt::from(3));
    }
}
