use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::rat::{int, Rat, RatVector};

/// A constraint row `a . x (<= or =) b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub a: RatVector,
    pub b: Rat,
}

impl Constraint {
    pub fn new(a: RatVector, b: Rat) -> Self {
        Constraint { a, b }
    }

    pub fn slack(&self, x: &[Rat]) -> Rat {
        &self.b - self.a.dot(x)
    }
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.a, self.b)
    }
}

/// Polytope `{x : A x <= b, C x = d}` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    ambient_dim: usize,
    inequalities: Vec<Constraint>,
    equalities: Vec<Constraint>,
}

impl HPolytope {
    pub fn new(ambient_dim: usize) -> Self {
        HPolytope {
            ambient_dim,
            inequalities: Vec::new(),
            equalities: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn inequalities(&self) -> &[Constraint] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[Constraint] {
        &self.equalities
    }

    /// Adds `a . x <= b`.
    pub fn add_inequality(&mut self, a: RatVector, b: Rat) {
        assert_eq!(a.dim(), self.ambient_dim, "constraint length");
        self.inequalities.push(Constraint::new(a, b));
    }

    /// Adds `c . x = d`.
    pub fn add_equality(&mut self, c: RatVector, d: Rat) {
        assert_eq!(c.dim(), self.ambient_dim, "constraint length");
        self.equalities.push(Constraint::new(c, d));
    }

    /// Adds `sum_i coef_i x_{idx_i} <= b` from a sparse description.
    pub fn add_sparse_inequality(&mut self, terms: &[(usize, i64)], b: Rat) {
        let a = self.sparse_row(terms);
        self.add_inequality(a, b);
    }

    pub fn add_sparse_equality(&mut self, terms: &[(usize, i64)], d: Rat) {
        let c = self.sparse_row(terms);
        self.add_equality(c, d);
    }

    fn sparse_row(&self, terms: &[(usize, i64)]) -> RatVector {
        let mut a = RatVector::zeros(self.ambient_dim);
        for &(i, c) in terms {
            a[i] += int(c);
        }
        a
    }

    /// `{t x : x in P}`.
    pub fn dilate(&self, t: u64) -> HPolytope {
        assert!(t >= 1, "dilation factor must be positive");
        let t = Rat::from_integer(t.into());
        let scale = |c: &Constraint| Constraint::new(c.a.clone(), &c.b * &t);
        HPolytope {
            ambient_dim: self.ambient_dim,
            inequalities: self.inequalities.iter().map(scale).collect(),
            equalities: self.equalities.iter().map(scale).collect(),
        }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        x.len() == self.ambient_dim
            && self.inequalities.iter().all(|c| c.slack(x) >= Rat::zero())
            && self.equalities.iter().all(|c| c.slack(x).is_zero())
    }

    /// Indices of inequalities holding with equality at `x`.
    pub fn tight_inequalities(&self, x: &[Rat]) -> Vec<usize> {
        self.inequalities
            .iter()
            .enumerate()
            .filter(|(_, c)| c.slack(x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Same polytope with the inequality list permuted by `order`.
    pub fn with_inequality_order(&self, order: &[usize]) -> HPolytope {
        assert_eq!(order.len(), self.inequalities.len());
        HPolytope {
            ambient_dim: self.ambient_dim,
            inequalities: order
                .iter()
                .map(|&i| self.inequalities[i].clone())
                .collect(),
            equalities: self.equalities.clone(),
        }
    }

    /// Inequalities as a canonical sorted set, each scaled so its first nonzero
    /// coefficient has absolute value one.
    pub fn normalized_inequalities(&self) -> Vec<Constraint> {
        let mut out: Vec<Constraint> = self
            .inequalities
            .iter()
            .map(|c| {
                let lead =
                    c.a.iter()
                        .find(|v| !v.is_zero())
                        .map(|v| {
                            if *v < Rat::zero() {
                                -v.clone()
                            } else {
                                v.clone()
                            }
                        })
                        .unwrap_or_else(Rat::one);
                let inv = Rat::one() / lead;
                Constraint::new(c.a.scale(&inv), &c.b * &inv)
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Vertex representation: the exact vertex list of a bounded polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VRep {
    pub ambient_dim: usize,
    #[serde(serialize_with = "serialize_vertices")]
    pub vertices: Vec<RatVector>,
}

fn serialize_vertices<S: serde::Serializer>(
    v: &[RatVector],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let strs: Vec<String> = x.iter().map(|r| r.to_string()).collect();
        seq.serialize_element(&strs)?;
    }
    seq.end()
}

impl VRep {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}
