//! Polytope families addressable from the command line, and the counters
//! that serve them.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::birkhoff::{
    build_restricted_birkhoff, build_transportation, count_transportation_direct,
    direct_node_estimate, BirkhoffSpec, Margins,
};
use crate::ehrhart::CountFunction;
use crate::error::{Error, Result};
use crate::exactgeom::{
    affine_dim, affine_dim_of, count_lattice_points, denominator_lcm, facet_count_with,
    lattice_points, vertices, HPolytope, Rat, RatMatrix, RatVector,
};
use crate::gtpatterns::{
    build_gt, build_m, build_m_transportation, count_m_diagonal_dp, stretched_kostka, PartitionVec,
};
use crate::posets::{chain_polytope, order_polytope, product_of_chains};
use crate::rsk::rho;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CounterKind {
    DirectDfs,
    DiagonalDp,
    Generic,
}

impl fmt::Display for CounterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CounterKind::DirectDfs => "direct DFS",
            CounterKind::DiagonalDp => "diagonal DP",
            CounterKind::Generic => "generic",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Node budget for the direct search; also the ceiling on its a-priori estimate.
    pub max_nodes: u64,
    pub max_states: Option<usize>,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_nodes: 50_000_000,
            max_states: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Selector {
    /// `B^k_{alpha,beta}`; all-ones margins give `B_n^k`.
    Birkhoff {
        margins: Margins,
        k: u64,
    },
    /// `M^k_{alpha,beta}`.
    Monotone {
        margins: Margins,
        k: u64,
    },
    GelfandTsetlin {
        lambda: PartitionVec,
        mu: Vec<u64>,
    },
    /// Order polytope of `[n] x [m]`.
    Order {
        n: usize,
        m: usize,
    },
    /// Chain polytope of `[n] x [m]`.
    Chain {
        n: usize,
        m: usize,
    },
}

impl Selector {
    pub fn birkhoff(n: usize, k: u64) -> Result<Self> {
        BirkhoffSpec::new(n, k)?;
        Ok(Selector::Birkhoff {
            margins: Margins::ones(n),
            k,
        })
    }

    pub fn monotone(n: usize, k: u64) -> Result<Self> {
        BirkhoffSpec::new(n, k)?;
        Ok(Selector::Monotone {
            margins: Margins::ones(n),
            k,
        })
    }

    pub fn label(&self) -> String {
        let margins = |m: &Margins| {
            if m.alpha().iter().chain(m.beta()).all(|&v| v == 1) {
                format!("n={}", m.n())
            } else {
                format!("alpha={:?}, beta={:?}", m.alpha(), m.beta())
            }
        };
        match self {
            Selector::Birkhoff { margins: m, k } => format!("B({}, k={k})", margins(m)),
            Selector::Monotone { margins: m, k } => format!("M({}, k={k})", margins(m)),
            Selector::GelfandTsetlin { lambda, mu } => {
                format!("GT(lambda={:?}, mu={mu:?})", lambda.parts())
            }
            Selector::Order { n, m } => format!("O([{n}]x[{m}])"),
            Selector::Chain { n, m } => format!("C([{n}]x[{m}])"),
        }
    }

    pub fn polytope(&self) -> Result<HPolytope> {
        Ok(match self {
            Selector::Birkhoff { margins, k } => build_transportation(margins, *k),
            Selector::Monotone { margins, k } => build_m_transportation(margins, *k),
            Selector::GelfandTsetlin { lambda, mu } => build_gt(lambda, mu)?,
            Selector::Order { n, m } => order_polytope(&product_of_chains(*n, *m)),
            Selector::Chain { n, m } => chain_polytope(&product_of_chains(*n, *m)),
        })
    }

    fn ones_margins(&self) -> Option<(usize, u64)> {
        match self {
            Selector::Birkhoff { margins, k } | Selector::Monotone { margins, k }
                if margins
                    .alpha()
                    .iter()
                    .chain(margins.beta())
                    .all(|&v| v == 1) =>
            {
                Some((margins.n(), *k))
            }
            _ => None,
        }
    }

    /// `dim B_n^k = dim M_n^k` is `(n-1)^2` for `k >= 2` and 0 for `k = 1`;
    /// everything else goes through vertex enumeration.
    pub fn dim(&self) -> Result<usize> {
        if let Some((n, k)) = self.ones_margins() {
            return Ok(if k == 1 { 0 } else { (n - 1) * (n - 1) });
        }
        match self {
            Selector::Order { n, m } | Selector::Chain { n, m } => Ok(n * m),
            _ => affine_dim(&self.polytope()?),
        }
    }

    pub fn denominator_lcm(&self) -> Result<u64> {
        denominator_lcm(&vertices(&self.polytope()?)?)
            .to_u64()
            .ok_or_else(|| Error::InvalidInput("denominator lcm does not fit in 64 bits".into()))
    }

    /// The counter `count` would use at dilation `t`, before any fallback.
    pub fn preferred_counter(&self, t: u64, caps: &Caps) -> CounterKind {
        match self {
            Selector::Birkhoff { margins, .. } => {
                if direct_node_estimate(margins.n(), t) <= caps.max_nodes as f64 {
                    CounterKind::DirectDfs
                } else {
                    CounterKind::DiagonalDp
                }
            }
            Selector::Monotone { .. } => CounterKind::DiagonalDp,
            _ => CounterKind::Generic,
        }
    }

    /// `#(tP ∩ Z^N)` and the counter that produced it. Birkhoff counts fall
    /// back to the monotone-matrix DP, which has the same count.
    pub fn count(&self, t: u64, caps: &Caps) -> Result<(u128, CounterKind)> {
        match self {
            Selector::Birkhoff { margins, k } => {
                if self.preferred_counter(t, caps) == CounterKind::DirectDfs {
                    match count_transportation_direct(margins, *k, t, Some(caps.max_nodes)) {
                        Ok(c) => return Ok((c, CounterKind::DirectDfs)),
                        Err(Error::BudgetExceeded(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
                let c = count_m_diagonal_dp(margins, *k, t, caps.max_states)?;
                Ok((c, CounterKind::DiagonalDp))
            }
            Selector::Monotone { margins, k } => Ok((
                count_m_diagonal_dp(margins, *k, t, caps.max_states)?,
                CounterKind::DiagonalDp,
            )),
            Selector::GelfandTsetlin { lambda, mu } => {
                Ok((stretched_kostka(lambda, mu, t)?, CounterKind::Generic))
            }
            _ if t == 0 => {
                // 0P is the origin whenever P is nonempty.
                vertices(&self.polytope()?)?;
                Ok((1, CounterKind::Generic))
            }
            _ => Ok((
                count_lattice_points(&self.polytope()?.dilate(t))?,
                CounterKind::Generic,
            )),
        }
    }

    /// Counting function of the family, labelled by the counter expected at `t_max`.
    pub fn count_function(&self, caps: Caps, t_max: u64) -> Result<CountFunction> {
        let dim = self.dim()?;
        let label = self.preferred_counter(t_max, &caps).to_string();
        let sel = self.clone();
        Ok(CountFunction::new(dim, label, move |t| {
            sel.count(t, &caps).map(|(c, _)| c)
        }))
    }
}

/// One cell of the vertex/facet grid for `B_n^k`.
#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    pub n: usize,
    pub k: u64,
    pub dim: usize,
    pub vertices: usize,
    /// `None` when the polytope is a single point.
    pub facets: Option<usize>,
}

impl Table1Row {
    pub fn facets_label(&self) -> String {
        self.facets
            .map_or("1 (point)".to_string(), |f| f.to_string())
    }
}

pub fn table1_row(n: usize, k: u64) -> Result<Table1Row> {
    let p = build_restricted_birkhoff(BirkhoffSpec::new(n, k)?);
    let v = vertices(&p)?;
    let dim = affine_dim_of(&v)?;
    let facets = if dim == 0 {
        None
    } else {
        Some(facet_count_with(&p, &v)?)
    };
    Ok(Table1Row {
        n,
        k,
        dim,
        vertices: v.len(),
        facets,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub k: u64,
    pub t: u64,
    pub source: usize,
    pub target: usize,
    /// Points of either side not matched by the image of `rho`.
    pub mismatches: usize,
    pub ok: bool,
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}, bijection {}",
            self.source,
            self.target,
            if self.ok { "OK" } else { "FAILED" }
        )
    }
}

fn scaled_points(p: &HPolytope, t: u64) -> Result<Vec<RatVector>> {
    let inv = Rat::new(1.into(), (t as i64).into());
    Ok(lattice_points(&p.dilate(t))?
        .into_iter()
        .map(|v| v.scale(&inv))
        .collect())
}

/// Applies `rho` to every `(1/t)`-lattice point of `B_n^k` and compares the
/// image with an independent enumeration of the `(1/t)`-lattice points of `M_n^k`.
pub fn verify_bijection(n: usize, k: u64, t: u64) -> Result<BijectionReport> {
    if t == 0 {
        return Err(Error::InvalidInput("t must be positive".into()));
    }
    let b = scaled_points(&build_restricted_birkhoff(BirkhoffSpec::new(n, k)?), t)?;
    let m: BTreeSet<Vec<Rat>> = scaled_points(&build_m(n, k), t)?
        .into_iter()
        .map(|v| v.0)
        .collect();
    let mut image = BTreeSet::new();
    for x in &b {
        let y = rho(&RatMatrix::from_vector(x)?)?;
        image.insert(y.entries().to_vec());
    }
    let mismatches = image.symmetric_difference(&m).count() + (b.len() - image.len());
    Ok(BijectionReport {
        n,
        k,
        t,
        source: b.len(),
        target: m.len(),
        mismatches,
        ok: mismatches == 0,
    })
}
