//! Exact rational geometry: linear algebra, H- and V-representations, vertex
//! enumeration by double description, and lattice-point search.

mod dd;
pub mod hpoly;
pub mod lattice;
pub mod linalg;
pub mod rat;
pub mod vertices;

pub use hpoly::{Constraint, HPolytope, VRep};
pub use lattice::{
    count_interior_lattice_points, count_lattice_points, count_lattice_points_with, lattice_points,
    lattice_points_with, LatticeOptions,
};
pub use rat::{int, lcm_of_denominators, parse_rat, rat, Rat, RatMatrix, RatVector};
pub use vertices::{
    affine_dim, affine_dim_of, denominator_lcm, facet_count, facet_count_with, is_vertex,
    vertex_denominators, vertices,
};

/// `{t x : x in P}`.
pub fn dilate(p: &HPolytope, t: u64) -> HPolytope {
    p.dilate(t)
}
