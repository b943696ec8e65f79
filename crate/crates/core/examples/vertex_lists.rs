//! Vertices and lattice points of B_3^2 and M_3^2: same Ehrhart function,
//! different combinatorial types.
//!
//! cargo run --example vertex_lists

use birkhoff_ehrhart::birkhoff::{build_restricted_birkhoff, BirkhoffSpec};
use birkhoff_ehrhart::exactgeom::{
    count_lattice_points, facet_count, vertices, HPolytope, RatMatrix,
};
use birkhoff_ehrhart::gtpatterns::build_m;

fn show(name: &str, p: &HPolytope) -> birkhoff_ehrhart::Result<()> {
    let v = vertices(p)?;
    println!(
        "{name}: {} vertices, {} facets, {} lattice points",
        v.len(),
        facet_count(p)?,
        count_lattice_points(p)?
    );
    for x in &v.vertices {
        let m = RatMatrix::from_vector(x)?;
        let tag = if m.is_integral() {
            ""
        } else {
            "  (non-integral)"
        };
        println!("{m:?}{tag}");
    }
    println!();
    Ok(())
}

fn main() -> birkhoff_ehrhart::Result<()> {
    show(
        "B_3^2",
        &build_restricted_birkhoff(BirkhoffSpec::new(3, 2)?),
    )?;
    show("M_3^2", &build_m(3, 2))?;
    Ok(())
}
