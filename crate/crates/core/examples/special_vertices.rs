//! Non-integral vertices: the circulant-like vertex of B_{2n+1}^{2n} and the
//! largest vertex denominators of B_n^k.
//!
//! cargo run --release --example special_vertices

use birkhoff_ehrhart::birkhoff::{build_restricted_birkhoff, remark62_matrix, BirkhoffSpec};
use birkhoff_ehrhart::exactgeom::{is_vertex, vertex_denominators, vertices};

fn main() -> birkhoff_ehrhart::Result<()> {
    for n in 2..=3 {
        let x = remark62_matrix(n);
        let p = build_restricted_birkhoff(BirkhoffSpec::new(2 * n + 1, 2 * n as u64)?);
        println!("n = {n}: {x:?}");
        println!(
            "  vertex of B_{}^{}: {}",
            2 * n + 1,
            2 * n,
            is_vertex(&p, x.entries())?
        );
    }
    for n in 2..=4usize {
        for k in 2..=n as u64 {
            let v = vertices(&build_restricted_birkhoff(BirkhoffSpec::new(n, k)?))?;
            let (dens, lcm) = vertex_denominators(&v);
            println!(
                "B_{n}^{k}: largest vertex denominator {}, lcm {lcm}",
                dens.iter().max().unwrap()
            );
        }
    }
    Ok(())
}
