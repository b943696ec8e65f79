//! Order and chain polytopes of [2]x[2], the transfer map between them, and
//! why it does not carry B_2^2 onto M_2^2.
//!
//! cargo run --example transfer_map

use birkhoff_ehrhart::exactgeom::{rat, vertices, Rat, RatMatrix};
use birkhoff_ehrhart::posets::{
    chain_polytope, order_polytope, product_of_chains, transfer, transfer_inverse_dilated,
};
use birkhoff_ehrhart::rsk::rho;

fn fmt(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn main() -> birkhoff_ehrhart::Result<()> {
    let p = product_of_chains(2, 2);
    let o = vertices(&order_polytope(&p))?;
    let c = vertices(&chain_polytope(&p))?;
    println!("O([2]x[2]) vertices (order filters):");
    for f in &o.vertices {
        println!("  {f} -> {}", fmt(&transfer(&p, f)?));
    }
    println!("C([2]x[2]) vertices (antichains): {}", c.len());

    let a = rat(1, 4);
    let b = Rat::from_integer(1.into()) - &a;
    let x = vec![a.clone(), b.clone(), b, a];
    let y = transfer_inverse_dilated(&p, &x, 2)?;
    println!("\nX = [[1/4, 3/4], [3/4, 1/4]] in B_2^2");
    println!(
        "transfer inverse: {}, main diagonal sum {}",
        fmt(&y),
        &y[0] + &y[3]
    );
    println!("rho:              {:?}", rho(&RatMatrix::from_vector(&x)?)?);
    Ok(())
}
