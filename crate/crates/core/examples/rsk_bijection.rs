//! RSK on a nonnegative matrix, the glued monotone matrix, the
//! piecewise-linear extension to rationals, and the lattice bijection
//! between B_n^k and M_n^k.
//!
//! cargo run --release --example rsk_bijection

use birkhoff_ehrhart::birkhoff::max_chain_sum;
use birkhoff_ehrhart::cli::verify_bijection;
use birkhoff_ehrhart::exactgeom::{rat, RatMatrix};
use birkhoff_ehrhart::rsk::{glue, rho, rho_inverse, rsk_forward, tableau_to_gt};

fn main() -> birkhoff_ehrhart::Result<()> {
    let x = RatMatrix::from_int_rows(&[vec![1, 0, 2], vec![0, 2, 1], vec![1, 1, 0]]);
    let pq = rsk_forward(&x)?;
    println!("X = {x:?}");
    println!("P = {:?}", pq.p);
    println!("Q = {:?}", pq.q);
    println!("GT(P) = {:?}", tableau_to_gt(&pq.p, 3));
    let y = glue(&pq, 3)?;
    println!("glued Y = {y:?}");
    println!(
        "y_nn = {} = longest chain sum {}",
        y[(2, 2)],
        max_chain_sum(&x)
    );

    let half = RatMatrix::filled(2, rat(1, 2));
    println!("\nrho({half:?}) = {:?}", rho(&half)?);

    let r = RatMatrix::from_rows(vec![
        vec![rat(1, 3), rat(2, 5), rat(0, 1)],
        vec![rat(7, 4), rat(0, 1), rat(1, 6)],
        vec![rat(0, 1), rat(1, 2), rat(5, 3)],
    ])?;
    let ry = rho(&r)?;
    println!("rho({r:?}) = {ry:?}");
    println!("round trip exact: {}", rho_inverse(&ry)? == r);

    println!();
    for (n, k, t) in [(3, 2, 1), (3, 2, 2), (4, 3, 2), (4, 2, 3)] {
        let rep = verify_bijection(n, k, t)?;
        println!("n={n} k={k} t={t}: {rep}");
    }
    Ok(())
}
