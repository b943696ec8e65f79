//! Ehrhart polynomial of B_3^2, its binomial form and reciprocity.
//!
//! cargo run --release --example ehrhart_b32

use birkhoff_ehrhart::birkhoff::{
    build_restricted_birkhoff, count_lattice_points_direct, BirkhoffSpec,
};
use birkhoff_ehrhart::ehrhart::{ehrhart_polynomial, reciprocity_value, CountFunction};
use birkhoff_ehrhart::exactgeom::{count_interior_lattice_points, int};

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn main() -> birkhoff_ehrhart::Result<()> {
    let spec = BirkhoffSpec::new(3, 2)?;
    let f = CountFunction::new(4, "direct DFS", move |t| {
        count_lattice_points_direct(spec, t, None)
    });
    let fit = ehrhart_polynomial(&f, 3)?;
    println!("L(B_3^2; t) = {}", fit.polynomial);
    println!(
        "coefficients (low to high): {}",
        fit.polynomial.coeff_strings().join(", ")
    );
    println!("fitted on {:?}", fit.fitted);
    println!("verified on {:?}", fit.verified);

    for t in 0..8 {
        let closed = 2 * binom(t + 3, 4) + binom(t + 2, 2);
        assert_eq!(fit.polynomial.eval_int(t), int(closed));
    }
    println!("equals 2 C(t+3, 4) + C(t+2, 2) for t = 0..7");

    let p = build_restricted_birkhoff(spec);
    for t in 1..=3u64 {
        let interior = count_interior_lattice_points(&p.dilate(t))?;
        println!(
            "t = {t}: L(-t) = {}, interior points of tP = {interior}",
            fit.polynomial.eval_int(-(t as i64))
        );
    }
    println!("(-1)^d L(-1) = {}", reciprocity_value(&fit.polynomial, 4));
    Ok(())
}
