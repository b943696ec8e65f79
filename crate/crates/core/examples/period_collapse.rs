//! M_3^3 has half-integral vertices, yet its Ehrhart quasi-polynomial has
//! period 1. A genuinely periodic example for contrast.
//!
//! cargo run --release --example period_collapse

use birkhoff_ehrhart::cli::{Caps, Selector};
use birkhoff_ehrhart::ehrhart::{quasi_polynomial, CountFunction};

fn main() -> birkhoff_ehrhart::Result<()> {
    for sel in [
        Selector::monotone(3, 3)?,
        Selector::birkhoff(3, 2)?,
        Selector::monotone(4, 2)?,
    ] {
        let lcm = sel.denominator_lcm()?;
        let q = quasi_polynomial(&sel.count_function(Caps::default(), 20)?, lcm)?;
        println!(
            "{}: vertex denominators divide {lcm}, period {}, collapse {}",
            sel.label(),
            q.period,
            q.collapsed()
        );
        println!("  L(t) = {}", q.constituents[0]);
    }

    // The segment [0, 1/2] has floor(t/2) + 1 lattice points.
    let half = CountFunction::new(1, "segment", |t| Ok(t as u128 / 2 + 1));
    let q = quasi_polynomial(&half, 2)?;
    println!("[0, 1/2]: period {}, rejected {:?}", q.period, q.rejected);
    for (r, p) in q.constituents.iter().enumerate() {
        println!("  t = {r} mod 2: {p}");
    }
    Ok(())
}
