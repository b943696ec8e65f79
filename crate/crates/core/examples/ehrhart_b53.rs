//! The degree-16 Ehrhart polynomial of B_5^3 from the diagonal transfer-matrix
//! counter. Fits on t = 0..16 and checks t = 17..19. About 20 s in release mode.
//!
//! cargo run --release --example ehrhart_b53

use std::time::Instant;

use birkhoff_ehrhart::cli::{Caps, Selector};
use birkhoff_ehrhart::ehrhart::fit_and_verify;

fn main() -> birkhoff_ehrhart::Result<()> {
    let sel = Selector::monotone(5, 3)?;
    let f = sel.count_function(Caps::default(), 19)?;
    let start = Instant::now();
    let fit_ts: Vec<u64> = (0..=16).collect();
    let fit = fit_and_verify(&f, &fit_ts, &[17, 18, 19])?;
    for (t, c) in fit.fitted.iter().chain(&fit.verified) {
        println!("t = {t:>2}: {c}");
    }
    println!();
    for (i, c) in fit.polynomial.coeffs().iter().enumerate().rev() {
        println!("t^{i:<2} {c}");
    }
    println!("\ncounter: {}, {:.1?}", f.label(), start.elapsed());
    Ok(())
}
