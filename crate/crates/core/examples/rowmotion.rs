//! Piecewise-linear rowmotion on (1/2) B_n^2 inside C([n]x[n]), with
//! Stanley-Thomas words along each orbit.
//!
//! cargo run --release --example rowmotion -- 3

use birkhoff_ehrhart::cli::sample_half_birkhoff;
use birkhoff_ehrhart::posets::{orbit, product_of_chains, rowmotion_chain, stanley_thomas_word};

fn main() -> birkhoff_ehrhart::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let p = product_of_chains(n, n);
    for seed in 0..3 {
        let g = sample_half_birkhoff(n, 3, seed)?;
        let orb = orbit(&g, 4 * n, |h| rowmotion_chain(&p, h))?;
        println!("seed {seed}: orbit length {} (2n = {})", orb.len(), 2 * n);
        for h in &orb {
            let w = stanley_thomas_word(&p, h)?;
            let point: Vec<String> = h.iter().map(|v| v.to_string()).collect();
            let word: Vec<String> = w.0.iter().map(|v| v.to_string()).collect();
            println!("  [{}]  ST = ({})", point.join(" "), word.join(", "));
        }
    }
    Ok(())
}
