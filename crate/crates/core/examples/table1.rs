//! Facet and vertex counts of B_n^k for all k <= n <= N (default 4).
//!
//! cargo run --release --example table1 -- 5

use birkhoff_ehrhart::cli::table1_row;

fn main() -> birkhoff_ehrhart::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    println!(
        "{:>2} {:>2} {:>4} {:>10} {:>9}",
        "n", "k", "dim", "facets", "vertices"
    );
    for n in 1..=max_n {
        for k in 1..=n as u64 {
            let r = table1_row(n, k)?;
            println!(
                "{:>2} {:>2} {:>4} {:>10} {:>9}",
                n,
                k,
                r.dim,
                r.facets_label(),
                r.vertices
            );
        }
    }
    Ok(())
}
