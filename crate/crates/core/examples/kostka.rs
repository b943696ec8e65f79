//! Kostka numbers as lattice points of Gelfand-Tsetlin polytopes, and their
//! stretched versions.
//!
//! cargo run --release --example kostka

use birkhoff_ehrhart::gtpatterns::{kostka, stretched_kostka, PartitionVec};

fn main() -> birkhoff_ehrhart::Result<()> {
    let cases: [(&[u64], &[u64]); 4] = [
        (&[2, 1, 0], &[1, 1, 1]),
        (&[3, 2, 1, 0], &[2, 2, 1, 1]),
        (&[4, 2, 0, 0], &[2, 2, 1, 1]),
        (&[2, 2, 2, 0, 0, 0], &[1, 1, 1, 1, 1, 1]),
    ];
    for (lambda, mu) in cases {
        let lam = PartitionVec::new(lambda.to_vec())?;
        let stretched: Vec<String> = (1..=4)
            .map(|t| stretched_kostka(&lam, mu, t).map(|k| k.to_string()))
            .collect::<Result<_, _>>()?;
        println!(
            "K({lambda:?}, {mu:?}) = {}; stretched t=1..4: {}",
            kostka(&lam, mu)?,
            stretched.join(", ")
        );
    }
    Ok(())
}
