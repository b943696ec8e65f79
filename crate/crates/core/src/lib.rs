//! Exact geometry and combinatorics of restricted Birkhoff polytopes: vertex
//! and lattice-point enumeration, Ehrhart fitting, RSK and Gelfand-Tsetlin
//! patterns, and order/chain polytopes of posets.

pub mod birkhoff;
pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod exactgeom;
pub mod gtpatterns;
pub mod posets;
pub mod rsk;

pub use error::{Error, Result};
