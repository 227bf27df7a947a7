//! Worst-case best-approximation distance over every preorder on n elements.
//!
//!     cargo run --release --example covering_radius

use bca::solver::covering_radius;
use bca::{GroundSet, Limits, Result};

fn main() -> Result<()> {
    for n in 1..=4 {
        let r = covering_radius(GroundSet::indexed("x", n)?, &Limits::default())?;
        let edges = r.witness.hasse_edges().edges.len();
        println!(
            "n = {n}: radius {} (witness has {edges} covering edges)",
            r.radius
        );
    }
    Ok(())
}
