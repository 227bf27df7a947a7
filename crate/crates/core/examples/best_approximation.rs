//! Best complete approximations of a preorder read from a document.
//!
//!     cargo run --example best_approximation -- crates/core/fixtures/star_beside_isolated_2.json

use bca::solver::{bca_bruteforce, bca_duality};
use bca::{Limits, RelationDocument};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/fixtures/isolated_beside_chain.json"
        )
        .into()
    });
    let p = RelationDocument::from_json(&std::fs::read_to_string(path)?)?.to_preorder()?;
    let limits = Limits::default();

    let dual = bca_duality(&p, &limits)?;
    println!("distance {}", dual.distance);
    for (t, index) in dual.bca_set.iter().zip(&dual.indices) {
        println!("  {t}  index {index}");
    }

    let brute = bca_bruteforce(&p, &limits)?;
    assert_eq!(brute.bca_set, dual.bca_set);
    println!("brute force agrees");
    Ok(())
}
