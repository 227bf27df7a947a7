//! Scores, the index and its normalized layer form.
//!
//!     cargo run --example index_identities

use bca::gallery::rooted_tree_seven;
use bca::index::{f_layers, index_general, index_total, psi, score};
use bca::{Limits, Result};

fn main() -> Result<()> {
    let p = rooted_tree_seven();
    let best = index_general(&p, &Limits::default())?;
    println!("largest index over completions: {best}");

    let t = bca::canonical_completion(&p);
    let q = t.to_preorder();
    for x in 0..p.len() {
        println!("  score({}) = {}", p.ground().label(x), score(&q, x));
    }
    println!("canonical {t}: index {}", index_total(&t));
    println!(
        "normalized {} = f{:?} = {}",
        psi(&t),
        t.block_sizes(),
        f_layers(&t.block_sizes())?
    );
    Ok(())
}
