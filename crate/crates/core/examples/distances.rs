//! Top-difference and Kemeny-Snell-Bogart distances between two rankings.
//!
//!     cargo run --example distances

use bca::gallery::{ranked_five, ranked_five_bottom_swapped, ranked_five_top_swapped};
use bca::metrics::{alpha_sets, delta_menu, ksb_distance, top_difference_fast};
use bca::Result;

fn main() -> Result<()> {
    let base = ranked_five();
    for (name, other) in [
        ("top pair swapped", ranked_five_top_swapped()),
        ("bottom pair swapped", ranked_five_bottom_swapped()),
    ] {
        let d = top_difference_fast(&base, &other)?;
        let ksb = ksb_distance(&base, &other)?;
        println!("{name}: D = {d}, KSB = {ksb}");
    }

    // Per-menu view: which menus see different maxima.
    let other = ranked_five_top_swapped();
    let g = base.ground();
    let menu = g.mask_of(&["x1", "x2", "x5"])?;
    let delta = delta_menu(&base, &other, menu)?;
    println!("menu {} differs by {}", g.format_subset(menu), delta.delta);

    let x1 = g.index_of("x1")?;
    println!(
        "element x1 contributes {}",
        alpha_sets(&base, &other, x1)?.theta()
    );
    Ok(())
}
