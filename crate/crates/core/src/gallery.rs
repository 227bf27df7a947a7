//! Small named preorders with hand-checked distances, indices and best
//! approximations. They double as regression fixtures and as demo inputs.

use crate::error::Result;
use crate::order::{GroundSet, Preorder};

const FIVE: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];

fn ranking(order: [&str; 5]) -> Preorder {
    let g = GroundSet::new(FIVE).expect("fixed labels");
    let pairs: Vec<_> = order.windows(2).map(|w| (w[0], w[1])).collect();
    Preorder::generated_by_labels(g, &pairs).expect("chain")
}

/// The linear order `x1 ≻ x2 ≻ x3 ≻ x4 ≻ x5`.
pub fn ranked_five() -> Preorder {
    ranking(FIVE)
}

/// [`ranked_five`] with the top two swapped.
pub fn ranked_five_top_swapped() -> Preorder {
    ranking(["x2", "x1", "x3", "x4", "x5"])
}

/// [`ranked_five`] with the bottom two swapped.
pub fn ranked_five_bottom_swapped() -> Preorder {
    ranking(["x1", "x2", "x3", "x5", "x4"])
}

/// `a ≻ a1 ≻ a2` on `{x, a, a1, a2}`, `x` incomparable to the rest.
pub fn isolated_beside_chain() -> Preorder {
    let g = GroundSet::new(["x", "a", "a1", "a2"]).expect("fixed labels");
    Preorder::generated_by_labels(g, &[("a", "a1"), ("a1", "a2")]).expect("chain")
}

/// `a ≻ a1 ≻ a2` and `a ≻ x` on `{x, a, a1, a2}`.
pub fn chain_with_side_branch() -> Preorder {
    let g = GroundSet::new(["x", "a", "a1", "a2"]).expect("fixed labels");
    Preorder::generated_by_labels(g, &[("a", "a1"), ("a1", "a2"), ("a", "x")]).expect("tree")
}

/// `x ≻ ai ≻ y` for `i = 1..=k`, the `ai` pairwise incomparable.
pub fn diamond_fan(k: usize) -> Result<Preorder> {
    let labels = std::iter::once("x".to_string())
        .chain((1..=k).map(|i| format!("a{i}")))
        .chain(std::iter::once("y".to_string()));
    let g = GroundSet::new(labels)?;
    let edges = (1..=k).flat_map(|i| [(0, i), (i, k + 1)]);
    Preorder::generated_by(g, edges)
}

/// `a ≻ ai` for `i = 1..=k` on `{x, a, a1, …, ak}`, `x` incomparable to the rest.
pub fn star_beside_isolated(k: usize) -> Result<Preorder> {
    let labels = ["x".to_string(), "a".to_string()]
        .into_iter()
        .chain((1..=k).map(|i| format!("a{i}")));
    let g = GroundSet::new(labels)?;
    Preorder::generated_by(g, (2..k + 2).map(|i| (1, i)))
}

/// `alpha ≻ a ≻ {b, c, d}` and `alpha ≻ x ≻ y`.
pub fn rooted_tree_seven() -> Preorder {
    let g = GroundSet::new(["alpha", "x", "y", "a", "b", "c", "d"]).expect("fixed labels");
    Preorder::generated_by_labels(
        g,
        &[
            ("alpha", "a"),
            ("alpha", "x"),
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("x", "y"),
        ],
    )
    .expect("tree")
}

/// `a1 ≻ a2 ∼ a3 ≻ a4 ∼ … ∼ a9` with `x` incomparable to the rest.
pub fn tie_ladder() -> Preorder {
    let labels = std::iter::once("x".to_string()).chain((1..=9).map(|i| format!("a{i}")));
    let g = GroundSet::new(labels).expect("fixed labels");
    let mut pairs = vec![(1, 2), (2, 3), (3, 2), (3, 4)];
    pairs.extend((4..9).flat_map(|i| [(i, i + 1), (i + 1, i)]));
    Preorder::generated_by(g, pairs).expect("ladder")
}
