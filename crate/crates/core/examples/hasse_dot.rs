//! Graphviz rendering of a Hasse diagram.
//!
//!     cargo run --example hasse_dot | dot -Tsvg > tree.svg

use bca::dot::hasse_dot;
use bca::gallery::rooted_tree_seven;

fn main() {
    print!("{}", hasse_dot(&rooted_tree_seven()));
}
