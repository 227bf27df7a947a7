//! Graphviz output of Hasse diagrams.

use std::fmt::Write;

use crate::order::Preorder;

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// One node per indifference class, ordered by smallest member, and one edge
/// per covering pair pointing downwards.
pub fn hasse_dot(p: &Preorder) -> String {
    let hasse = p.hasse_edges();
    let mut out = String::from("digraph hasse {\n  rankdir=TB;\n  node [shape=box];\n");
    for (i, label) in hasse.labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(label)).unwrap();
    }
    for (a, b) in &hasse.edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
