//! Graphviz exports.

use std::fmt::Write;

use pct_core::allowable::{EdgeKind, PermGraph};
use pct_core::hecke::OrbitGraph;
use pct_core::tree::LabeledBinaryTree;

fn tableau_label(t: &pct_core::Tableau) -> String {
    t.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\\n")
}

/// Tableaux as boxes, one edge `i` per move by `pi_i`.
pub fn orbit_dot(g: &OrbitGraph) -> String {
    let mut s = String::from("digraph orbit {\n  node [shape=box, fontname=monospace];\n");
    for (k, t) in g.nodes.iter().enumerate() {
        writeln!(s, "  t{k} [label=\"{}\"];", tableau_label(t)).unwrap();
    }
    for (a, b, i) in &g.edges {
        writeln!(s, "  t{a} -> t{b} [label=\"{i}\"];").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Descent edges (left or right) are drawn bold.
pub fn tree_dot(t: &LabeledBinaryTree) -> String {
    let mut s = String::from("digraph tree {\n  node [shape=circle];\n");
    for v in t.preorder() {
        writeln!(s, "  n{v} [label=\"{v}\"];").unwrap();
    }
    for v in t.preorder() {
        for (child, side) in [(t.left(v), "L"), (t.right(v), "R")] {
            if let Some(c) = child {
                let style = if c < v {
                    ", style=bold, penwidth=3"
                } else {
                    ""
                };
                writeln!(s, "  n{v} -> n{c} [label=\"{side}\"{style}];").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}

/// Nodes pinned to their grid cells; edge classes colored.
pub fn perm_graph_dot(g: &PermGraph) -> String {
    let mut s = String::from("digraph G {\n  node [shape=circle, label=\"\"];\n");
    for j in 1..=g.columns() {
        for i in 1..=g.rows() {
            writeln!(
                s,
                "  c{i}_{j} [pos=\"{j},{}!\", xlabel=\"({i},{j})\"];",
                g.rows() + 1 - i
            )
            .unwrap();
        }
    }
    for &((r1, c1), (r2, c2), kind) in g.edges() {
        let color = match kind {
            EdgeKind::Horizontal => "black",
            EdgeKind::Vertical => "blue",
            EdgeKind::Diagonal => "red",
        };
        writeln!(s, "  c{r1}_{c1} -> c{r2}_{c2} [color={color}];").unwrap();
    }
    s.push_str("}\n");
    s
}
