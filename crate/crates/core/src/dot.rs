//! DOT (Graphviz) export. Purely presentational: when a labeling is
//! supplied the odd label becomes the node text and the structural role
//! name becomes a tooltip.

use std::fmt::Write;

use crate::graph::{Graph, Labeling};

/// Renders `g` as an undirected DOT graph. Vertices keep their numeric
/// identifiers as node ids; `ell`, when given, supplies the displayed text.
pub fn to_dot(g: &Graph, ell: Option<&Labeling>) -> String {
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in 1..=g.order() {
        let mut attrs = Vec::new();
        if let Some(ell) = ell {
            if let Some(l) = ell.get(v) {
                attrs.push(format!("label=\"{l}\""));
            }
        }
        if let Some(name) = g.name(v) {
            attrs.push(format!("tooltip=\"{}\"", name.replace('"', "\\\"")));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
