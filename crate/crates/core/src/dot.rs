//! DOT emission for digraphs and undirected graphs.
//!
//! Bipartite tournaments pin each part to its own rank so the rendering
//! mirrors the two-column layout the instances are usually drawn in.

use std::fmt::Write as _;

use crate::digraph::{BipartiteTournament, Digraph};
use crate::graph::Graph;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn digraph_to_dot(d: &Digraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in 0..d.n() {
        writeln!(out, "  {};", quote(d.label(v))).unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {} -> {};", quote(d.label(u)), quote(d.label(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn bipartite_to_dot(bt: &BipartiteTournament, name: &str) -> String {
    let d = bt.digraph();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    for part in [bt.part1(), bt.part2()] {
        let members: Vec<String> = part.iter().map(|&v| format!("{};", quote(d.label(v)))).collect();
        writeln!(out, "  {{ rank=same; {} }}", members.join(" ")).unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {} -> {};", quote(d.label(u)), quote(d.label(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &Graph, labels: &[String], name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    for label in labels.iter().take(g.n()) {
        writeln!(out, "  {};", quote(label)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(&labels[u]), quote(&labels[v])).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::m_step_competition_graph;
    use crate::fixtures;

    #[test]
    fn bipartite_dot_pins_both_ranks() {
        let bt = fixtures::fig2_d();
        let dot = bipartite_to_dot(&bt, "fig2_D");
        assert_eq!(dot.matches("rank=same").count(), 2);
        assert!(dot.contains("\"a\" -> \"d\";"));
    }

    #[test]
    fn undirected_dot_lists_every_vertex_and_edge() {
        let bt = fixtures::fig2_d();
        let g = m_step_competition_graph(bt.digraph(), 3);
        let dot = graph_to_dot(&g, bt.digraph().labels(), "C3");
        assert_eq!(dot.matches(" -- ").count(), 5);
        for l in bt.digraph().labels() {
            assert!(dot.contains(&format!("\"{l}\"")));
        }
    }

    #[test]
    fn edgeless_graph_emits_valid_dot_without_edges() {
        let g = Graph::new(2);
        let labels = vec!["u".to_string(), "w".to_string()];
        let dot = graph_to_dot(&g, &labels, "empty");
        assert!(!dot.contains("--"));
        assert!(dot.starts_with("graph \"empty\" {"));
        assert!(dot.ends_with("}\n"));
    }
}
