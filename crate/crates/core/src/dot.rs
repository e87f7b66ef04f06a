//! Graphviz DOT export. Output order is deterministic.

use std::fmt::Write as _;

use crate::chordal::WeightedCliqueGraph;
use crate::graph::{Graph, VertexOrdering};
use crate::interval::CliquePath;

fn set_label(g: &Graph, set: &[usize]) -> String {
    let names: Vec<String> = set.iter().map(|&v| g.label(v)).collect();
    format!("{{{}}}", names.join(","))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn graph_dot(g: &Graph) -> String {
    ordering_dot(g, None, None)
}

/// The graph with each vertex labelled by its position in `sigma`; `mark`
/// is drawn as a double circle.
pub fn ordering_dot(g: &Graph, sigma: Option<&VertexOrdering>, mark: Option<usize>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = match sigma {
            Some(s) => format!("{} ({})", g.label(v), s.position(v)),
            None => g.label(v),
        };
        let shape = if mark == Some(v) {
            ", shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(out, "  {v} [label=\"{}\"{shape}];", escape(&label));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Clique nodes `K1..Kl` labelled with their members; edges carry the
/// separator label and its size as weight.
pub fn clique_graph_dot(g: &Graph, cg: &WeightedCliqueGraph) -> String {
    let mut out = String::from("graph C {\n");
    for (i, k) in cg.cliques().iter().enumerate() {
        let _ = writeln!(
            out,
            "  K{} [label=\"K{}\\n{}\"];",
            i + 1,
            i + 1,
            escape(&set_label(g, k))
        );
    }
    for e in cg.edges() {
        let _ = writeln!(
            out,
            "  K{} -- K{} [label=\"{}\", weight={}];",
            e.a + 1,
            e.b + 1,
            escape(&set_label(g, &e.label)),
            e.weight()
        );
    }
    out.push_str("}\n");
    out
}

/// Cliques in path order, consecutive ones joined.
pub fn clique_path_dot(g: &Graph, cp: &CliquePath) -> String {
    let mut out = String::from("graph P {\n  rankdir=LR;\n");
    for (i, k) in cp.cliques().iter().enumerate() {
        let _ = writeln!(
            out,
            "  K{} [label=\"K{}\\n{}\"];",
            i + 1,
            i + 1,
            escape(&set_label(g, k))
        );
    }
    for (i, pair) in cp.cliques().windows(2).enumerate() {
        let shared = crate::sets::intersection(&pair[0], &pair[1]);
        let _ = writeln!(
            out,
            "  K{} -- K{} [label=\"{}\"];",
            i + 1,
            i + 2,
            escape(&set_label(g, &shared))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::build_clique_graph;

    #[test]
    fn triangle_clique_graph_has_one_node() {
        let g = Graph::complete(3);
        let dot = clique_graph_dot(&g, &build_clique_graph(&g).unwrap());
        assert_eq!(dot.matches("[label=").count(), 1);
        assert!(!dot.contains("--"));
    }

    #[test]
    fn graph_lists_edges() {
        let dot = graph_dot(&Graph::path(3));
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
    }
}
