//! Specialization diagrams: all scrolls of a fixed codimension as
//! nodes (the partitions of codim + 1), hyperplane-section relations as
//! edges, with the generic section of each node distinguished.

use serde::Serialize;

use crate::scroll::{check_section_conditions, ScrollType};
use crate::series::generic_section;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpecializationEdge {
    pub from: usize,
    pub to: usize,
    pub generic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationGraph {
    pub codim: usize,
    pub nodes: Vec<ScrollType>,
    pub edges: Vec<SpecializationEdge>,
}

/// All partitions of `n` as weakly increasing scroll types, in
/// lexicographic order.
pub fn partitions(n: usize) -> Vec<ScrollType> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    partitions_rec(n, 1, &mut prefix, &mut out);
    out
}

fn partitions_rec(rest: usize, min_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<ScrollType>) {
    if rest == 0 {
        if !prefix.is_empty() {
            out.push(ScrollType::new(prefix.clone()).expect("positive increasing parts"));
        }
        return;
    }
    let mut part = min_part;
    while part <= rest {
        prefix.push(part);
        partitions_rec(rest - part, part, prefix, out);
        prefix.pop();
        part += 1;
    }
}

/// Builds the full specialization diagram of codimension `codim`:
/// nodes are the partitions of `codim + 1`; there is an edge `a -> b`
/// exactly when `S(b)` is a hyperplane section of `S(a)`, flagged as
/// generic when `b` is the generic section.
pub fn specialization_graph(codim: usize) -> SpecializationGraph {
    let nodes = partitions(codim + 1);
    let mut edges = Vec::new();
    for (from, a) in nodes.iter().enumerate() {
        if a.dim() < 2 {
            continue;
        }
        let generic = generic_section(a).expect("positive parts, d >= 2");
        for (to, b) in nodes.iter().enumerate() {
            if b.dim() + 1 != a.dim() {
                continue;
            }
            let report = check_section_conditions(a, b).expect("shapes match");
            if report.valid {
                edges.push(SpecializationEdge { from, to, generic: *b == generic });
            }
        }
    }
    SpecializationGraph { codim, nodes, edges }
}

impl SpecializationGraph {
    /// DOT rendering; generic edges dashed and tagged, byte-stable for
    /// a fixed graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph specializations {\n");
        for node in &self.nodes {
            out.push_str(&format!("  \"{}\";\n", node.exponent_label()));
        }
        for edge in &self.edges {
            let from = self.nodes[edge.from].exponent_label();
            let to = self.nodes[edge.to].exponent_label();
            if edge.generic {
                out.push_str(&format!("  \"{from}\" -> \"{to}\" [style=dashed, generic=true];\n"));
            } else {
                out.push_str(&format!("  \"{from}\" -> \"{to}\" [style=solid];\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "codim": self.codim,
            "nodes": self.nodes,
            "edges": self.edges,
        })
    }

    /// Edge set as `(from label, to label, generic)` triples, mostly
    /// for tests and text output.
    pub fn labeled_edges(&self) -> Vec<(String, String, bool)> {
        self.edges
            .iter()
            .map(|e| {
                (
                    self.nodes[e.from].exponent_label(),
                    self.nodes[e.to].exponent_label(),
                    e.generic,
                )
            })
            .collect()
    }
}
