//! Graph exports: DOT text and a JSON document that can be read back.

use ideal_graph_core::graph::{GraphInvariants, IntersectionGraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphExport {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<GraphInvariants>,
}

impl GraphExport {
    pub fn new(name: &str, g: &IntersectionGraph, invariants: Option<GraphInvariants>) -> Self {
        GraphExport { name: name.into(), vertices: g.labels().to_vec(), edges: g.edges(), invariants }
    }

    pub fn to_graph(&self) -> IntersectionGraph {
        IntersectionGraph::from_edges(self.vertices.len(), &self.edges).with_labels(self.vertices.clone())
    }
}

pub fn to_json(export: &GraphExport) -> String {
    let mut s = serde_json::to_string_pretty(export).expect("graph export serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<GraphExport> {
    serde_json::from_str(text)
}

pub fn to_dot(name: &str, g: &IntersectionGraph) -> String {
    g.to_dot(name)
}
