//! Graph bandwidth: lay the vertices out on a line so edges stay short.

use serde::{Deserialize, Serialize};

use super::graph::Graph;

/// Is there a bijection `f : V -> 0..n` with `|f(u) - f(v)| <= parameter`
/// for every edge?
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct BandwidthInstance {
    pub parameter: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BandwidthInstance {
    pub fn graph(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone() }
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        self.graph().validate_into(errs);
    }
}
