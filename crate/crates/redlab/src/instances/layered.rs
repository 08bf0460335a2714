//! Layered vertex-colored graphs for the chained clique / independent set
//! problems. Edges may only connect vertices whose layers differ by at most
//! one.

use serde::{Deserialize, Serialize};

use super::graph::Graph;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LayeredColoredGraph {
    /// Number of colors k.
    pub parameter: usize,
    pub layers: usize,
    pub n: usize,
    /// Layer per vertex, `0..layers`.
    pub layer_of: Vec<usize>,
    /// Color per vertex, `0..parameter`.
    pub color_of: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl LayeredColoredGraph {
    pub fn graph(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone() }
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.parameter == 0 {
            errs.push("need at least one color".into());
        }
        if self.layers == 0 {
            errs.push("need at least one layer".into());
        }
        if self.layer_of.len() != self.n {
            errs.push(format!(
                "layer_of has {} entries for n={}",
                self.layer_of.len(),
                self.n
            ));
        }
        if self.color_of.len() != self.n {
            errs.push(format!(
                "color_of has {} entries for n={}",
                self.color_of.len(),
                self.n
            ));
        }
        for (v, &l) in self.layer_of.iter().enumerate() {
            if l >= self.layers {
                errs.push(format!("vertex {v} layer {l} out of range"));
            }
        }
        for (v, &c) in self.color_of.iter().enumerate() {
            if c >= self.parameter {
                errs.push(format!("vertex {v} color {c} out of range"));
            }
        }
        self.graph().validate_into(errs);
        for &(a, b) in &self.edges {
            if a < self.layer_of.len() && b < self.layer_of.len() {
                let (la, lb) = (self.layer_of[a], self.layer_of[b]);
                if la.abs_diff(lb) > 1 {
                    errs.push(format!(
                        "edge ({a},{b}) spans layers {la} and {lb}"
                    ));
                }
            }
        }
    }

    /// Vertices of each (layer, color) class, ascending.
    pub fn classes(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = vec![vec![Vec::new(); self.parameter]; self.layers];
        for v in 0..self.n {
            let (l, c) = (self.layer_of[v], self.color_of[v]);
            if l < self.layers && c < self.parameter {
                out[l][c].push(v);
            }
        }
        out
    }
}
