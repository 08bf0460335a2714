//! List coloring along a supplied path decomposition.

use serde::{Deserialize, Serialize};

use super::graph::{pd_width, validate_pd, Bags, Graph};

/// Proper coloring where vertex `v` must take a color from `lists[v]`;
/// `precolored` pins vertices outright. The parameter is the width of the
/// supplied decomposition, which must match its actual width.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ListColoringInstance {
    pub parameter: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub bags: Bags,
    /// Palette size; colors are `0..colors`.
    pub colors: usize,
    pub lists: Vec<Vec<usize>>,
    pub precolored: Vec<(usize, usize)>,
}

impl ListColoringInstance {
    pub fn graph(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone() }
    }

    /// Per-vertex admissible colors after intersecting lists with pins.
    pub fn effective_lists(&self) -> Vec<Vec<usize>> {
        let mut out = self.lists.clone();
        for &(v, c) in &self.precolored {
            if v < out.len() {
                out[v] = if out[v].contains(&c) { vec![c] } else { Vec::new() };
            }
        }
        out
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        let g = self.graph();
        g.validate_into(errs);
        validate_pd(&g, &self.bags, errs);
        if self.parameter != pd_width(&self.bags) {
            errs.push(format!(
                "parameter {} must equal decomposition width {}",
                self.parameter,
                pd_width(&self.bags)
            ));
        }
        if self.lists.len() != self.n {
            errs.push(format!("{} lists for n={}", self.lists.len(), self.n));
        }
        for (v, list) in self.lists.iter().enumerate() {
            let mut prev: Option<usize> = None;
            for &c in list {
                if c >= self.colors {
                    errs.push(format!("vertex {v} lists color {c} out of range"));
                }
                if let Some(p) = prev {
                    if p >= c {
                        errs.push(format!("list of vertex {v} not strictly sorted"));
                    }
                }
                prev = Some(c);
            }
        }
        let mut prev: Option<usize> = None;
        for &(v, c) in &self.precolored {
            if v >= self.n {
                errs.push(format!("precolored vertex {v} out of range"));
            }
            if c >= self.colors {
                errs.push(format!("precolored vertex {v} uses color {c} out of range"));
            } else if v < self.lists.len() && !self.lists[v].contains(&c) {
                errs.push(format!("vertex {v} precolored with {c} not on its list"));
            }
            if let Some(p) = prev {
                if p >= v {
                    errs.push("precolored pairs must be strictly sorted by vertex".into());
                }
            }
            prev = Some(v);
        }
    }
}
