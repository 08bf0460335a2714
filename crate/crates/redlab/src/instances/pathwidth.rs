//! Vertex-subset problems (dominating set, independent set, clique) on graphs
//! whose path decompositions are narrow relative to log of the vertex count.

use serde::{Deserialize, Serialize};

use super::graph::{validate_pd, Bags, Graph};

/// Which subset predicate a [`PathwidthVertexInstance`] asks about; the
/// surrounding instance kind fixes it, this enum is shared by solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexProblem {
    /// Dominating set of size at most `solution_size`.
    DominatingSet,
    /// Independent set of size at least `solution_size`.
    IndependentSet,
    /// Clique of size at least `solution_size`.
    Clique,
}

/// Graph plus decomposition, measured by how many `log2 n`-sized slices the
/// largest bag occupies: `parameter = ceil(max bag size / max(1, floor(log2
/// n)))`. The target `solution_size` is a plain number, not the parameter.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PathwidthVertexInstance {
    pub parameter: usize,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub bags: Bags,
    pub solution_size: usize,
}

/// `ceil(max bag size / max(1, floor(log2 n)))`, the declared parameter.
pub fn log_width_ratio(n: usize, bags: &Bags) -> usize {
    let maxbag = bags.iter().map(|b| b.len()).max().unwrap_or(0);
    let log = if n <= 1 { 1 } else { (usize::BITS - 1 - n.leading_zeros()) as usize };
    maxbag.div_ceil(log.max(1))
}

impl PathwidthVertexInstance {
    pub fn graph(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone() }
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        let g = self.graph();
        g.validate_into(errs);
        validate_pd(&g, &self.bags, errs);
        let ratio = log_width_ratio(self.n, &self.bags);
        if self.parameter != ratio {
            errs.push(format!(
                "parameter {} must equal the bag-to-log ratio {ratio}",
                self.parameter
            ));
        }
    }
}

/// Predicate checks shared by solvers and certificate verification. The set
/// must be sorted and within range before calling.
pub fn is_dominating(g: &Graph, adj: &[Vec<usize>], set: &[usize]) -> bool {
    (0..g.n).all(|v| {
        set.binary_search(&v).is_ok()
            || adj[v].iter().any(|w| set.binary_search(w).is_ok())
    })
}

pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}
