//! Plain graphs and path decompositions, shared by several instance kinds.

use serde::{Deserialize, Serialize};

/// Simple undirected graph on vertices `0..n` with a canonical edge list:
/// every edge is stored as `(a, b)` with `a < b`, sorted ascending, no
/// duplicates. Validators treat any departure from that form as an error so
/// that serialized instances are byte-stable.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        let mut prev: Option<(usize, usize)> = None;
        for &(a, b) in &self.edges {
            if a == b {
                errs.push(format!("self-loop at {a}"));
            }
            if a > b {
                errs.push(format!("edge ({a},{b}) not stored as (min,max)"));
            }
            if a >= self.n || b >= self.n {
                errs.push(format!("edge ({a},{b}) out of range for n={}", self.n));
            }
            if let Some(p) = prev {
                if p >= (a, b) {
                    errs.push(format!("edge list not strictly sorted at ({a},{b})"));
                }
            }
            prev = Some((a, b));
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Neighbor lists, one per vertex, ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            if a < self.n && b < self.n && a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Complement graph (no self-loops).
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Graph { n: self.n, edges }
    }
}

/// A path decomposition given as its bag sequence. Bags are sorted vertex
/// lists. Validity (cover + interval property + edge coverage) is checked
/// against a specific graph via [`validate_pd`].
pub type Bags = Vec<Vec<usize>>;

/// Width of a bag sequence: largest bag size minus one. Empty sequences and
/// all-empty bags give 0 by convention so callers need not special-case them.
pub fn pd_width(bags: &Bags) -> usize {
    bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
}

/// Check that `bags` is a path decomposition of `g`; push named diagnostics.
pub fn validate_pd(g: &Graph, bags: &Bags, errs: &mut Vec<String>) {
    for (i, bag) in bags.iter().enumerate() {
        let mut prev: Option<usize> = None;
        for &v in bag {
            if v >= g.n {
                errs.push(format!("bag {i} mentions vertex {v} out of range"));
            }
            if let Some(p) = prev {
                if p >= v {
                    errs.push(format!("bag {i} not strictly sorted at {v}"));
                }
            }
            prev = Some(v);
        }
    }
    // cover + interval property
    for v in 0..g.n {
        let occ: Vec<usize> = bags
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect();
        if occ.is_empty() {
            errs.push(format!("vertex {v} appears in no bag"));
        } else if occ[occ.len() - 1] - occ[0] + 1 != occ.len() {
            errs.push(format!("interval property violated for vertex {v}"));
        }
    }
    // edge coverage
    for &(a, b) in &g.edges {
        if a >= g.n || b >= g.n {
            continue; // already reported
        }
        let covered = bags
            .iter()
            .any(|bag| bag.binary_search(&a).is_ok() && bag.binary_search(&b).is_ok());
        if !covered {
            errs.push(format!("edge ({a},{b}) contained in no bag"));
        }
    }
}
