//! Token reconfiguration between two vertex sets.

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::pathwidth::{is_clique, is_dominating, is_independent};

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum ReconfigProblem {
    DominatingSet,
    IndependentSet,
    Clique,
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum ReconfigRule {
    /// A move slides one token along an edge.
    TokenSliding,
    /// A move places one token on any free vertex.
    TokenJumping,
}

/// Transform `start` into `target` through a sequence of at most `steps` sets
/// (exactly `steps` when `exact_steps`), every set a size-`parameter` solution
/// of `problem`, consecutive sets one move apart under `rule`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ReconfigInstance {
    /// Number of tokens.
    pub parameter: usize,
    pub problem: ReconfigProblem,
    pub rule: ReconfigRule,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub start: Vec<usize>,
    pub target: Vec<usize>,
    pub steps: usize,
    pub exact_steps: bool,
}

impl ReconfigInstance {
    pub fn graph(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone() }
    }

    pub fn set_ok(&self, g: &Graph, adj: &[Vec<usize>], set: &[usize]) -> bool {
        match self.problem {
            ReconfigProblem::DominatingSet => is_dominating(g, adj, set),
            ReconfigProblem::IndependentSet => is_independent(g, set),
            ReconfigProblem::Clique => is_clique(g, set),
        }
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        let g = self.graph();
        g.validate_into(errs);
        if self.steps == 0 {
            errs.push("sequence needs at least one set".into());
        }
        for (name, set) in [("start", &self.start), ("target", &self.target)] {
            if set.len() != self.parameter {
                errs.push(format!(
                    "{name} has {} tokens, expected {}",
                    set.len(),
                    self.parameter
                ));
            }
            let mut prev: Option<usize> = None;
            for &v in set.iter() {
                if v >= self.n {
                    errs.push(format!("{name} places a token on vertex {v} out of range"));
                }
                if let Some(p) = prev {
                    if p >= v {
                        errs.push(format!("{name} not strictly sorted at {v}"));
                    }
                }
                prev = Some(v);
            }
        }
        if errs.is_empty() {
            let adj = g.adjacency();
            for (name, set) in [("start", &self.start), ("target", &self.target)] {
                if !self.set_ok(&g, &adj, set) {
                    errs.push(format!("{name} is not a valid solution set"));
                }
            }
        }
    }

    /// Is `b` reachable from `a` in one move? Both sorted token sets.
    pub fn one_move(&self, g: &Graph, a: &[usize], b: &[usize]) -> bool {
        let out: Vec<usize> = a.iter().copied().filter(|v| b.binary_search(v).is_err()).collect();
        let inn: Vec<usize> = b.iter().copied().filter(|v| a.binary_search(v).is_err()).collect();
        if out.len() != 1 || inn.len() != 1 {
            return false;
        }
        match self.rule {
            ReconfigRule::TokenJumping => true,
            ReconfigRule::TokenSliding => g.has_edge(out[0], inn[0]),
        }
    }
}
