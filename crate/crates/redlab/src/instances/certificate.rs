//! Witnesses for YES answers, checkable in one pass against an instance.
//!
//! `check` distinguishes malformed witnesses (wrong variant, lengths or
//! indices out of range: `Err`) from well-formed witnesses that simply fail
//! the predicate (`Ok(false)`).

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::pathwidth::{is_clique, is_dominating, is_independent, VertexProblem};
use super::Instance;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Certificate {
    /// Cell states per step, step 0 = initial configuration.
    CaRun { configurations: Vec<Vec<usize>> },
    /// Per block, sorted 0-based positions of the true variables.
    BlockAssignment { true_positions: Vec<Vec<usize>> },
    /// Sorted chosen vertices for chained clique / independent set.
    LayerSelection { vertices: Vec<usize> },
    /// Counter vector in effect at each check.
    CounterValues { values: Vec<Vec<usize>> },
    /// Color per vertex.
    Coloring { colors: Vec<usize> },
    /// Sorted vertex set for dominating set / independent set / clique.
    VertexSet { vertices: Vec<usize> },
    /// 1-based slot per task.
    Schedule { slots: Vec<usize> },
    /// Target position per source-path vertex.
    PositionMap { positions: Vec<usize> },
    /// Bandwidth layout: `order[i]` is the vertex placed at position `i`.
    Ordering { order: Vec<usize> },
    /// Full reconfiguration sequence including start and target.
    MoveSequence { sets: Vec<Vec<usize>> },
    /// A word accepted by every automaton.
    Word { symbols: Vec<usize> },
    /// A common subsequence of the required length.
    CommonSubsequence { symbols: Vec<usize> },
}

fn sorted_set_in_range(set: &[usize], n: usize, what: &str) -> Result<(), String> {
    let mut prev: Option<usize> = None;
    for &v in set {
        if v >= n {
            return Err(format!("{what}: element {v} out of range (n={n})"));
        }
        if let Some(p) = prev {
            if p >= v {
                return Err(format!("{what}: not a strictly sorted set at {v}"));
            }
        }
        prev = Some(v);
    }
    Ok(())
}

pub fn check(instance: &Instance, cert: &Certificate) -> Result<bool, String> {
    match (instance, cert) {
        (Instance::CellularAutomaton(ca), Certificate::CaRun { configurations }) => {
            if configurations.len() != ca.time + 1 {
                return Err(format!(
                    "run has {} configurations, expected {}",
                    configurations.len(),
                    ca.time + 1
                ));
            }
            if configurations[0] != ca.initial {
                return Err("run does not start at the initial configuration".into());
            }
            for (step, cfg) in configurations.iter().enumerate() {
                if cfg.len() != ca.parameter {
                    return Err(format!("configuration {step} has wrong length"));
                }
                if cfg.iter().any(|&s| s >= ca.states) {
                    return Err(format!("configuration {step} uses a state out of range"));
                }
            }
            for w in configurations.windows(2) {
                let (prev, cur) = (&w[0], &w[1]);
                if cur[0] != ca.s_l || cur[ca.parameter - 1] != ca.s_r {
                    return Ok(false);
                }
                for i in 1..ca.parameter.saturating_sub(1) {
                    let row = [prev[i - 1], prev[i], prev[i + 1], cur[i]];
                    if ca.transitions.binary_search(&row).is_err() {
                        return Ok(false);
                    }
                }
            }
            Ok(ca.config_accepts(configurations.last().unwrap()))
        }
        (Instance::ChainedCnf(cnf), Certificate::BlockAssignment { true_positions }) => {
            check_block_assignment(cnf, true_positions)
        }
        (Instance::RegularChainedCnf(reg), Certificate::BlockAssignment { true_positions }) => {
            check_block_assignment(&reg.expand(), true_positions)
        }
        (Instance::ChainedClique(g), Certificate::LayerSelection { vertices }) => {
            sorted_set_in_range(vertices, g.n, "selection")?;
            let classes = g.classes();
            let covered = classes.iter().all(|layer| {
                layer.iter().all(|class| {
                    class.iter().any(|v| vertices.binary_search(v).is_ok())
                })
            });
            if !covered {
                return Ok(false);
            }
            let graph = g.graph();
            Ok(pairs_within_window(g, vertices).all(|(a, b)| graph.has_edge(a, b)))
        }
        (Instance::ChainedIndependentSet(g), Certificate::LayerSelection { vertices }) => {
            sorted_set_in_range(vertices, g.n, "selection")?;
            let classes = g.classes();
            let exact = classes.iter().all(|layer| {
                layer.iter().all(|class| {
                    class.iter().filter(|v| vertices.binary_search(v).is_ok()).count() == 1
                })
            });
            if !exact {
                return Ok(false);
            }
            let graph = g.graph();
            Ok(pairs_within_window(g, vertices).all(|(a, b)| !graph.has_edge(a, b)))
        }
        (Instance::CounterMachine(m), Certificate::CounterValues { values }) => {
            if values.len() != m.checks.len() {
                return Err(format!(
                    "{} counter vectors for {} checks",
                    values.len(),
                    m.checks.len()
                ));
            }
            for (i, row) in values.iter().enumerate() {
                if row.len() != m.parameter {
                    return Err(format!("counter vector {i} has wrong length"));
                }
                if row.iter().any(|&v| v > m.bound) {
                    return Err(format!("counter vector {i} exceeds the bound"));
                }
            }
            for w in values.windows(2) {
                if w[0].iter().zip(&w[1]).any(|(a, b)| a > b) {
                    return Ok(false);
                }
            }
            Ok((0..values.len()).all(|i| !m.rejects(i, &values[i])))
        }
        (Instance::ListColoring(lc), Certificate::Coloring { colors }) => {
            if colors.len() != lc.n {
                return Err(format!("{} colors for n={}", colors.len(), lc.n));
            }
            if colors.iter().any(|&c| c >= lc.colors) {
                return Err("coloring uses a color out of range".into());
            }
            let eff = lc.effective_lists();
            if !(0..lc.n).all(|v| eff[v].contains(&colors[v])) {
                return Ok(false);
            }
            Ok(lc.edges.iter().all(|&(a, b)| colors[a] != colors[b]))
        }
        (Instance::PathwidthDominatingSet(p), Certificate::VertexSet { vertices }) => {
            check_vertex_set(p, VertexProblem::DominatingSet, vertices)
        }
        (Instance::PathwidthIndependentSet(p), Certificate::VertexSet { vertices }) => {
            check_vertex_set(p, VertexProblem::IndependentSet, vertices)
        }
        (Instance::PathwidthClique(p), Certificate::VertexSet { vertices }) => {
            check_vertex_set(p, VertexProblem::Clique, vertices)
        }
        (Instance::Scheduling(s), Certificate::Schedule { slots }) => {
            if slots.len() != s.tasks {
                return Err(format!("{} slots for {} tasks", slots.len(), s.tasks));
            }
            if slots.iter().any(|&t| t == 0 || t > s.deadline) {
                return Err("slot outside 1..=deadline".into());
            }
            let mut load = vec![0usize; s.deadline + 1];
            for &t in slots {
                load[t] += 1;
            }
            if load.iter().any(|&l| l > s.machines) {
                return Ok(false);
            }
            Ok(s.prec.iter().all(|&(a, b)| slots[a] < slots[b]))
        }
        (Instance::UniformEmulation(u), Certificate::PositionMap { positions }) => {
            if positions.len() != u.weights.len() {
                return Err(format!(
                    "{} positions for {} path vertices",
                    positions.len(),
                    u.weights.len()
                ));
            }
            if positions.iter().any(|&p| p >= u.target_length) {
                return Err("position out of range".into());
            }
            if positions.windows(2).any(|w| w[0].abs_diff(w[1]) > 1) {
                return Ok(false);
            }
            let mut load = vec![0usize; u.target_length];
            for (i, &p) in positions.iter().enumerate() {
                load[p] += u.weights[i];
            }
            Ok(load.iter().all(|&l| l == u.parameter))
        }
        (Instance::Bandwidth(b), Certificate::Ordering { order }) => {
            if order.len() != b.n {
                return Err(format!("layout has {} entries for n={}", order.len(), b.n));
            }
            let mut pos = vec![usize::MAX; b.n];
            for (i, &v) in order.iter().enumerate() {
                if v >= b.n {
                    return Err(format!("layout mentions vertex {v} out of range"));
                }
                if pos[v] != usize::MAX {
                    return Err(format!("layout places vertex {v} twice"));
                }
                pos[v] = i;
            }
            Ok(b.edges.iter().all(|&(u, w)| pos[u].abs_diff(pos[w]) <= b.parameter))
        }
        (Instance::Reconfiguration(r), Certificate::MoveSequence { sets }) => {
            if sets.is_empty() {
                return Err("empty move sequence".into());
            }
            if r.exact_steps {
                if sets.len() != r.steps {
                    return Err(format!(
                        "sequence has {} sets, exact step count is {}",
                        sets.len(),
                        r.steps
                    ));
                }
            } else if sets.len() > r.steps {
                return Err(format!(
                    "sequence has {} sets, allowed at most {}",
                    sets.len(),
                    r.steps
                ));
            }
            for (i, set) in sets.iter().enumerate() {
                sorted_set_in_range(set, r.n, &format!("set {i}"))?;
                if set.len() != r.parameter {
                    return Err(format!("set {i} has {} tokens", set.len()));
                }
            }
            if sets[0] != r.start || sets.last().unwrap() != &r.target {
                return Ok(false);
            }
            let g = r.graph();
            let adj = g.adjacency();
            if sets.iter().any(|s| !r.set_ok(&g, &adj, s)) {
                return Ok(false);
            }
            Ok(sets.windows(2).all(|w| r.one_move(&g, &w[0], &w[1])))
        }
        (Instance::FsaIntersection(f), Certificate::Word { symbols }) => {
            if symbols.iter().any(|&s| s >= f.alphabet) {
                return Err("word uses a symbol out of range".into());
            }
            Ok(f.accepts(symbols))
        }
        (Instance::Lcs(l), Certificate::CommonSubsequence { symbols }) => {
            if symbols.iter().any(|&s| s >= l.alphabet) {
                return Err("subsequence uses a symbol out of range".into());
            }
            if symbols.len() < l.required {
                return Ok(false);
            }
            Ok(l
                .strings
                .iter()
                .all(|s| super::lcs::is_subsequence(symbols, s)))
        }
        _ => Err(format!(
            "certificate shape does not fit instance kind {}",
            instance.kind()
        )),
    }
}

fn check_block_assignment(
    cnf: &super::cnf::ChainedCnf,
    true_positions: &[Vec<usize>],
) -> Result<bool, String> {
    if true_positions.len() != cnf.blocks {
        return Err(format!(
            "{} blocks in witness, instance has {}",
            true_positions.len(),
            cnf.blocks
        ));
    }
    for (b, t) in true_positions.iter().enumerate() {
        sorted_set_in_range(t, cnf.block_size, &format!("block {b}"))?;
    }
    Ok(cnf.weights_ok(true_positions) && cnf.all_satisfied(true_positions))
}

fn check_vertex_set(
    p: &super::pathwidth::PathwidthVertexInstance,
    problem: VertexProblem,
    vertices: &[usize],
) -> Result<bool, String> {
    sorted_set_in_range(vertices, p.n, "vertex set")?;
    let g = p.graph();
    Ok(match problem {
        VertexProblem::DominatingSet => {
            vertices.len() <= p.solution_size && is_dominating(&g, &g.adjacency(), vertices)
        }
        VertexProblem::IndependentSet => {
            vertices.len() >= p.solution_size && is_independent(&g, vertices)
        }
        VertexProblem::Clique => vertices.len() >= p.solution_size && is_clique(&g, vertices),
    })
}

/// Chosen-vertex pairs whose layers differ by at most one.
fn pairs_within_window<'a>(
    g: &'a super::layered::LayeredColoredGraph,
    vertices: &'a [usize],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    vertices.iter().enumerate().flat_map(move |(i, &a)| {
        vertices[i + 1..]
            .iter()
            .filter(move |&&b| g.layer_of[a].abs_diff(g.layer_of[b]) <= 1)
            .map(move |&b| (a, b))
    })
}

// Re-exported helper so solver code can reuse the window rule.
pub fn window_pairs_ok(
    g: &super::layered::LayeredColoredGraph,
    graph: &Graph,
    vertices: &[usize],
    want_edges: bool,
) -> bool {
    pairs_within_window(g, vertices).all(|(a, b)| graph.has_edge(a, b) == want_edges)
}

#[cfg(test)]
mod tests {
    use super::super::bandwidth::BandwidthInstance;
    use super::*;

    #[test]
    fn bandwidth_layout_checked() {
        let inst = Instance::Bandwidth(BandwidthInstance {
            parameter: 1,
            n: 3,
            edges: vec![(0, 2)],
        });
        let good = Certificate::Ordering { order: vec![0, 2, 1] };
        assert_eq!(check(&inst, &good), Ok(true));
        let bad = Certificate::Ordering { order: vec![0, 1, 2] };
        assert_eq!(check(&inst, &bad), Ok(false));
        let malformed = Certificate::Ordering { order: vec![0, 0, 2] };
        assert!(check(&inst, &malformed).is_err());
        let wrong_shape = Certificate::Word { symbols: vec![] };
        assert!(check(&inst, &wrong_shape).is_err());
    }
}
