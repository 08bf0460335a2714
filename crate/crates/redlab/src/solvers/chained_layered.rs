//! Chained multicolored clique / independent set over layered graphs.
//!
//! The window rule: only pairs of chosen vertices whose layers differ by at
//! most one are constrained (must be adjacent for the clique variant,
//! non-adjacent for the independent-set variant).  Both variants are solved
//! by picking exactly one vertex per (layer, color) class — for the clique
//! variant that is complete because any solution restricted to one vertex per
//! class stays a solution.  Exhaustive mode checks full selections at the
//! leaves; structured mode runs a frontier DP over consecutive layers.

use std::collections::HashMap;

use crate::instances::certificate::window_pairs_ok;
use crate::instances::{Certificate, Graph, LayeredColoredGraph};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    g: &LayeredColoredGraph,
    want_edges: bool,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let graph = g.graph();
    let classes = g.classes();
    let mut selections: Vec<Vec<Vec<usize>>> = Vec::with_capacity(g.layers);
    for layer in &classes {
        selections.push(layer_selections(layer, budget)?);
    }
    if selections.iter().any(|s| s.is_empty()) {
        // Some (layer, color) class is empty: nothing can cover it.
        return Ok(Answer::no());
    }
    match mode {
        SolveMode::Exhaustive => exhaustive(g, &graph, want_edges, &selections, budget),
        SolveMode::Structured => structured(g, &graph, want_edges, &selections, budget),
    }
}

/// Cartesian product over the color classes of one layer, each row sorted.
fn layer_selections(
    classes: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>, SolveError> {
    if classes.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    let mut out = vec![Vec::new()];
    for class in classes {
        budget.charge((out.len() * class.len()) as u64)?;
        let mut next = Vec::with_capacity(out.len() * class.len());
        for prefix in &out {
            for &v in class {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    for row in &mut out {
        row.sort_unstable();
    }
    out.sort_unstable();
    Ok(out)
}

fn pairs_ok(graph: &Graph, want_edges: bool, a: &[usize], b: &[usize]) -> bool {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| x != y)
        .all(|(x, y)| graph.has_edge(x.min(y), x.max(y)) == want_edges)
}

fn intra_ok(graph: &Graph, want_edges: bool, sel: &[usize]) -> bool {
    sel.iter().enumerate().all(|(i, &a)| {
        sel[i + 1..]
            .iter()
            .all(|&b| graph.has_edge(a, b) == want_edges)
    })
}

fn flatten(chosen: &[usize], selections: &[Vec<Vec<usize>>]) -> Vec<usize> {
    let mut all: Vec<usize> = chosen
        .iter()
        .enumerate()
        .flat_map(|(layer, &idx)| selections[layer][idx].iter().copied())
        .collect();
    all.sort_unstable();
    all
}

fn exhaustive(
    g: &LayeredColoredGraph,
    graph: &Graph,
    want_edges: bool,
    selections: &[Vec<Vec<usize>>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let mut chosen: Vec<usize> = Vec::with_capacity(g.layers);
    if leaf_dfs(g, graph, want_edges, selections, &mut chosen, budget)? {
        Ok(Answer::yes(Certificate::LayerSelection {
            vertices: flatten(&chosen, selections),
        }))
    } else {
        Ok(Answer::no())
    }
}

fn leaf_dfs(
    g: &LayeredColoredGraph,
    graph: &Graph,
    want_edges: bool,
    selections: &[Vec<Vec<usize>>],
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    if chosen.len() == g.layers {
        let all = flatten(chosen, selections);
        return Ok(window_pairs_ok(g, graph, &all, want_edges));
    }
    for idx in 0..selections[chosen.len()].len() {
        budget.charge(1)?;
        chosen.push(idx);
        if leaf_dfs(g, graph, want_edges, selections, chosen, budget)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

fn structured(
    g: &LayeredColoredGraph,
    graph: &Graph,
    want_edges: bool,
    selections: &[Vec<Vec<usize>>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    // Feasible selection indices for layer 0 = internally consistent ones.
    let mut frontier: Vec<usize> = Vec::new();
    for (i, sel) in selections[0].iter().enumerate() {
        budget.charge(1)?;
        if intra_ok(graph, want_edges, sel) {
            frontier.push(i);
        }
    }
    let mut parents: Vec<HashMap<usize, usize>> = vec![HashMap::new()];
    for layer in 1..g.layers {
        let mut next: HashMap<usize, usize> = HashMap::new();
        for &left in &frontier {
            for (right, sel) in selections[layer].iter().enumerate() {
                budget.charge(1)?;
                if intra_ok(graph, want_edges, sel)
                    && pairs_ok(graph, want_edges, &selections[layer - 1][left], sel)
                {
                    next.entry(right).or_insert(left);
                }
            }
        }
        let mut keys: Vec<usize> = next.keys().copied().collect();
        keys.sort_unstable();
        frontier = keys;
        parents.push(next);
    }
    match frontier.first() {
        None => Ok(Answer::no()),
        Some(&last) => {
            let mut idxs = vec![last];
            for layer in (1..g.layers).rev() {
                let prev = parents[layer][idxs.last().unwrap()];
                idxs.push(prev);
            }
            idxs.reverse();
            Ok(Answer::yes(Certificate::LayerSelection {
                vertices: flatten(&idxs, selections),
            }))
        }
    }
}
