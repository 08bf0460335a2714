//! Token reconfiguration: turn the start set into the target set one move at
//! a time, staying inside the solution space the whole way.
//!
//! A length-`s` sequence contains `s` sets and `s - 1` moves, so `steps = 1`
//! asks whether start and target already coincide.  In the at-most variant we
//! may stop early; in the exact variant the sequence length is prescribed, so
//! revisiting sets can be necessary (parity!) and a plain visited-set BFS
//! would be wrong.

use std::collections::BTreeMap;

use crate::instances::{Certificate, Graph, ReconfigInstance, ReconfigRule};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &ReconfigInstance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let g = inst.graph();
    let adj = g.adjacency();
    match mode {
        SolveMode::Exhaustive => {
            budget.charge(1)?;
            let mut path = vec![inst.start.clone()];
            if dfs(inst, &g, &adj, &mut path, budget)? {
                Ok(Answer::yes(Certificate::MoveSequence { sets: path }))
            } else {
                Ok(Answer::no())
            }
        }
        SolveMode::Structured => {
            if inst.exact_steps {
                layered_bfs(inst, &g, &adj, budget)
            } else {
                shortest_bfs(inst, &g, &adj, budget)
            }
        }
    }
}

/// All solution sets one move away from `set`, sorted for determinism.
fn successors(
    inst: &ReconfigInstance,
    g: &Graph,
    adj: &[Vec<usize>],
    set: &[usize],
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>, SolveError> {
    let mut out = Vec::new();
    for &u in set {
        let candidates: Vec<usize> = match inst.rule {
            ReconfigRule::TokenJumping => {
                (0..inst.n).filter(|v| set.binary_search(v).is_err()).collect()
            }
            ReconfigRule::TokenSliding => {
                adj[u].iter().copied().filter(|v| set.binary_search(v).is_err()).collect()
            }
        };
        for v in candidates {
            budget.charge(1)?;
            let mut next: Vec<usize> = set.iter().copied().filter(|&w| w != u).collect();
            let pos = next.binary_search(&v).unwrap_err();
            next.insert(pos, v);
            if inst.set_ok(g, adj, &next) {
                out.push(next);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Depth-first search over move sequences of length up to (or exactly)
/// `steps` sets.  Revisits are allowed; the depth bound terminates the search.
fn dfs(
    inst: &ReconfigInstance,
    g: &Graph,
    adj: &[Vec<usize>],
    path: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    let at_target = path.last().unwrap() == &inst.target;
    if at_target && (!inst.exact_steps || path.len() == inst.steps) {
        return Ok(true);
    }
    if path.len() == inst.steps {
        return Ok(false);
    }
    let cur = path.last().unwrap().clone();
    for next in successors(inst, g, adj, &cur, budget)? {
        path.push(next);
        if dfs(inst, g, adj, path, budget)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// At-most variant: breadth-first search with a visited set.  A shortest
/// reconfiguration sequence never repeats a set, so pruning revisits is safe.
fn shortest_bfs(
    inst: &ReconfigInstance,
    g: &Graph,
    adj: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    budget.charge(1)?;
    if inst.start == inst.target {
        return Ok(Answer::yes(Certificate::MoveSequence { sets: vec![inst.start.clone()] }));
    }
    let mut parents: BTreeMap<Vec<usize>, Option<Vec<usize>>> = BTreeMap::new();
    parents.insert(inst.start.clone(), None);
    let mut level = vec![inst.start.clone()];
    let mut sets_used = 1usize;
    while sets_used < inst.steps && !level.is_empty() {
        let mut next_level = Vec::new();
        for cur in level {
            for next in successors(inst, g, adj, &cur, budget)? {
                if parents.contains_key(&next) {
                    continue;
                }
                let found = next == inst.target;
                parents.insert(next.clone(), Some(cur.clone()));
                if found {
                    let mut sets = vec![next];
                    while let Some(p) = parents[sets.last().unwrap()].clone() {
                        sets.push(p);
                    }
                    sets.reverse();
                    return Ok(Answer::yes(Certificate::MoveSequence { sets }));
                }
                next_level.push(next);
            }
        }
        level = next_level;
        sets_used += 1;
    }
    Ok(Answer::no())
}

/// Exact variant: one frontier per sequence position, revisits across layers
/// allowed.  `layers[i]` maps each set reachable with `i + 1` sets to its
/// predecessor in layer `i - 1`.
fn layered_bfs(
    inst: &ReconfigInstance,
    g: &Graph,
    adj: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    budget.charge(1)?;
    let mut layers: Vec<BTreeMap<Vec<usize>, Option<Vec<usize>>>> = Vec::with_capacity(inst.steps);
    let mut first = BTreeMap::new();
    first.insert(inst.start.clone(), None);
    layers.push(first);
    for i in 1..inst.steps {
        let mut layer: BTreeMap<Vec<usize>, Option<Vec<usize>>> = BTreeMap::new();
        for cur in layers[i - 1].keys().cloned().collect::<Vec<_>>() {
            for next in successors(inst, g, adj, &cur, budget)? {
                layer.entry(next).or_insert_with(|| Some(cur.clone()));
            }
        }
        if layer.is_empty() {
            return Ok(Answer::no());
        }
        layers.push(layer);
    }
    if !layers[inst.steps - 1].contains_key(&inst.target) {
        return Ok(Answer::no());
    }
    let mut sets = vec![inst.target.clone()];
    for i in (1..inst.steps).rev() {
        let prev = layers[i][sets.last().unwrap()].clone().unwrap();
        sets.push(prev);
    }
    sets.reverse();
    Ok(Answer::yes(Certificate::MoveSequence { sets }))
}
