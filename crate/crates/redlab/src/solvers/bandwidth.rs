//! Graph bandwidth: is there a layout with every edge stretched at most k?
//!
//! Exhaustive mode is a pruned permutation search.  Structured mode solves
//! each connected component by a window search: states carry the last
//! `2k + 1` placed vertices in order plus, per window vertex, which of its
//! edges are already satisfied.  Appending a vertex fails if a window
//! neighbor sits more than k back; a vertex may only retire from the window
//! with all edges satisfied.  Unsatisfied edges of non-window vertices are
//! impossible in live states, so these checks cover every edge.

use std::collections::{HashMap, HashSet};

use crate::instances::{BandwidthInstance, Certificate};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &BandwidthInstance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    match mode {
        SolveMode::Exhaustive => exhaustive(inst, budget),
        SolveMode::Structured => structured(inst, budget),
    }
}

fn exhaustive(inst: &BandwidthInstance, budget: &mut Budget) -> Result<Answer, SolveError> {
    let g = inst.graph();
    let adj = g.adjacency();
    let mut order: Vec<usize> = Vec::with_capacity(inst.n);
    let mut pos = vec![usize::MAX; inst.n];
    if permute(inst, &adj, &mut order, &mut pos, budget)? {
        Ok(Answer::yes(Certificate::Ordering { order }))
    } else {
        Ok(Answer::no())
    }
}

fn permute(
    inst: &BandwidthInstance,
    adj: &[Vec<usize>],
    order: &mut Vec<usize>,
    pos: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    let i = order.len();
    if i == inst.n {
        return Ok(true);
    }
    for v in 0..inst.n {
        if pos[v] != usize::MAX {
            continue;
        }
        budget.charge(1)?;
        let ok = adj[v]
            .iter()
            .all(|&u| pos[u] == usize::MAX || i - pos[u] <= inst.parameter);
        if !ok {
            continue;
        }
        pos[v] = i;
        order.push(v);
        if permute(inst, adj, order, pos, budget)? {
            return Ok(true);
        }
        order.pop();
        pos[v] = usize::MAX;
    }
    Ok(false)
}

/// Window state: vertices in placement order (oldest first) and, aligned with
/// them, bitmasks over each vertex's adjacency list marking satisfied edges.
type WindowState = (Vec<usize>, Vec<u64>, usize);

fn structured(inst: &BandwidthInstance, budget: &mut Budget) -> Result<Answer, SolveError> {
    let g = inst.graph();
    let adj = g.adjacency();
    if adj.iter().any(|a| a.len() >= 64) {
        budget.charge(u64::MAX)?; // mask representation capped at 64 neighbors
    }
    let mut order: Vec<usize> = Vec::new();
    for component in g.components() {
        match component_layout(inst, &adj, &component, budget)? {
            Some(layout) => order.extend(layout),
            None => return Ok(Answer::no()),
        }
    }
    Ok(Answer::yes(Certificate::Ordering { order }))
}

fn full_mask(adj: &[Vec<usize>], v: usize) -> u64 {
    if adj[v].is_empty() {
        0
    } else {
        (1u64 << adj[v].len()) - 1
    }
}

fn neighbor_index(adj: &[Vec<usize>], v: usize, u: usize) -> Option<usize> {
    adj[v].binary_search(&u).ok()
}

fn component_layout(
    inst: &BandwidthInstance,
    adj: &[Vec<usize>],
    component: &[usize],
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, SolveError> {
    let size = component.len();
    if size == 1 {
        return Ok(Some(vec![component[0]]));
    }
    let window_cap = 2 * inst.parameter + 1;
    let mut visited: HashSet<WindowState> = HashSet::new();
    let mut parents: HashMap<WindowState, (WindowState, usize)> = HashMap::new();
    let mut frontier: Vec<WindowState> = Vec::new();
    for &v in component {
        let st: WindowState = (vec![v], vec![0], 1);
        if visited.insert(st.clone()) {
            frontier.push(st);
        }
    }
    while !frontier.is_empty() {
        let mut next: Vec<WindowState> = Vec::new();
        for state in &frontier {
            let (window, masks, count) = state;
            if *count == size
                && window
                    .iter()
                    .zip(masks.iter())
                    .all(|(&w, &m)| m == full_mask(adj, w))
            {
                return Ok(Some(reconstruct(state, &parents)));
            }
            if *count == size {
                continue;
            }
            'cand: for &v in component {
                if window.contains(&v) {
                    continue;
                }
                budget.charge(1)?;
                let len = window.len();
                // window[j] occupies position count-len+j; appending puts v
                // at position count, distance count - (count-len+j) = len - j.
                let mut new_masks = masks.clone();
                let mut v_mask = 0u64;
                for (j, &w) in window.iter().enumerate() {
                    if let Some(wi) = neighbor_index(adj, w, v) {
                        if len - j > inst.parameter {
                            continue 'cand; // edge would stretch beyond k
                        }
                        new_masks[j] |= 1 << wi;
                        let vi = neighbor_index(adj, v, w).expect("adjacency is symmetric");
                        v_mask |= 1 << vi;
                    }
                }
                let mut new_window = window.clone();
                new_window.push(v);
                new_masks.push(v_mask);
                if new_window.len() > window_cap {
                    // oldest vertex retires; all its edges must be satisfied
                    if new_masks[0] != full_mask(adj, new_window[0]) {
                        continue;
                    }
                    new_window.remove(0);
                    new_masks.remove(0);
                }
                let st: WindowState = (new_window, new_masks, count + 1);
                if visited.insert(st.clone()) {
                    parents.insert(st.clone(), (state.clone(), v));
                    next.push(st);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

fn reconstruct(
    last: &WindowState,
    parents: &HashMap<WindowState, (WindowState, usize)>,
) -> Vec<usize> {
    let mut rev = Vec::new();
    let mut cur = last.clone();
    while let Some((prev, v)) = parents.get(&cur) {
        rev.push(*v);
        cur = prev.clone();
    }
    rev.push(cur.0[0]); // initial single-vertex state
    rev.reverse();
    rev
}
