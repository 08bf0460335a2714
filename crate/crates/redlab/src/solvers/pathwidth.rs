//! Dominating set / independent set / clique along a path decomposition.
//!
//! Exhaustive mode scans every vertex subset as a bitmask.  Structured mode
//! depends on the problem: dominating set and independent set run the classic
//! sweep over introduce/forget events derived from the bag sequence (3 or 2
//! states per live vertex); cliques use the structural fact that every clique
//! is contained in a single bag, so a per-bag subset scan suffices.

use std::collections::BTreeMap;

use crate::instances::pathwidth::{is_clique, is_dominating, is_independent};
use crate::instances::{Certificate, PathwidthVertexInstance, VertexProblem};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &PathwidthVertexInstance,
    problem: VertexProblem,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    match mode {
        SolveMode::Exhaustive => exhaustive(inst, problem, budget),
        SolveMode::Structured => match problem {
            VertexProblem::DominatingSet => sweep(inst, true, budget),
            VertexProblem::IndependentSet => sweep(inst, false, budget),
            VertexProblem::Clique => clique_per_bag(inst, budget),
        },
    }
}

fn mask_to_set(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn exhaustive(
    inst: &PathwidthVertexInstance,
    problem: VertexProblem,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let g = inst.graph();
    let adj = g.adjacency();
    if inst.n >= 64 {
        // 2^n masks cannot fit any sane budget; fail loudly.
        budget.charge(u64::MAX)?;
    }
    let k = inst.solution_size;
    for mask in 0u64..1u64 << inst.n {
        budget.charge(1)?;
        let size = mask.count_ones() as usize;
        let candidate = match problem {
            VertexProblem::DominatingSet => size <= k,
            VertexProblem::IndependentSet | VertexProblem::Clique => size >= k,
        };
        if !candidate {
            continue;
        }
        let set = mask_to_set(mask);
        let ok = match problem {
            VertexProblem::DominatingSet => is_dominating(&g, &adj, &set),
            VertexProblem::IndependentSet => is_independent(&g, &set),
            VertexProblem::Clique => is_clique(&g, &set),
        };
        if ok {
            return Ok(Answer::yes(Certificate::VertexSet { vertices: set }));
        }
    }
    Ok(Answer::no())
}

fn clique_per_bag(
    inst: &PathwidthVertexInstance,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    // Pairwise-adjacent vertices have pairwise-intersecting bag intervals, so
    // some bag contains the whole clique (Helly property of intervals).
    let g = inst.graph();
    if inst.solution_size == 0 {
        return Ok(Answer::yes(Certificate::VertexSet { vertices: vec![] }));
    }
    let mut best: Option<Vec<usize>> = None;
    for bag in &inst.bags {
        if bag.len() >= 64 {
            budget.charge(u64::MAX)?;
        }
        for mask in 0u64..1u64 << bag.len() {
            budget.charge(1)?;
            let set: Vec<usize> = mask_to_set(mask).into_iter().map(|i| bag[i]).collect();
            if set.len() >= inst.solution_size
                && is_clique(&g, &set)
                && best.as_ref().map_or(true, |b| b.len() < set.len())
            {
                best = Some(set);
            }
        }
    }
    Ok(match best {
        Some(set) => Answer::yes(Certificate::VertexSet { vertices: set }),
        None => Answer::no(),
    })
}

#[derive(Clone, Copy, Debug)]
enum Event {
    Introduce(usize),
    Forget(usize),
}

/// Introduce/forget schedule derived from the bag sequence: a vertex is
/// introduced at its first bag and forgotten after its last.
fn events(inst: &PathwidthVertexInstance) -> Vec<Event> {
    let mut first = vec![usize::MAX; inst.n];
    let mut last = vec![0usize; inst.n];
    for (i, bag) in inst.bags.iter().enumerate() {
        for &v in bag {
            if first[v] == usize::MAX {
                first[v] = i;
            }
            last[v] = i;
        }
    }
    let mut out = Vec::with_capacity(2 * inst.n);
    for i in 0..inst.bags.len() {
        for v in 0..inst.n {
            if first[v] == i {
                out.push(Event::Introduce(v));
            }
        }
        for v in 0..inst.n {
            if last[v] == i {
                out.push(Event::Forget(v));
            }
        }
    }
    out
}

// Per-vertex states for the dominating-set sweep. The independent-set sweep
// uses only IN / OUT_DOMINATED (reading the latter as plain "out").
const IN: u8 = 0;
const OUT_DOMINATED: u8 = 1;
const OUT_UNDOMINATED: u8 = 2;

type Table = BTreeMap<Vec<u8>, (usize, Vec<u8>)>; // key -> (best count, parent key)

/// Shared sweep for dominating set (`dominating = true`, minimizing) and
/// independent set (`dominating = false`, maximizing).
fn sweep(
    inst: &PathwidthVertexInstance,
    dominating: bool,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    if inst.n == 0 {
        return Ok(match (dominating, inst.solution_size) {
            (true, _) => Answer::yes(Certificate::VertexSet { vertices: vec![] }),
            (false, 0) => Answer::yes(Certificate::VertexSet { vertices: vec![] }),
            (false, _) => Answer::no(),
        });
    }
    let g = inst.graph();
    let evs = events(inst);
    let better = |a: usize, b: usize| if dominating { a < b } else { a > b };
    let mut live: Vec<usize> = Vec::new();
    let mut tables: Vec<Table> = Vec::with_capacity(evs.len());
    let mut current: Table = BTreeMap::new();
    current.insert(Vec::new(), (0, Vec::new()));
    for ev in &evs {
        let mut next: Table = BTreeMap::new();
        match *ev {
            Event::Introduce(v) => {
                let vpos = live.partition_point(|&u| u < v);
                let neighbor_pos: Vec<usize> = live
                    .iter()
                    .enumerate()
                    .filter(|(_, &u)| g.has_edge(u.min(v), u.max(v)))
                    .map(|(i, _)| i)
                    .collect();
                for (key, &(count, _)) in &current {
                    // choice 1: v joins the set
                    let in_ok = dominating
                        || neighbor_pos.iter().all(|&i| key[i] != IN);
                    if in_ok {
                        budget.charge(1)?;
                        let mut k2 = key.clone();
                        if dominating {
                            for &i in &neighbor_pos {
                                if k2[i] == OUT_UNDOMINATED {
                                    k2[i] = OUT_DOMINATED;
                                }
                            }
                        }
                        k2.insert(vpos, IN);
                        upsert(&mut next, k2, count + 1, key, better);
                    }
                    // choice 2: v stays out
                    budget.charge(1)?;
                    let state = if !dominating {
                        OUT_DOMINATED
                    } else if neighbor_pos.iter().any(|&i| key[i] == IN) {
                        OUT_DOMINATED
                    } else {
                        OUT_UNDOMINATED
                    };
                    let mut k2 = key.clone();
                    k2.insert(vpos, state);
                    upsert(&mut next, k2, count, key, better);
                }
                live.insert(vpos, v);
            }
            Event::Forget(v) => {
                let vpos = live.partition_point(|&u| u < v);
                for (key, &(count, _)) in &current {
                    budget.charge(1)?;
                    if dominating && key[vpos] == OUT_UNDOMINATED {
                        continue; // v can never be dominated later
                    }
                    let mut k2 = key.clone();
                    k2.remove(vpos);
                    upsert(&mut next, k2, count, key, better);
                }
                live.remove(vpos);
            }
        }
        if next.is_empty() {
            return Ok(Answer::no());
        }
        tables.push(std::mem::replace(&mut current, next));
    }
    let (final_count, mut parent) = current
        .get(&Vec::new())
        .cloned()
        .expect("all vertices forgotten leaves the empty key");
    let feasible = if dominating {
        final_count <= inst.solution_size
    } else {
        final_count >= inst.solution_size
    };
    if !feasible {
        return Ok(Answer::no());
    }
    // Walk parents backwards; membership is read off at introduce events.
    let mut vertices: Vec<usize> = Vec::new();
    let mut lives: Vec<Vec<usize>> = Vec::with_capacity(evs.len());
    let mut live: Vec<usize> = Vec::new();
    for ev in &evs {
        lives.push(live.clone());
        match *ev {
            Event::Introduce(v) => {
                let p = live.partition_point(|&u| u < v);
                live.insert(p, v);
            }
            Event::Forget(v) => {
                let p = live.partition_point(|&u| u < v);
                live.remove(p);
            }
        }
    }
    let mut key_after: Vec<u8>;
    // Recompute each step's chosen key going backwards through the tables.
    let mut chosen_key = Vec::new(); // final empty key
    for (i, ev) in evs.iter().enumerate().rev() {
        key_after = chosen_key;
        chosen_key = parent.clone();
        if let Event::Introduce(v) = *ev {
            let before = &lives[i];
            let vpos = before.partition_point(|&u| u < v);
            // key_after includes v at vpos
            if key_after[vpos] == IN {
                vertices.push(v);
            }
        }
        if i > 0 {
            parent = tables[i]
                .get(&chosen_key)
                .expect("parent chain stays inside earlier tables")
                .1
                .clone();
        }
    }
    vertices.sort_unstable();
    let _ = final_count;
    Ok(Answer::yes(Certificate::VertexSet { vertices }))
}

fn upsert(
    table: &mut Table,
    key: Vec<u8>,
    count: usize,
    parent: &Vec<u8>,
    better: impl Fn(usize, usize) -> bool,
) {
    match table.get_mut(&key) {
        Some(entry) => {
            if better(count, entry.0) {
                *entry = (count, parent.clone());
            }
        }
        None => {
            table.insert(key, (count, parent.clone()));
        }
    }
}
