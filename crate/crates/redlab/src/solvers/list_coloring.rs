//! List coloring guided by a path decomposition.
//!
//! Exhaustive mode backtracks over vertices in id order, drawing colors from
//! the effective lists (lists intersected with pins).  Structured mode sweeps
//! the bag sequence: the table for bag `i` holds every proper list-coloring
//! of that bag extendable to everything introduced so far; consecutive tables
//! are linked by agreement on shared vertices.  Every edge lies inside some
//! bag, so in-bag properness over the sweep checks all edges.

use std::collections::BTreeMap;

use crate::instances::{Certificate, ListColoringInstance};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &ListColoringInstance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    if inst.n == 0 {
        return Ok(Answer::yes(Certificate::Coloring { colors: vec![] }));
    }
    let lists = inst.effective_lists();
    match mode {
        SolveMode::Exhaustive => exhaustive(inst, &lists, budget),
        SolveMode::Structured => structured(inst, &lists, budget),
    }
}

fn exhaustive(
    inst: &ListColoringInstance,
    lists: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let adj = inst.graph().adjacency();
    let mut colors: Vec<usize> = Vec::with_capacity(inst.n);
    if assign(inst, lists, &adj, &mut colors, budget)? {
        Ok(Answer::yes(Certificate::Coloring { colors }))
    } else {
        Ok(Answer::no())
    }
}

fn assign(
    inst: &ListColoringInstance,
    lists: &[Vec<usize>],
    adj: &[Vec<usize>],
    colors: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    let v = colors.len();
    if v == inst.n {
        return Ok(true);
    }
    for &c in &lists[v] {
        budget.charge(1)?;
        if adj[v].iter().any(|&u| u < v && colors[u] == c) {
            continue;
        }
        colors.push(c);
        if assign(inst, lists, adj, colors, budget)? {
            return Ok(true);
        }
        colors.pop();
    }
    Ok(false)
}

/// Proper list-colorings of `bag`, each aligned with the sorted bag order,
/// with vertices in `pinned` forced to the given color.
fn bag_colorings(
    inst: &ListColoringInstance,
    lists: &[Vec<usize>],
    bag: &[usize],
    pinned: &BTreeMap<usize, usize>,
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>, SolveError> {
    let graph = inst.graph();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(bag.len());
    fn rec(
        graph: &crate::instances::Graph,
        lists: &[Vec<usize>],
        bag: &[usize],
        pinned: &BTreeMap<usize, usize>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: &mut Budget,
    ) -> Result<(), SolveError> {
        let i = cur.len();
        if i == bag.len() {
            out.push(cur.clone());
            return Ok(());
        }
        let v = bag[i];
        let candidates: Vec<usize> = match pinned.get(&v) {
            Some(&c) => vec![c],
            None => lists[v].clone(),
        };
        for c in candidates {
            budget.charge(1)?;
            let clash = bag[..i]
                .iter()
                .zip(cur.iter())
                .any(|(&u, &uc)| uc == c && graph.has_edge(u.min(v), u.max(v)));
            if clash {
                continue;
            }
            cur.push(c);
            rec(graph, lists, bag, pinned, cur, out, budget)?;
            cur.pop();
        }
        Ok(())
    }
    rec(&graph, lists, bag, pinned, &mut cur, &mut out, budget)?;
    Ok(out)
}

fn structured(
    inst: &ListColoringInstance,
    lists: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    // tables[i]: bag-i coloring -> parent coloring index in tables[i-1].
    let mut tables: Vec<Vec<(Vec<usize>, usize)>> = Vec::with_capacity(inst.bags.len());
    for (i, bag) in inst.bags.iter().enumerate() {
        let mut table: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        if i == 0 {
            for coloring in bag_colorings(inst, lists, bag, &BTreeMap::new(), budget)? {
                if seen.insert(coloring.clone(), ()).is_none() {
                    table.push((coloring, usize::MAX));
                }
            }
        } else {
            let prev_bag = &inst.bags[i - 1];
            for (pidx, (prev_coloring, _)) in tables[i - 1].iter().enumerate() {
                let pinned: BTreeMap<usize, usize> = prev_bag
                    .iter()
                    .zip(prev_coloring.iter())
                    .filter(|(v, _)| bag.binary_search(v).is_ok())
                    .map(|(&v, &c)| (v, c))
                    .collect();
                for coloring in bag_colorings(inst, lists, bag, &pinned, budget)? {
                    if seen.insert(coloring.clone(), ()).is_none() {
                        table.push((coloring, pidx));
                    }
                }
            }
        }
        if table.is_empty() {
            return Ok(Answer::no());
        }
        tables.push(table);
    }
    // Reconstruct: walk parents from the first entry of the last table.
    let mut colors = vec![usize::MAX; inst.n];
    let mut idx = 0usize;
    for i in (0..inst.bags.len()).rev() {
        let (coloring, parent) = &tables[i][idx];
        for (&v, &c) in inst.bags[i].iter().zip(coloring.iter()) {
            colors[v] = c;
        }
        idx = *parent;
    }
    debug_assert!(colors.iter().all(|&c| c != usize::MAX));
    Ok(Answer::yes(Certificate::Coloring { colors }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Instance;
    use crate::solvers::DEFAULT_BUDGET;

    fn run_both(inst: &ListColoringInstance) -> Answer {
        let wrapped = Instance::ListColoring(inst.clone());
        let mut b1 = Budget::new(DEFAULT_BUDGET);
        let mut b2 = Budget::new(DEFAULT_BUDGET);
        let a = solve(inst, SolveMode::Exhaustive, &mut b1).unwrap();
        let b = solve(inst, SolveMode::Structured, &mut b2).unwrap();
        assert_eq!(a.decision, b.decision, "mode disagreement on {inst:?}");
        for ans in [&a, &b] {
            if let Some(c) = &ans.certificate {
                assert_eq!(crate::instances::check_certificate(&wrapped, c), Ok(true));
            }
        }
        a
    }

    #[test]
    fn single_vertex_takes_its_only_color() {
        let inst = ListColoringInstance {
            parameter: 0,
            n: 1,
            edges: vec![],
            bags: vec![vec![0]],
            colors: 2,
            lists: vec![vec![1]],
            precolored: vec![],
        };
        let ans = run_both(&inst);
        assert!(ans.decision);
        assert_eq!(ans.certificate, Some(Certificate::Coloring { colors: vec![1] }));
    }

    #[test]
    fn shared_single_color_on_an_edge_fails() {
        let inst = ListColoringInstance {
            parameter: 1,
            n: 2,
            edges: vec![(0, 1)],
            bags: vec![vec![0, 1]],
            colors: 2,
            lists: vec![vec![1], vec![1]],
            precolored: vec![],
        };
        assert!(!run_both(&inst).decision);
    }

    #[test]
    fn alternating_lists_color_a_four_cycle() {
        let inst = ListColoringInstance {
            parameter: 2,
            n: 4,
            edges: vec![(0, 1), (0, 3), (1, 2), (2, 3)],
            bags: vec![vec![0, 1, 3], vec![1, 2, 3]],
            colors: 2,
            lists: vec![vec![0, 1], vec![0], vec![0, 1], vec![0]],
            precolored: vec![],
        };
        let ans = run_both(&inst);
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::Coloring { colors: vec![1, 0, 1, 0] })
        );
    }

    #[test]
    fn pins_propagate_through_the_decomposition() {
        let base = ListColoringInstance {
            parameter: 1,
            n: 3,
            edges: vec![(0, 1), (1, 2)],
            bags: vec![vec![0, 1], vec![1, 2]],
            colors: 2,
            lists: vec![vec![0], vec![0, 1], vec![0, 1]],
            precolored: vec![(2, 0)],
        };
        let ans = run_both(&base);
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::Coloring { colors: vec![0, 1, 0] })
        );
        let mut squeezed = base.clone();
        squeezed.precolored = vec![(2, 1)];
        // Vertex 1 now clashes with one neighbor under either color.
        assert!(!run_both(&squeezed).decision);
    }

    #[test]
    fn random_window_graphs_agree_across_modes() {
        let mut state = 0xd1b54a32d192ed03u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut yes = 0;
        for _ in 0..40 {
            let n = 6usize;
            let bags: Vec<Vec<usize>> = (0..n - 2).map(|i| vec![i, i + 1, i + 2]).collect();
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if b - a <= 2 && rng() % 2 == 0 {
                        edges.push((a, b));
                    }
                }
            }
            let lists: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    let mut l: Vec<usize> =
                        (0..3).filter(|_| rng() % 3 > 0).collect();
                    if l.is_empty() {
                        l.push((rng() % 3) as usize);
                    }
                    l
                })
                .collect();
            let inst = ListColoringInstance {
                parameter: 2,
                n,
                edges,
                bags,
                colors: 3,
                lists,
                precolored: vec![],
            };
            let mut errs = Vec::new();
            inst.validate_into(&mut errs);
            assert!(errs.is_empty(), "{errs:?}");
            if run_both(&inst).decision {
                yes += 1;
            }
        }
        assert!(yes > 0);
    }
}
