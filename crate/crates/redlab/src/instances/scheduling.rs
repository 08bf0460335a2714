//! Unit-time precedence-constrained scheduling on identical machines.

use serde::{Deserialize, Serialize};

/// `tasks` unit jobs, at most `machines` per time slot, all done by slot
/// `deadline`; `prec` lists direct precedences `(a, b)` meaning `a` must run
/// in a strictly earlier slot than `b`. The declared `parameter` is the sum
/// of the machine count and the width of the precedence order (largest
/// antichain), which is how instances of this problem are measured here.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SchedulingInstance {
    pub parameter: usize,
    pub machines: usize,
    pub deadline: usize,
    pub tasks: usize,
    pub prec: Vec<(usize, usize)>,
}

impl SchedulingInstance {
    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.machines == 0 {
            errs.push("need at least one machine".into());
        }
        let mut prev: Option<(usize, usize)> = None;
        for &(a, b) in &self.prec {
            if a >= self.tasks || b >= self.tasks {
                errs.push(format!("precedence ({a},{b}) out of range"));
            }
            if a == b {
                errs.push(format!("task {a} precedes itself"));
            }
            if let Some(p) = prev {
                if p >= (a, b) {
                    errs.push(format!("precedence list not strictly sorted at ({a},{b})"));
                }
            }
            prev = Some((a, b));
        }
        if errs.is_empty() {
            match poset_width(self.tasks, &self.prec) {
                Some(w) => {
                    if self.parameter != self.machines + w {
                        errs.push(format!(
                            "parameter {} must equal machines {} plus order width {w}",
                            self.parameter, self.machines
                        ));
                    }
                }
                None => errs.push("precedence relation contains a cycle".into()),
            }
        }
    }
}

/// Reflexive-free transitive closure as bitset rows; `None` on a cycle.
pub fn transitive_closure(n: usize, prec: &[(usize, usize)]) -> Option<Vec<Vec<u64>>> {
    let words = n.div_ceil(64);
    let mut below = vec![vec![0u64; words]; n]; // below[a] = everything after a
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in prec {
        if a < n && b < n {
            succ[a].push(b);
            indeg[b] += 1;
        }
    }
    // topological order, then accumulate descendant sets back to front
    let mut order = Vec::with_capacity(n);
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = queue.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    for &v in order.iter().rev() {
        for &w in &succ[v] {
            below[v][w / 64] |= 1 << (w % 64);
            let (head, tail) = below.split_at_mut(v.max(w));
            let (src, dst) = if v < w { (&tail[0], &mut head[v]) } else { (&head[w], &mut tail[0]) };
            for (d, s) in dst.iter_mut().zip(src.iter()) {
                *d |= s;
            }
        }
    }
    Some(below)
}

fn comparable(closure: &[Vec<u64>], a: usize, b: usize) -> bool {
    closure[a][b / 64] & (1 << (b % 64)) != 0 || closure[b][a / 64] & (1 << (a % 64)) != 0
}

/// Largest antichain by branch and bound over the comparability graph.
pub fn width_exhaustive(n: usize, prec: &[(usize, usize)]) -> Option<usize> {
    let closure = transitive_closure(n, prec)?;
    let mut best = 0usize;
    // grow an antichain over vertices >= v
    fn go(v: usize, n: usize, chosen: &mut Vec<usize>, closure: &[Vec<u64>], best: &mut usize) {
        if chosen.len() + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = (*best).max(chosen.len());
            return;
        }
        if chosen.iter().all(|&u| !comparable(closure, u, v)) {
            chosen.push(v);
            go(v + 1, n, chosen, closure, best);
            chosen.pop();
        }
        go(v + 1, n, chosen, closure, best);
    }
    go(0, n, &mut Vec::new(), &closure, &mut best);
    Some(best)
}

/// Largest antichain via the minimum chain cover: split each element into a
/// "source" and "sink" copy, match along the transitive closure, and read the
/// cover size off the matching (n minus matched pairs equals the width).
pub fn width_matching(n: usize, prec: &[(usize, usize)]) -> Option<usize> {
    let closure = transitive_closure(n, prec)?;
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if closure[a][b / 64] & (1 << (b % 64)) != 0 {
                succ[a].push(b);
            }
        }
    }
    let mut match_right = vec![usize::MAX; n];
    let mut matched = 0usize;
    for a in 0..n {
        let mut seen = vec![false; n];
        if augment(a, &succ, &mut match_right, &mut seen) {
            matched += 1;
        }
    }
    Some(n - matched)
}

fn augment(a: usize, succ: &[Vec<usize>], match_right: &mut [usize], seen: &mut [bool]) -> bool {
    for &b in &succ[a] {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if match_right[b] == usize::MAX || augment(match_right[b], succ, match_right, seen) {
            match_right[b] = a;
            return true;
        }
    }
    false
}

/// Width of the precedence order; exhaustive search for small orders, the
/// matching computation otherwise. Cycles yield `None`.
pub fn poset_width(n: usize, prec: &[(usize, usize)]) -> Option<usize> {
    if n < 20 {
        width_exhaustive(n, prec)
    } else {
        width_matching(n, prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_has_width_two() {
        let prec = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
        assert_eq!(width_exhaustive(4, &prec), Some(2));
        assert_eq!(width_matching(4, &prec), Some(2));
    }

    #[test]
    fn chain_has_width_one_and_antichain_full_width() {
        let chain = vec![(0, 1), (1, 2), (2, 3)];
        assert_eq!(poset_width(4, &chain), Some(1));
        assert_eq!(poset_width(4, &[]), Some(4));
    }

    #[test]
    fn cycle_is_detected() {
        assert_eq!(poset_width(2, &[(0, 1), (1, 0)]), None);
    }

    #[test]
    fn both_width_computations_agree_on_random_orders() {
        // deterministic pseudo-random DAGs: edge (a,b), a<b, iff a hash bit is set
        for seed in 0u64..40 {
            let n = 3 + (seed % 9) as usize;
            let mut prec = Vec::new();
            let mut h = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            for a in 0..n {
                for b in a + 1..n {
                    h ^= h << 13;
                    h ^= h >> 7;
                    h ^= h << 17;
                    if h % 3 == 0 {
                        prec.push((a, b));
                    }
                }
            }
            assert_eq!(width_exhaustive(n, &prec), width_matching(n, &prec), "seed {seed}");
        }
    }

    #[test]
    fn parameter_must_count_machines_plus_width() {
        let inst = SchedulingInstance {
            parameter: 3,
            machines: 1,
            deadline: 4,
            tasks: 4,
            prec: vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        };
        let mut errs = Vec::new();
        inst.validate_into(&mut errs);
        assert!(errs.is_empty(), "{errs:?}");
        let bad = SchedulingInstance { parameter: 2, ..inst };
        let mut errs = Vec::new();
        bad.validate_into(&mut errs);
        assert_eq!(errs.len(), 1);
    }
}
