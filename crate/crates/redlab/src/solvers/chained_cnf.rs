//! Chained weighted CNF satisfiability.
//!
//! Exhaustive mode enumerates every per-block assignment tuple and tests all
//! clause sets at the leaves.  Structured mode runs a frontier DP over the
//! junctions: clause set `j` only couples blocks `j` and `j+1`, so the set of
//! feasible assignments for block `j+1` is computable from the feasible
//! assignments of block `j` alone.

use std::collections::HashMap;

use crate::instances::{Certificate, ChainedCnf};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    cnf: &ChainedCnf,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let choices = block_choices(cnf);
    budget.charge(choices.len() as u64)?;
    match mode {
        SolveMode::Exhaustive => exhaustive(cnf, &choices, budget),
        SolveMode::Structured => structured(cnf, &choices, budget),
    }
}

/// All sorted true-position sets obeying the weight discipline of one block:
/// every k-subset of positions, or (partitioned) one position per group.
pub fn block_choices(cnf: &ChainedCnf) -> Vec<Vec<usize>> {
    match cnf.groups() {
        Some(groups) => {
            let mut out = vec![Vec::new()];
            for group in &groups {
                let mut next = Vec::with_capacity(out.len() * group.len());
                for prefix in &out {
                    for &pos in group {
                        let mut row = prefix.clone();
                        row.push(pos);
                        next.push(row);
                    }
                }
                out = next;
            }
            for row in &mut out {
                row.sort_unstable();
            }
            out.sort_unstable();
            out
        }
        None => {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            subsets(0, cnf.block_size, cnf.parameter, &mut cur, &mut out);
            out
        }
    }
}

fn subsets(from: usize, q: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for pos in from..q {
        if q - pos < k - cur.len() {
            break;
        }
        cur.push(pos);
        subsets(pos + 1, q, k, cur, out);
        cur.pop();
    }
}

/// Evaluate one junction clause set given the true positions of its two
/// blocks only (for `blocks == 1`, `right` is ignored).
fn junction_ok(cnf: &ChainedCnf, j: usize, left: &[usize], right: &[usize]) -> bool {
    cnf.clauses[j].iter().all(|clause| {
        clause.iter().any(|&lit| {
            let var = lit.unsigned_abs() as usize;
            let b = cnf.block_of(var);
            let p = cnf.pos_of(var);
            let val = if b == j {
                left.binary_search(&p).is_ok()
            } else {
                right.binary_search(&p).is_ok()
            };
            val == (lit > 0)
        })
    })
}

fn exhaustive(
    cnf: &ChainedCnf,
    choices: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let mut truth: Vec<Vec<usize>> = Vec::with_capacity(cnf.blocks);
    if leaf_dfs(cnf, choices, &mut truth, budget)? {
        Ok(Answer::yes(Certificate::BlockAssignment { true_positions: truth }))
    } else {
        Ok(Answer::no())
    }
}

fn leaf_dfs(
    cnf: &ChainedCnf,
    choices: &[Vec<usize>],
    truth: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    if truth.len() == cnf.blocks {
        return Ok(cnf.all_satisfied(truth));
    }
    for choice in choices {
        budget.charge(1)?;
        truth.push(choice.clone());
        if leaf_dfs(cnf, choices, truth, budget)? {
            return Ok(true);
        }
        truth.pop();
    }
    Ok(false)
}

fn structured(
    cnf: &ChainedCnf,
    choices: &[Vec<usize>],
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    if cnf.blocks == 1 {
        for choice in choices {
            budget.charge(1)?;
            if junction_ok(cnf, 0, choice, choice) {
                return Ok(Answer::yes(Certificate::BlockAssignment {
                    true_positions: vec![choice.clone()],
                }));
            }
        }
        return Ok(Answer::no());
    }
    // frontier[b]: feasible choice index for block b -> parent index in b-1.
    let mut parents: Vec<HashMap<usize, usize>> = vec![HashMap::new()];
    let mut frontier: Vec<usize> = (0..choices.len()).collect();
    for j in 0..cnf.blocks - 1 {
        let mut next: HashMap<usize, usize> = HashMap::new();
        for &left in &frontier {
            for right in 0..choices.len() {
                budget.charge(1)?;
                if junction_ok(cnf, j, &choices[left], &choices[right]) {
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
            for b in (1..cnf.blocks).rev() {
                let prev = parents[b][idxs.last().unwrap()];
                idxs.push(prev);
            }
            idxs.reverse();
            Ok(Answer::yes(Certificate::BlockAssignment {
                true_positions: idxs.into_iter().map(|i| choices[i].clone()).collect(),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Instance;
    use crate::solvers::DEFAULT_BUDGET;

    fn run_both(cnf: &ChainedCnf) -> Answer {
        let inst = Instance::ChainedCnf(cnf.clone());
        let mut b1 = Budget::new(DEFAULT_BUDGET);
        let mut b2 = Budget::new(DEFAULT_BUDGET);
        let a = solve(cnf, SolveMode::Exhaustive, &mut b1).unwrap();
        let b = solve(cnf, SolveMode::Structured, &mut b2).unwrap();
        assert_eq!(a.decision, b.decision, "mode disagreement on {cnf:?}");
        for ans in [&a, &b] {
            if let Some(c) = &ans.certificate {
                assert_eq!(crate::instances::check_certificate(&inst, c), Ok(true));
            }
        }
        a
    }

    #[test]
    fn first_variables_of_each_block_satisfy_a_cross_clause() {
        // r=2, q=2, k=1, clause (x_{1,1} v x_{2,1}).
        let cnf = ChainedCnf {
            parameter: 1,
            blocks: 2,
            block_size: 2,
            positive: true,
            partition: None,
            clauses: vec![vec![vec![1, 3]]],
        };
        let ans = run_both(&cnf);
        assert!(ans.decision);
    }

    #[test]
    fn forced_true_variable_under_negative_clause_is_no() {
        // r=2, q=1, k=1: every block assignment makes variable 1 true.
        let cnf = ChainedCnf {
            parameter: 1,
            blocks: 2,
            block_size: 1,
            positive: false,
            partition: None,
            clauses: vec![vec![vec![-1]]],
        };
        assert!(!run_both(&cnf).decision);
    }

    #[test]
    fn single_block_instances_use_their_only_clause_set() {
        let sat = ChainedCnf {
            parameter: 1,
            blocks: 1,
            block_size: 3,
            positive: true,
            partition: None,
            clauses: vec![vec![vec![2]]],
        };
        let ans = run_both(&sat);
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::BlockAssignment { true_positions: vec![vec![1]] })
        );
        let unsat = ChainedCnf {
            parameter: 1,
            blocks: 1,
            block_size: 2,
            positive: false,
            partition: None,
            clauses: vec![vec![vec![1], vec![-1]]],
        };
        assert!(!run_both(&unsat).decision);
    }

    #[test]
    fn partition_restricts_choices_to_one_per_group() {
        let cnf = ChainedCnf {
            parameter: 2,
            blocks: 1,
            block_size: 4,
            positive: true,
            partition: Some(vec![0, 0, 1, 1]),
            clauses: vec![vec![vec![1], vec![4]]],
        };
        assert_eq!(
            block_choices(&cnf),
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        let ans = run_both(&cnf);
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::BlockAssignment { true_positions: vec![vec![0, 3]] })
        );
    }

    #[test]
    fn random_three_block_instances_agree_across_modes() {
        // Pseudo-random 3-clause junctions over r=3, q=3, k=1.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut yes = 0;
        for _ in 0..60 {
            let mut clauses = Vec::new();
            for j in 0..2usize {
                let mut set = Vec::new();
                for _ in 0..3 {
                    let mut clause = Vec::new();
                    for _ in 0..2 {
                        let var = (j * 3 + (rng() % 6) as usize + 1) as i64;
                        let lit = if rng() % 2 == 0 { var } else { -var };
                        clause.push(lit);
                    }
                    clause.sort_unstable_by_key(|&l| (l.unsigned_abs(), l));
                    clause.dedup();
                    if clause.windows(2).any(|w| w[0].unsigned_abs() == w[1].unsigned_abs()) {
                        continue; // skip clauses repeating a variable
                    }
                    set.push(clause);
                }
                clauses.push(crate::instances::cnf::canonical_clause_set(set));
            }
            let cnf = ChainedCnf {
                parameter: 1,
                blocks: 3,
                block_size: 3,
                positive: false,
                partition: None,
                clauses,
            };
            if run_both(&cnf).decision {
                yes += 1;
            }
        }
        assert!(yes > 0, "expected at least one satisfiable random instance");
    }
}
