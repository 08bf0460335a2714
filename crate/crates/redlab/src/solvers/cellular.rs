//! Timed nondeterministic cellular automaton runs.
//!
//! Exhaustive mode walks the run tree (every nondeterministic branch,
//! depth-first).  Structured mode determinizes: layer-by-layer reachable
//! configuration sets with parent pointers, so the state space is bounded by
//! distinct configurations per step instead of branches.

use std::collections::HashMap;

use crate::instances::{CellularAutomaton, Certificate};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    ca: &CellularAutomaton,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    match mode {
        SolveMode::Exhaustive => exhaustive(ca, budget),
        SolveMode::Structured => structured(ca, budget),
    }
}

fn exhaustive(ca: &CellularAutomaton, budget: &mut Budget) -> Result<Answer, SolveError> {
    let mut run = vec![ca.initial.clone()];
    if dfs(ca, &mut run, budget)? {
        Ok(Answer::yes(Certificate::CaRun { configurations: run }))
    } else {
        Ok(Answer::no())
    }
}

/// Extend `run` to length `time + 1`; true iff some extension accepts.
/// On success `run` holds the accepting branch.
fn dfs(
    ca: &CellularAutomaton,
    run: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    if run.len() == ca.time + 1 {
        return Ok(ca.config_accepts(run.last().unwrap()));
    }
    let succs = ca.successors(run.last().unwrap());
    budget.charge(1 + succs.len() as u64)?;
    for next in succs {
        run.push(next);
        if dfs(ca, run, budget)? {
            return Ok(true);
        }
        run.pop();
    }
    Ok(false)
}

fn structured(ca: &CellularAutomaton, budget: &mut Budget) -> Result<Answer, SolveError> {
    // layers[i]: configuration reachable after i steps -> its predecessor.
    let mut layers: Vec<HashMap<Vec<usize>, Option<Vec<usize>>>> = Vec::with_capacity(ca.time + 1);
    let mut first = HashMap::new();
    first.insert(ca.initial.clone(), None);
    layers.push(first);
    for step in 0..ca.time {
        let mut next: HashMap<Vec<usize>, Option<Vec<usize>>> = HashMap::new();
        let configs: Vec<Vec<usize>> = layers[step].keys().cloned().collect();
        for cfg in configs {
            let succs = ca.successors(&cfg);
            budget.charge(1 + succs.len() as u64)?;
            for s in succs {
                next.entry(s).or_insert_with(|| Some(cfg.clone()));
            }
        }
        layers.push(next);
    }
    let hit = layers[ca.time]
        .keys()
        .filter(|cfg| ca.config_accepts(cfg))
        .min() // deterministic pick
        .cloned();
    match hit {
        None => Ok(Answer::no()),
        Some(last) => {
            let mut configurations = vec![last];
            for step in (1..=ca.time).rev() {
                let parent = layers[step][configurations.last().unwrap()]
                    .clone()
                    .expect("non-initial layers always record a parent");
                configurations.push(parent);
            }
            configurations.reverse();
            Ok(Answer::yes(Certificate::CaRun { configurations }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::CaFlavor;
    use crate::solvers::DEFAULT_BUDGET;

    fn run_both(ca: &CellularAutomaton) -> Answer {
        let mut b1 = Budget::new(DEFAULT_BUDGET);
        let mut b2 = Budget::new(DEFAULT_BUDGET);
        let a = solve(ca, SolveMode::Exhaustive, &mut b1).unwrap();
        let b = solve(ca, SolveMode::Structured, &mut b2).unwrap();
        assert_eq!(a.decision, b.decision, "mode disagreement");
        if let Some(c) = &a.certificate {
            assert_eq!(
                crate::instances::check_certificate(
                    &crate::instances::Instance::CellularAutomaton(ca.clone()),
                    c
                ),
                Ok(true)
            );
        }
        if let Some(c) = &b.certificate {
            assert_eq!(
                crate::instances::check_certificate(
                    &crate::instances::Instance::CellularAutomaton(ca.clone()),
                    c
                ),
                Ok(true)
            );
        }
        a
    }

    /// Every (a, b, c) -> b for interior b: configurations are fixed points.
    fn identity_automaton(q: usize, time: usize, flavor: CaFlavor) -> CellularAutomaton {
        // states: 0 = s_l, 1 = s_r, 2 and 3 interior; all interior accepting.
        let states = 4;
        let mut transitions = Vec::new();
        for a in 0..states {
            for b in 2..states {
                for c in 0..states {
                    transitions.push([a, b, c, b]);
                }
            }
        }
        transitions.sort_unstable();
        let mut initial = vec![2; q];
        initial[0] = 0;
        initial[q - 1] = 1;
        CellularAutomaton {
            parameter: q,
            states,
            s_l: 0,
            s_r: 1,
            transitions,
            accepting: vec![2, 3],
            initial,
            time,
            flavor,
        }
    }

    #[test]
    fn identity_automaton_accepts_at_any_time() {
        for t in [1, 2, 5] {
            for flavor in [
                CaFlavor::AtLeastOneAccepting,
                CaFlavor::AllAccepting,
                CaFlavor::NonHalting,
            ] {
                let ca = identity_automaton(4, t, flavor);
                let ans = run_both(&ca);
                assert!(ans.decision, "t={t} flavor={flavor:?}");
            }
        }
    }

    #[test]
    fn empty_transition_set_halts_immediately() {
        for flavor in [
            CaFlavor::AtLeastOneAccepting,
            CaFlavor::AllAccepting,
            CaFlavor::NonHalting,
        ] {
            let mut ca = identity_automaton(3, 1, flavor);
            ca.transitions.clear();
            assert!(!run_both(&ca).decision);
        }
    }

    #[test]
    fn single_branch_reaches_acceptance_at_t2() {
        // Interior states 2, 3, 4; only 4 accepts. Branch 2 -> 3 -> 4 wins;
        // branch 2 -> 2 -> {2,3} never accepts at time 2.
        let ca = CellularAutomaton {
            parameter: 3,
            states: 5,
            s_l: 0,
            s_r: 1,
            transitions: vec![[0, 2, 1, 2], [0, 2, 1, 3], [0, 3, 1, 4]],
            accepting: vec![4],
            initial: vec![0, 2, 1],
            time: 2,
            flavor: CaFlavor::AtLeastOneAccepting,
        };
        let ans = run_both(&ca);
        assert!(ans.decision);
        match ans.certificate.unwrap() {
            Certificate::CaRun { configurations } => {
                assert_eq!(
                    configurations,
                    vec![vec![0, 2, 1], vec![0, 3, 1], vec![0, 4, 1]]
                );
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn non_halting_flavor_cares_only_about_survival() {
        // 2 -> 3 -> nothing: survives one step but not two.
        let base = CellularAutomaton {
            parameter: 3,
            states: 4,
            s_l: 0,
            s_r: 1,
            transitions: vec![[0, 2, 1, 3]],
            accepting: vec![],
            initial: vec![0, 2, 1],
            time: 1,
            flavor: CaFlavor::NonHalting,
        };
        assert!(run_both(&base).decision);
        let mut two = base.clone();
        two.time = 2;
        assert!(!run_both(&two).decision);
    }

    #[test]
    fn budget_failure_is_loud() {
        let ca = identity_automaton(5, 5, CaFlavor::AllAccepting);
        let mut tiny = Budget::new(3);
        match solve(&ca, SolveMode::Exhaustive, &mut tiny) {
            Err(SolveError::Budget { limit: 3 }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
