//! Nonemptiness of an intersection of DFAs.
//!
//! If any common word exists, one exists of length below the product of the
//! state counts: a shortest accepted word drives the product automaton
//! through pairwise distinct tuples.  The exhaustive mode enumerates words in
//! length-then-lexicographic order up to that bound; the structured mode runs
//! a breadth-first search over state tuples.

use std::collections::{HashMap, HashSet};
use std::collections::VecDeque;

use crate::instances::{Certificate, FsaIntersectionInstance};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &FsaIntersectionInstance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    match mode {
        SolveMode::Exhaustive => exhaustive(inst, budget),
        SolveMode::Structured => product_bfs(inst, budget),
    }
}

fn exhaustive(
    inst: &FsaIntersectionInstance,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let bound: usize = inst
        .automata
        .iter()
        .map(|d| d.states)
        .fold(1usize, |acc, s| acc.saturating_mul(s));
    for len in 0..bound {
        // Odometer over alphabet^len, starting from the all-zeros word.
        let mut word = vec![0usize; len];
        loop {
            budget.charge(1 + len as u64)?;
            if inst.accepts(&word) {
                return Ok(Answer::yes(Certificate::Word { symbols: word }));
            }
            let mut i = len;
            loop {
                if i == 0 {
                    break;
                }
                word[i - 1] += 1;
                if word[i - 1] < inst.alphabet {
                    break;
                }
                word[i - 1] = 0;
                i -= 1;
            }
            if i == 0 {
                break;
            }
        }
    }
    Ok(Answer::no())
}

fn product_bfs(
    inst: &FsaIntersectionInstance,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let start: Vec<usize> = inst.automata.iter().map(|d| d.start).collect();
    let accepting =
        |tuple: &[usize]| tuple.iter().zip(&inst.automata).all(|(&s, d)| d.accepts_state(s));
    budget.charge(1)?;
    if accepting(&start) {
        return Ok(Answer::yes(Certificate::Word { symbols: vec![] }));
    }
    let mut parents: HashMap<Vec<usize>, (Vec<usize>, usize)> = HashMap::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(tuple) = queue.pop_front() {
        for sym in 0..inst.alphabet {
            budget.charge(1)?;
            let next: Vec<usize> = tuple
                .iter()
                .zip(&inst.automata)
                .map(|(&s, d)| d.transitions[s][sym])
                .collect();
            if !seen.insert(next.clone()) {
                continue;
            }
            parents.insert(next.clone(), (tuple.clone(), sym));
            if accepting(&next) {
                let mut symbols = Vec::new();
                let mut cur = next;
                while let Some((prev, s)) = parents.get(&cur) {
                    symbols.push(*s);
                    cur = prev.clone();
                }
                symbols.reverse();
                return Ok(Answer::yes(Certificate::Word { symbols }));
            }
            queue.push_back(next);
        }
    }
    Ok(Answer::no())
}
