//! Deterministic finite automata and their intersection nonemptiness.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    pub states: usize,
    pub start: usize,
    pub accepting: Vec<usize>,
    /// Dense table: `transitions[state][symbol]` is the successor state.
    pub transitions: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn accepts_state(&self, s: usize) -> bool {
        self.accepting.binary_search(&s).is_ok()
    }

    pub fn validate_into(&self, alphabet: usize, idx: usize, errs: &mut Vec<String>) {
        if self.states == 0 {
            errs.push(format!("automaton {idx} has no states"));
            return;
        }
        if self.start >= self.states {
            errs.push(format!("automaton {idx} start state out of range"));
        }
        let mut prev: Option<usize> = None;
        for &a in &self.accepting {
            if a >= self.states {
                errs.push(format!("automaton {idx} accepting state {a} out of range"));
            }
            if let Some(p) = prev {
                if p >= a {
                    errs.push(format!("automaton {idx} accepting list not strictly sorted"));
                }
            }
            prev = Some(a);
        }
        if self.transitions.len() != self.states {
            errs.push(format!(
                "automaton {idx} has {} transition rows for {} states",
                self.transitions.len(),
                self.states
            ));
            return;
        }
        for (s, row) in self.transitions.iter().enumerate() {
            if row.len() != alphabet {
                errs.push(format!(
                    "automaton {idx} state {s} has {} transitions for alphabet {alphabet}",
                    row.len()
                ));
            }
            for &t in row {
                if t >= self.states {
                    errs.push(format!("automaton {idx} state {s} maps to state {t} out of range"));
                }
            }
        }
    }

    /// Is the transition graph acyclic apart from self-loops?
    pub fn self_loop_acyclic(&self) -> bool {
        // colors: 0 unseen, 1 on stack, 2 done
        let mut color = vec![0u8; self.states];
        for s in 0..self.states {
            if color[s] != 0 {
                continue;
            }
            let mut stack = vec![(s, 0usize)];
            color[s] = 1;
            while let Some(&mut (v, ref mut i)) = stack.last_mut() {
                let row = &self.transitions[v];
                if *i >= row.len() {
                    color[v] = 2;
                    stack.pop();
                    continue;
                }
                let w = row[*i];
                *i += 1;
                if w == v {
                    continue;
                }
                match color[w] {
                    0 => {
                        color[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// Do the `parameter` automata accept a common word? The `acyclic` flag
/// promises every transition graph is acyclic apart from self-loops, which
/// the validator checks.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FsaIntersectionInstance {
    pub parameter: usize,
    pub alphabet: usize,
    pub acyclic: bool,
    pub automata: Vec<Dfa>,
}

impl FsaIntersectionInstance {
    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.alphabet == 0 {
            errs.push("alphabet must be nonempty".into());
        }
        if self.parameter != self.automata.len() {
            errs.push(format!(
                "parameter {} must equal the number of automata {}",
                self.parameter,
                self.automata.len()
            ));
        }
        if self.automata.is_empty() {
            errs.push("need at least one automaton".into());
        }
        for (i, dfa) in self.automata.iter().enumerate() {
            dfa.validate_into(self.alphabet, i, errs);
            if self.acyclic && dfa.transitions.len() == dfa.states && !dfa.self_loop_acyclic() {
                errs.push(format!(
                    "automaton {i} has a non-trivial cycle despite the acyclic flag"
                ));
            }
        }
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.automata.iter().all(|dfa| {
            let mut s = dfa.start;
            for &sym in word {
                if sym >= self.alphabet {
                    return false;
                }
                s = dfa.transitions[s][sym];
            }
            dfa.accepts_state(s)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exactly_one_a() -> Dfa {
        // over {a, b}: accept words with exactly one 'a' (symbol 0)
        Dfa {
            states: 3,
            start: 0,
            accepting: vec![1],
            transitions: vec![vec![1, 0], vec![2, 1], vec![2, 2]],
        }
    }

    #[test]
    fn word_evaluation() {
        let inst = FsaIntersectionInstance {
            parameter: 1,
            alphabet: 2,
            acyclic: false,
            automata: vec![exactly_one_a()],
        };
        let mut errs = Vec::new();
        inst.validate_into(&mut errs);
        assert!(errs.is_empty(), "{errs:?}");
        assert!(inst.accepts(&[1, 0, 1]));
        assert!(!inst.accepts(&[0, 0]));
    }

    #[test]
    fn self_loop_acyclicity() {
        // only self-loops besides the forward edges 0->1->2
        assert!(exactly_one_a().self_loop_acyclic());
        let swap = Dfa {
            states: 2,
            start: 0,
            accepting: vec![1],
            transitions: vec![vec![1], vec![0]],
        };
        assert!(!swap.self_loop_acyclic());
    }
}
