//! Timed nondeterministic cellular automata on a fixed-length tape.

use serde::{Deserialize, Serialize};

/// Acceptance discipline applied after exactly `time` parallel steps.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum CaFlavor {
    /// Some run of length `time` ends with at least one cell accepting.
    AtLeastOneAccepting,
    /// Some run of length `time` ends with every cell accepting.
    AllAccepting,
    /// Some run survives `time` steps (no cell ever lacks a transition).
    NonHalting,
}

/// A row of `parameter` cells. Cells 0 and `parameter-1` hold the frozen
/// boundary states `s_l` / `s_r`; each interior cell rewrites itself every
/// step by nondeterministically picking a transition `[left, self, right,
/// next]` that matches its neighborhood. A step exists only if every interior
/// cell has at least one applicable transition; otherwise the machine halts
/// (and the run is shorter than requested).
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CellularAutomaton {
    /// Tape length q (number of cells including the two boundary cells).
    pub parameter: usize,
    /// States are `0..states`.
    pub states: usize,
    pub s_l: usize,
    pub s_r: usize,
    /// Sorted, deduplicated rows `[a, b, c, d]`: a cell in state `b` with
    /// neighbors `a`, `c` may move to `d`. `b` and `d` are interior states.
    pub transitions: Vec<[usize; 4]>,
    pub accepting: Vec<usize>,
    pub initial: Vec<usize>,
    pub time: usize,
    pub flavor: CaFlavor,
}

impl CellularAutomaton {
    pub fn is_boundary_state(&self, s: usize) -> bool {
        s == self.s_l || s == self.s_r
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.states == 0 {
            errs.push("automaton needs at least one state".into());
        }
        if self.parameter < 2 {
            errs.push("tape needs at least the two boundary cells".into());
        }
        if self.time == 0 {
            errs.push("time bound must be at least 1".into());
        }
        for (name, s) in [("s_l", self.s_l), ("s_r", self.s_r)] {
            if s >= self.states {
                errs.push(format!("{name}={s} out of range"));
            }
        }
        let mut prev: Option<[usize; 4]> = None;
        for (i, t) in self.transitions.iter().enumerate() {
            if t.iter().any(|&s| s >= self.states) {
                errs.push(format!("transition {i} mentions a state out of range"));
            }
            if self.is_boundary_state(t[1]) || self.is_boundary_state(t[3]) {
                errs.push(format!(
                    "transition {i} reads or writes a boundary state in an interior cell"
                ));
            }
            if let Some(p) = prev {
                if p >= *t {
                    errs.push(format!("transition list not strictly sorted at index {i}"));
                }
            }
            prev = Some(*t);
        }
        let mut pa: Option<usize> = None;
        for &a in &self.accepting {
            if a >= self.states {
                errs.push(format!("accepting state {a} out of range"));
            }
            if let Some(p) = pa {
                if p >= a {
                    errs.push("accepting list not strictly sorted".into());
                }
            }
            pa = Some(a);
        }
        if self.initial.len() != self.parameter {
            errs.push(format!(
                "initial configuration has {} cells, expected {}",
                self.initial.len(),
                self.parameter
            ));
        } else {
            if self.initial[0] != self.s_l {
                errs.push("initial configuration must start with s_l".into());
            }
            if self.initial[self.parameter - 1] != self.s_r {
                errs.push("initial configuration must end with s_r".into());
            }
            for (i, &s) in self.initial.iter().enumerate().skip(1) {
                if i + 1 == self.parameter {
                    break;
                }
                if s >= self.states {
                    errs.push(format!("initial cell {i} state {s} out of range"));
                } else if self.is_boundary_state(s) {
                    errs.push(format!("initial cell {i} holds a boundary state"));
                }
            }
        }
    }

    /// Successor states available to the interior cell at index `i` of `cfg`.
    pub fn cell_options(&self, cfg: &[usize], i: usize) -> Vec<usize> {
        let key = (cfg[i - 1], cfg[i], cfg[i + 1]);
        let mut out: Vec<usize> = self
            .transitions
            .iter()
            .filter(|t| (t[0], t[1], t[2]) == key)
            .map(|t| t[3])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All successor configurations of `cfg` (empty when the machine halts).
    pub fn successors(&self, cfg: &[usize]) -> Vec<Vec<usize>> {
        let q = self.parameter;
        if q <= 2 {
            return vec![cfg.to_vec()];
        }
        let options: Vec<Vec<usize>> = (1..q - 1).map(|i| self.cell_options(cfg, i)).collect();
        if options.iter().any(|o| o.is_empty()) {
            return Vec::new();
        }
        let mut out = vec![Vec::with_capacity(q)];
        for row in &mut out {
            row.push(self.s_l);
        }
        for opts in &options {
            let mut next = Vec::with_capacity(out.len() * opts.len());
            for row in &out {
                for &d in opts {
                    let mut r = row.clone();
                    r.push(d);
                    next.push(r);
                }
            }
            out = next;
        }
        for row in &mut out {
            row.push(self.s_r);
        }
        out
    }

    /// Acceptance is judged on interior cells only: the boundary cells are
    /// frozen bookkeeping, so `all-accepting` must not require `s_l`/`s_r`
    /// to be accepting states.
    pub fn config_accepts(&self, cfg: &[usize]) -> bool {
        let interior = &cfg[1..cfg.len().saturating_sub(1)];
        match self.flavor {
            CaFlavor::AtLeastOneAccepting => {
                interior.iter().any(|s| self.accepting.binary_search(s).is_ok())
            }
            CaFlavor::AllAccepting => {
                interior.iter().all(|s| self.accepting.binary_search(s).is_ok())
            }
            CaFlavor::NonHalting => true,
        }
    }
}
