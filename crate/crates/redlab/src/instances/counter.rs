//! Nondecreasing counter machines with pairwise equality checks.

use serde::{Deserialize, Serialize};

/// `parameter` counters start at 0 and may only be increased, never past
/// `bound`. The checks fire in order; check `(c1, c2, r1, r2)` — counter ids
/// are 1-based — rejects iff at that moment counter `c1` equals `r1` *and*
/// counter `c2` equals `r2`. The machine accepts if some schedule of
/// increments survives every check.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CounterMachine {
    pub parameter: usize,
    pub bound: usize,
    pub checks: Vec<(usize, usize, usize, usize)>,
}

impl CounterMachine {
    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.parameter == 0 {
            errs.push("need at least one counter".into());
        }
        for (i, &(c1, c2, r1, r2)) in self.checks.iter().enumerate() {
            if c1 == 0 || c1 > self.parameter || c2 == 0 || c2 > self.parameter {
                errs.push(format!(
                    "check {i} names a counter outside 1..={}",
                    self.parameter
                ));
            }
            if r1 > self.bound || r2 > self.bound {
                errs.push(format!("check {i} compares against a value above the bound"));
            }
        }
    }

    /// Does the check at index `i` reject the counter vector `values`?
    pub fn rejects(&self, i: usize, values: &[usize]) -> bool {
        let (c1, c2, r1, r2) = self.checks[i];
        values[c1 - 1] == r1 && values[c2 - 1] == r2
    }
}
