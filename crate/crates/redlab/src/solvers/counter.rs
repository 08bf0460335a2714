//! Nondecreasing counter machines.
//!
//! Exhaustive mode branches over every possible counter vector before each
//! check (all coordinatewise-nondecreasing successors).  Structured mode does
//! layered reachability over the `(check index, counter vector)` space, using
//! an upward-closure sweep per layer: a vector is available at check `i+1`
//! iff it dominates some vector that survived check `i`.

use crate::instances::{Certificate, CounterMachine};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    m: &CounterMachine,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    if m.checks.is_empty() {
        return Ok(Answer::yes(Certificate::CounterValues { values: vec![] }));
    }
    match mode {
        SolveMode::Exhaustive => exhaustive(m, budget),
        SolveMode::Structured => structured(m, budget),
    }
}

fn exhaustive(m: &CounterMachine, budget: &mut Budget) -> Result<Answer, SolveError> {
    let mut trace: Vec<Vec<usize>> = Vec::with_capacity(m.checks.len());
    let start = vec![0usize; m.parameter];
    if dfs(m, &start, &mut trace, budget)? {
        Ok(Answer::yes(Certificate::CounterValues { values: trace }))
    } else {
        Ok(Answer::no())
    }
}

fn dfs(
    m: &CounterMachine,
    current: &[usize],
    trace: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    if trace.len() == m.checks.len() {
        return Ok(true);
    }
    let i = trace.len();
    let mut candidate = current.to_vec();
    loop {
        budget.charge(1)?;
        if !m.rejects(i, &candidate) {
            trace.push(candidate.clone());
            if dfs(m, &candidate, trace, budget)? {
                return Ok(true);
            }
            trace.pop();
        }
        // Next coordinatewise-nondecreasing successor of `current`, odometer
        // style with per-digit floor `current[j]`.
        let mut j = 0;
        loop {
            if j == m.parameter {
                return Ok(false);
            }
            if candidate[j] < m.bound {
                candidate[j] += 1;
                break;
            }
            candidate[j] = current[j];
            j += 1;
        }
    }
}

fn structured(m: &CounterMachine, budget: &mut Budget) -> Result<Answer, SolveError> {
    let k = m.parameter;
    let radix = m.bound + 1;
    let mut space: u128 = 1;
    for _ in 0..k {
        space = space.saturating_mul(radix as u128);
    }
    // Charging the full state space up front turns an oversized (bound+1)^k
    // into a loud budget failure before any allocation.
    budget.charge(u64::try_from(space).unwrap_or(u64::MAX))?;
    let size = space as usize;
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut v = vec![0usize; k];
        for slot in v.iter_mut() {
            *slot = idx % radix;
            idx /= radix;
        }
        v
    };
    // available: vectors reachable before the next check (upward closed).
    let mut available = vec![true; size]; // closure of the all-zero start
    let mut surviving_layers: Vec<Vec<bool>> = Vec::with_capacity(m.checks.len());
    for i in 0..m.checks.len() {
        budget.charge((size * (k + 1)) as u64)?;
        let mut surviving = available.clone();
        for (idx, slot) in surviving.iter_mut().enumerate() {
            if *slot && m.rejects(i, &decode(idx)) {
                *slot = false;
            }
        }
        if surviving.iter().all(|&s| !s) {
            return Ok(Answer::no());
        }
        // Upward closure: prefix-OR along each coordinate.
        available = surviving.clone();
        let mut stride = 1;
        for _ in 0..k {
            for idx in 0..size {
                if (idx / stride) % radix > 0 && available[idx - stride] {
                    available[idx] = true;
                }
            }
            stride *= radix;
        }
        surviving_layers.push(surviving);
    }
    // Reconstruct a witness trace backwards: always pick the smallest index
    // dominated by the next chosen vector.
    let r = m.checks.len();
    let mut values: Vec<Vec<usize>> = vec![Vec::new(); r];
    let last = surviving_layers[r - 1]
        .iter()
        .position(|&s| s)
        .expect("nonempty by the early return above");
    values[r - 1] = decode(last);
    for i in (0..r - 1).rev() {
        budget.charge(size as u64)?;
        let upper = &values[i + 1];
        let pick = (0..size)
            .find(|&idx| {
                surviving_layers[i][idx]
                    && decode(idx).iter().zip(upper).all(|(a, b)| a <= b)
            })
            .expect("upward closure guarantees a dominated survivor");
        values[i] = decode(pick);
    }
    Ok(Answer::yes(Certificate::CounterValues { values }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Instance;
    use crate::solvers::DEFAULT_BUDGET;

    fn run_both(m: &CounterMachine) -> Answer {
        let inst = Instance::CounterMachine(m.clone());
        let mut b1 = Budget::new(DEFAULT_BUDGET);
        let mut b2 = Budget::new(DEFAULT_BUDGET);
        let a = solve(m, SolveMode::Exhaustive, &mut b1).unwrap();
        let b = solve(m, SolveMode::Structured, &mut b2).unwrap();
        assert_eq!(a.decision, b.decision, "mode disagreement on {m:?}");
        for ans in [&a, &b] {
            if let Some(c) = &ans.certificate {
                assert_eq!(crate::instances::check_certificate(&inst, c), Ok(true));
            }
        }
        a
    }

    #[test]
    fn single_zero_check_is_escapable_by_raising_first() {
        let m = CounterMachine { parameter: 1, bound: 1, checks: vec![(1, 1, 0, 0)] };
        let ans = run_both(&m);
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::CounterValues { values: vec![vec![1]] })
        );
    }

    #[test]
    fn zero_then_one_check_pair_traps_a_single_counter() {
        // Must be >0 for the first check, then sits at 1 for the second.
        let m = CounterMachine {
            parameter: 1,
            bound: 1,
            checks: vec![(1, 1, 0, 0), (1, 1, 1, 1)],
        };
        assert!(!run_both(&m).decision);
    }

    #[test]
    fn zero_bound_pins_counters() {
        let m = CounterMachine { parameter: 2, bound: 0, checks: vec![(1, 2, 0, 0)] };
        assert!(!run_both(&m).decision);
    }

    #[test]
    fn no_checks_means_yes() {
        let m = CounterMachine { parameter: 1, bound: 5, checks: vec![] };
        let ans = run_both(&m);
        assert!(ans.decision);
        assert_eq!(ans.certificate, Some(Certificate::CounterValues { values: vec![] }));
    }

    #[test]
    fn random_machines_agree_across_modes() {
        let mut state = 0x853c49e6748fea9bu64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut yes = 0;
        for _ in 0..60 {
            let k = 2;
            let bound = 2;
            let r = 1 + (rng() % 4) as usize;
            let checks: Vec<(usize, usize, usize, usize)> = (0..r)
                .map(|_| {
                    (
                        1 + (rng() % k as u64) as usize,
                        1 + (rng() % k as u64) as usize,
                        (rng() % (bound as u64 + 1)) as usize,
                        (rng() % (bound as u64 + 1)) as usize,
                    )
                })
                .collect();
            let m = CounterMachine { parameter: k, bound, checks };
            if run_both(&m).decision {
                yes += 1;
            }
        }
        assert!(yes > 0);
    }
}
