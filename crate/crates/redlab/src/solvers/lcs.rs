//! Common subsequence of a string family, decision form.
//!
//! The exhaustive mode enumerates index combinations of the first string in
//! lexicographic order and tests each candidate against the others.  The
//! structured mode fills the classic k-dimensional suffix DP table and, on
//! success, walks it greedily to extract a witness.

use crate::instances::lcs::is_subsequence;
use crate::instances::{Certificate, LcsInstance};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &LcsInstance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    match mode {
        SolveMode::Exhaustive => exhaustive(inst, budget),
        SolveMode::Structured => suffix_dp(inst, budget),
    }
}

fn exhaustive(inst: &LcsInstance, budget: &mut Budget) -> Result<Answer, SolveError> {
    budget.charge(1)?;
    if inst.required == 0 {
        return Ok(Answer::yes(Certificate::CommonSubsequence { symbols: vec![] }));
    }
    let mut chosen = Vec::with_capacity(inst.required);
    match pick(inst, 0, &mut chosen, budget)? {
        Some(symbols) => Ok(Answer::yes(Certificate::CommonSubsequence { symbols })),
        None => Ok(Answer::no()),
    }
}

/// Extend `chosen` with symbols of `strings[0]` taken from index `start` on.
fn pick(
    inst: &LcsInstance,
    start: usize,
    chosen: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, SolveError> {
    budget.charge(1)?;
    if chosen.len() == inst.required {
        budget.charge(inst.required as u64)?;
        if inst.strings[1..].iter().all(|s| is_subsequence(chosen, s)) {
            return Ok(Some(chosen.clone()));
        }
        return Ok(None);
    }
    let s0 = &inst.strings[0];
    let need = inst.required - chosen.len();
    if need > s0.len().saturating_sub(start) {
        return Ok(None);
    }
    for i in start..=s0.len() - need {
        chosen.push(s0[i]);
        if let Some(hit) = pick(inst, i + 1, chosen, budget)? {
            return Ok(Some(hit));
        }
        chosen.pop();
    }
    Ok(None)
}

/// `dp[i⃗]` = length of the longest common subsequence of the suffixes
/// starting at `i⃗`, laid out flat in mixed radix.
fn suffix_dp(inst: &LcsInstance, budget: &mut Budget) -> Result<Answer, SolveError> {
    let dims: Vec<usize> = inst.strings.iter().map(|s| s.len() + 1).collect();
    let total_cells: u128 = dims.iter().map(|&d| d as u128).product();
    budget.charge(u64::try_from(total_cells).unwrap_or(u64::MAX))?;
    let total = usize::try_from(total_cells).expect("cell count fit the step budget");
    let k = dims.len();
    let mut stride = vec![1usize; k];
    for j in (0..k - 1).rev() {
        stride[j] = stride[j + 1] * dims[j + 1];
    }
    let diag: usize = stride.iter().sum();

    let digits = |idx: usize| -> Vec<usize> {
        (0..k).map(|j| (idx / stride[j]) % dims[j]).collect()
    };
    let mut dp = vec![0usize; total];
    for idx in (0..total).rev() {
        let d = digits(idx);
        if d.iter().zip(&dims).any(|(&x, &m)| x == m - 1) {
            continue; // some suffix is empty
        }
        let mut best = (0..k).map(|j| dp[idx + stride[j]]).max().unwrap();
        let c = inst.strings[0][d[0]];
        if inst.strings.iter().zip(&d).all(|(s, &x)| s[x] == c) {
            best = best.max(1 + dp[idx + diag]);
        }
        dp[idx] = best;
    }
    if dp[0] < inst.required {
        return Ok(Answer::no());
    }

    // Greedy walk: take a matched symbol whenever it accounts for the DP
    // value, otherwise skip along any coordinate that preserves it.
    let mut symbols = Vec::with_capacity(dp[0]);
    let mut idx = 0usize;
    loop {
        let d = digits(idx);
        if d.iter().zip(&dims).any(|(&x, &m)| x == m - 1) {
            break;
        }
        let c = inst.strings[0][d[0]];
        let all_equal = inst.strings.iter().zip(&d).all(|(s, &x)| s[x] == c);
        if all_equal && dp[idx] == 1 + dp[idx + diag] {
            symbols.push(c);
            idx += diag;
            continue;
        }
        let j = (0..k)
            .find(|&j| dp[idx + stride[j]] == dp[idx])
            .expect("a skip preserving the DP value exists");
        idx += stride[j];
    }
    Ok(Answer::yes(Certificate::CommonSubsequence { symbols }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Instance;
    use crate::solvers::DEFAULT_BUDGET;

    fn run_both(inst: &LcsInstance) -> Answer {
        let wrapped = Instance::Lcs(inst.clone());
        assert!(wrapped.validate().is_empty(), "{:?}", wrapped.validate());
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

    fn inst(strings: Vec<Vec<usize>>, required: usize) -> LcsInstance {
        LcsInstance { parameter: strings.len(), required, alphabet: 4, strings }
    }

    #[test]
    fn identical_strings_share_themselves() {
        let i = inst(vec![vec![0, 1, 0], vec![0, 1, 0]], 3);
        let ans = run_both(&i);
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::CommonSubsequence { symbols: vec![0, 1, 0] })
        );
        // Both modes find the whole string here.
        let mut b = Budget::new(DEFAULT_BUDGET);
        let dp = solve(&i, SolveMode::Structured, &mut b).unwrap();
        assert_eq!(
            dp.certificate,
            Some(Certificate::CommonSubsequence { symbols: vec![0, 1, 0] })
        );
    }

    #[test]
    fn opposite_orders_share_only_single_symbols() {
        assert!(!run_both(&inst(vec![vec![0, 1], vec![1, 0]], 2)).decision);
        assert!(run_both(&inst(vec![vec![0, 1], vec![1, 0]], 1)).decision);
    }

    #[test]
    fn transposition_costs_one_symbol() {
        let strings = vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]];
        let ans = run_both(&inst(strings.clone(), 3));
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::CommonSubsequence { symbols: vec![0, 1, 3] })
        );
        assert!(!run_both(&inst(strings, 4)).decision);
    }

    #[test]
    fn zero_required_is_trivially_satisfiable() {
        let ans = run_both(&inst(vec![vec![0, 1], vec![2, 3]], 0));
        assert!(ans.decision);
    }

    #[test]
    fn first_string_shorter_than_required() {
        assert!(!run_both(&inst(vec![vec![0], vec![0, 1, 2]], 2)).decision);
        assert!(run_both(&inst(vec![vec![0], vec![0, 1, 2]], 1)).decision);
    }

    #[test]
    fn three_way_intersection() {
        let strings = vec![vec![0, 1, 2], vec![2, 0, 1], vec![0, 2, 1]];
        // Pairwise LCS length is 2, but all three share only [0,1].
        let ans = run_both(&inst(strings.clone(), 2));
        assert!(ans.decision);
        assert_eq!(
            ans.certificate,
            Some(Certificate::CommonSubsequence { symbols: vec![0, 1] })
        );
        assert!(!run_both(&inst(strings, 3)).decision);
    }

    #[test]
    fn budget_trips_on_both_modes() {
        let i = inst(vec![vec![0, 1, 0, 1, 0], vec![1, 0, 1, 0, 1]], 3);
        for mode in SolveMode::all() {
            let mut tiny = Budget::new(4);
            match solve(&i, mode, &mut tiny) {
                Err(SolveError::Budget { .. }) => {}
                other => panic!("{mode}: expected budget error, got {other:?}"),
            }
        }
    }

    #[test]
    fn random_instances_agree_across_modes() {
        let mut state = 0x7c43_1b2e_u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..80 {
            let k = 2 + (rng() % 2) as usize;
            let strings: Vec<Vec<usize>> = (0..k)
                .map(|_| {
                    let len = (rng() % 6) as usize;
                    (0..len).map(|_| (rng() % 3) as usize).collect()
                })
                .collect();
            let required = (rng() % 5) as usize;
            run_both(&LcsInstance { parameter: k, required, alphabet: 3, strings });
        }
    }
}
