//! Unit-time scheduling with precedences, bounded machines and deadline.
//!
//! Exhaustive mode assigns slots 1..=deadline greedily per slot, branching
//! over every subset of the currently ready tasks (size at most the machine
//! count), with the obvious capacity prune.  Structured mode searches over
//! frontier states: the scheduled prefix is always predecessor-closed, so it
//! is determined by its antichain of maximal tasks; BFS over (slot, antichain)
//! with subset moves explores each distinct prefix once.

use std::collections::HashMap;

use crate::instances::scheduling::transitive_closure;
use crate::instances::{Certificate, SchedulingInstance};
use crate::solvers::{Answer, Budget, SolveError, SolveMode};

pub fn solve(
    inst: &SchedulingInstance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    if inst.tasks == 0 {
        return Ok(Answer::yes(Certificate::Schedule { slots: vec![] }));
    }
    match mode {
        SolveMode::Exhaustive => exhaustive(inst, budget),
        SolveMode::Structured => structured(inst, budget),
    }
}

fn direct_preds(inst: &SchedulingInstance) -> Vec<Vec<usize>> {
    let mut preds = vec![Vec::new(); inst.tasks];
    for &(a, b) in &inst.prec {
        preds[b].push(a);
    }
    preds
}

fn exhaustive(inst: &SchedulingInstance, budget: &mut Budget) -> Result<Answer, SolveError> {
    let preds = direct_preds(inst);
    let mut slots = vec![0usize; inst.tasks]; // 0 = unscheduled
    if place(inst, &preds, 1, inst.tasks, &mut slots, budget)? {
        Ok(Answer::yes(Certificate::Schedule { slots }))
    } else {
        Ok(Answer::no())
    }
}

fn place(
    inst: &SchedulingInstance,
    preds: &[Vec<usize>],
    slot: usize,
    remaining: usize,
    slots: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    if remaining == 0 {
        return Ok(true);
    }
    if slot > inst.deadline
        || remaining > (inst.deadline - slot + 1).saturating_mul(inst.machines)
    {
        return Ok(false);
    }
    let ready: Vec<usize> = (0..inst.tasks)
        .filter(|&t| slots[t] == 0 && preds[t].iter().all(|&p| slots[p] != 0))
        .collect();
    // (All scheduled predecessors sit in slots < `slot`, so readiness is
    // strict-precedence-safe.)
    choose(inst, preds, slot, remaining, slots, &ready, 0, 0, budget)
}

#[allow(clippy::too_many_arguments)]
fn choose(
    inst: &SchedulingInstance,
    preds: &[Vec<usize>],
    slot: usize,
    remaining: usize,
    slots: &mut Vec<usize>,
    ready: &[usize],
    from: usize,
    taken: usize,
    budget: &mut Budget,
) -> Result<bool, SolveError> {
    if taken == inst.machines || from == ready.len() {
        return place(inst, preds, slot + 1, remaining - taken, slots, budget);
    }
    budget.charge(1)?;
    // include ready[from]
    slots[ready[from]] = slot;
    if choose(inst, preds, slot, remaining, slots, ready, from + 1, taken + 1, budget)? {
        return Ok(true);
    }
    slots[ready[from]] = 0;
    // exclude ready[from]
    choose(inst, preds, slot, remaining, slots, ready, from + 1, taken, budget)
}

type Bitset = Vec<u64>;

fn bit(set: &Bitset, i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(set: &mut Bitset, i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

fn structured(inst: &SchedulingInstance, budget: &mut Budget) -> Result<Answer, SolveError> {
    let n = inst.tasks;
    let words = n.div_ceil(64);
    let below = transitive_closure(n, &inst.prec)
        .expect("validation rejects cyclic precedence relations");
    let preds = direct_preds(inst);
    // state: sorted antichain of maximal scheduled tasks; parent links record
    // (previous antichain, tasks moved this slot).
    type Parents = HashMap<Vec<usize>, (Vec<usize>, Vec<usize>)>;
    let mut per_slot: Vec<Parents> = vec![HashMap::new()];
    let mut frontier: Vec<(Vec<usize>, Bitset, usize)> =
        vec![(Vec::new(), vec![0u64; words], 0)];
    for slot in 1..=inst.deadline {
        let mut parents: Parents = HashMap::new();
        let mut next: Vec<(Vec<usize>, Bitset, usize)> = Vec::new();
        for (antichain, done, count) in &frontier {
            if n - count > (inst.deadline - slot + 1) * inst.machines {
                continue; // cannot finish from here
            }
            let ready: Vec<usize> = (0..n)
                .filter(|&t| !bit(done, t) && preds[t].iter().all(|&p| bit(done, p)))
                .collect();
            let mut moves: Vec<Vec<usize>> = Vec::new();
            subsets_upto(&ready, inst.machines, &mut moves, budget)?;
            for mv in moves {
                if mv.is_empty() {
                    continue; // the idle transition is added once, below
                }
                budget.charge(1)?;
                let mut done2 = done.clone();
                for &t in &mv {
                    set_bit(&mut done2, t);
                }
                // new maximal tasks: moved ones plus old maxima with no
                // scheduled successor yet
                let mut anti2: Vec<usize> = mv.clone();
                for &m in antichain {
                    let has_sched_succ = mv.iter().any(|&t| bit(&below[m], t));
                    if !has_sched_succ {
                        anti2.push(m);
                    }
                }
                anti2.sort_unstable();
                if parents.contains_key(&anti2) {
                    continue;
                }
                parents.insert(anti2.clone(), (antichain.clone(), mv.clone()));
                next.push((anti2, done2, count + mv.len()));
            }
            // Idle slot: same antichain carried forward.
            if !parents.contains_key(antichain) {
                parents.insert(antichain.clone(), (antichain.clone(), Vec::new()));
                next.push((antichain.clone(), done.clone(), *count));
            }
        }
        per_slot.push(parents);
        frontier = next;
        if let Some(hit) = frontier.iter().find(|(_, _, count)| *count == n) {
            // Walk parents backwards, assigning slots to moved tasks.
            let mut slots_out = vec![0usize; n];
            let mut key = hit.0.clone();
            for s in (1..=slot).rev() {
                let (prev, moved) = per_slot[s]
                    .get(&key)
                    .expect("parent chain recorded for every reached state")
                    .clone();
                for t in moved {
                    slots_out[t] = s;
                }
                key = prev;
            }
            debug_assert!(slots_out.iter().all(|&s| s != 0));
            return Ok(Answer::yes(Certificate::Schedule { slots: slots_out }));
        }
    }
    Ok(Answer::no())
}

/// All subsets of `ready` with at most `cap` elements.
fn subsets_upto(
    ready: &[usize],
    cap: usize,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<(), SolveError> {
    fn rec(
        ready: &[usize],
        cap: usize,
        from: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: &mut Budget,
    ) -> Result<(), SolveError> {
        budget.charge(1)?;
        out.push(cur.clone());
        if cur.len() == cap {
            return Ok(());
        }
        for i in from..ready.len() {
            cur.push(ready[i]);
            rec(ready, cap, i + 1, cur, out, budget)?;
            cur.pop();
        }
        Ok(())
    }
    rec(ready, cap, 0, &mut Vec::new(), out, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Instance;
    use crate::solvers::DEFAULT_BUDGET;

    fn run_both(inst: &SchedulingInstance) -> Answer {
        let wrapped = Instance::Scheduling(inst.clone());
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

    fn chain3(machines: usize, deadline: usize) -> SchedulingInstance {
        SchedulingInstance {
            parameter: machines + 1,
            machines,
            deadline,
            tasks: 3,
            prec: vec![(0, 1), (1, 2)],
        }
    }

    #[test]
    fn chain_fits_exactly_its_length() {
        let ans = run_both(&chain3(1, 3));
        assert!(ans.decision);
        assert_eq!(ans.certificate, Some(Certificate::Schedule { slots: vec![1, 2, 3] }));
    }

    #[test]
    fn machines_cannot_compress_a_chain() {
        assert!(!run_both(&chain3(3, 2)).decision);
    }

    #[test]
    fn parallel_tasks_share_slots() {
        let inst = SchedulingInstance {
            parameter: 2 + 2,
            machines: 2,
            deadline: 2,
            tasks: 4,
            prec: vec![],
        };
        assert!(run_both(&inst).decision);
        let tight = SchedulingInstance { deadline: 1, parameter: 4 + 2, ..inst };
        assert!(!run_both(&tight).decision);
    }

    #[test]
    fn random_dags_agree_across_modes() {
        let mut state = 0x2b992ddfa23249d6u64;
        let mut rng = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut yes = 0;
        for _ in 0..40 {
            let n = 6usize;
            let mut prec = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng() % 4 == 0 {
                        prec.push((a, b));
                    }
                }
            }
            let machines = 1 + (rng() % 3) as usize;
            let deadline = 2 + (rng() % 4) as usize;
            let width = crate::instances::poset_width(n, &prec).unwrap();
            let inst = SchedulingInstance {
                parameter: machines + width,
                machines,
                deadline,
                tasks: n,
                prec,
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
