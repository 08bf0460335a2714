//! Rewrites between chained CNF dialects: removing negative literals under
//! exactly-one groups, and folding boundary formulas into the repeated
//! junction template with position trackers.

use crate::instances::cnf::canonical_clause_set;
use crate::instances::{ChainedCnf, Instance, RegularBoundaryCnf};

use super::{constant_map, ReductionError, ReductionOutput};

/// Replace every negative literal by the disjunction of the other variables
/// of its exactly-one group: under the partition semantics "x is false" and
/// "some other member of x's group is true" coincide. Works on the flat and
/// the boundary-formula forms alike, preserving the form. A negative literal
/// on a singleton group rewrites to the empty disjunction, i.e. it is
/// dropped (the variable is forced true, so the literal can never hold).
pub fn positivize(inst: &Instance) -> Result<ReductionOutput, ReductionError> {
    match inst {
        Instance::ChainedCnf(c) => {
            let Some(part) = &c.partition else {
                return Err(ReductionError::Unsupported(
                    "positivization requires exactly-one groups".into(),
                ));
            };
            let mut rewritten = 0i64;
            let clauses = c
                .clauses
                .iter()
                .map(|set| {
                    canonical_clause_set(
                        set.iter()
                            .map(|cl| {
                                // a global variable's replacements live in its own block
                                rewrite_clause(cl, part, &mut rewritten, |v| {
                                    (c.pos_of(v), c.block_of(v) * c.block_size)
                                })
                            })
                            .collect(),
                    )
                })
                .collect();
            let target = ChainedCnf { positive: true, clauses, ..c.clone() };
            Ok(ReductionOutput {
                target: Instance::ChainedCnf(target),
                parameter: c.parameter,
                constants: constant_map([("rewritten_literals", rewritten)]),
            })
        }
        Instance::RegularChainedCnf(r) => {
            let Some(part) = &r.partition else {
                return Err(ReductionError::Unsupported(
                    "positivization requires exactly-one groups".into(),
                ));
            };
            let q = r.block_size;
            let mut rewritten = 0i64;
            // junction formulas address the right block as q+1..=2q
            let locate = |v: usize| if v > q { (v - q - 1, q) } else { (v - 1, 0) };
            let mut fix = |set: &[Vec<i64>]| {
                canonical_clause_set(
                    set.iter()
                        .map(|cl| rewrite_clause(cl, part, &mut rewritten, locate))
                        .collect(),
                )
            };
            let f0 = fix(&r.f0);
            let f1 = fix(&r.f1);
            let f2 = fix(&r.f2);
            let target = RegularBoundaryCnf { positive: true, f0, f1, f2, ..r.clone() };
            Ok(ReductionOutput {
                target: Instance::RegularChainedCnf(target),
                parameter: r.parameter,
                constants: constant_map([("rewritten_literals", rewritten)]),
            })
        }
        other => Err(ReductionError::WrongKind {
            id: "cnf-positivize".into(),
            expected: "chained-cnf",
            got: other.kind(),
        }),
    }
}

/// Rewrite one clause. `locate` maps a variable index to its position within
/// the partition and the variable-index base of its block (side), so that a
/// group partner at position `p` is variable `base + p + 1`. The rewritten
/// literals are all positive; duplicates are cleaned up by canonicalization.
fn rewrite_clause(
    clause: &[i64],
    part: &[usize],
    rewritten: &mut i64,
    locate: impl Fn(usize) -> (usize, usize),
) -> Vec<i64> {
    let mut out = Vec::with_capacity(clause.len());
    for &lit in clause {
        if lit > 0 {
            out.push(lit);
            continue;
        }
        *rewritten += 1;
        let (p, base) = locate(lit.unsigned_abs() as usize);
        for p2 in 0..part.len() {
            if part[p2] == part[p] && p2 != p {
                out.push((base + p2 + 1) as i64);
            }
        }
    }
    out
}

/// Fold the boundary formulas of a regular instance into the junction
/// template. Each block gains `blocks` tracker variables, of which exactly
/// one is true; clauses chain tracker j of a block to tracker j+1 of the
/// next, so block i can only carry tracker i. The first-block formula is
/// guarded by tracker 1 on the junction's left block, the last-block formula
/// by the last tracker on its right block. The weight grows by one.
pub fn regularize_ii(r: &RegularBoundaryCnf) -> Result<ReductionOutput, ReductionError> {
    if r.blocks < 2 {
        return Err(ReductionError::Unsupported(
            "tracker chains need at least two blocks".into(),
        ));
    }
    let q = r.block_size;
    let rb = r.blocks;
    let q_new = q + rb;
    // junction literal layout: left block 1..=q_new, right q_new+1..=2q_new
    let left_tracker = |j: usize| (q + j) as i64; // j is 1-based
    let right_tracker = |j: usize| (q_new + q + j) as i64;
    let map_right = |lit: i64| {
        let moved = (q_new + lit.unsigned_abs() as usize) as i64;
        if lit > 0 {
            moved
        } else {
            -moved
        }
    };

    let mut f1: Vec<Vec<i64>> = Vec::new();
    for cl in &r.f1 {
        f1.push(
            cl.iter()
                .map(|&lit| {
                    let v = lit.unsigned_abs() as usize;
                    if v > q {
                        // shift right-block literals past the new trackers
                        let moved = (v + rb) as i64;
                        if lit > 0 {
                            moved
                        } else {
                            -moved
                        }
                    } else {
                        lit
                    }
                })
                .collect(),
        );
    }
    // some tracker is true in both touched blocks
    f1.push((1..=rb).map(left_tracker).collect());
    f1.push((1..=rb).map(right_tracker).collect());
    // trackers advance by exactly one per block
    for j in 1..rb {
        f1.push(vec![-left_tracker(j), right_tracker(j + 1)]);
        f1.push(vec![left_tracker(j), -right_tracker(j + 1)]);
    }
    // no block starts the chain late or ends it early
    f1.push(vec![-right_tracker(1)]);
    f1.push(vec![-left_tracker(rb)]);
    for cl in &r.f0 {
        let mut guarded = vec![-left_tracker(1)];
        guarded.extend_from_slice(cl);
        f1.push(guarded);
    }
    for cl in &r.f2 {
        let mut guarded = vec![-right_tracker(rb)];
        guarded.extend(cl.iter().map(|&lit| map_right(lit)));
        f1.push(guarded);
    }

    let partition = r.partition.as_ref().map(|p| {
        let mut out = p.clone();
        out.extend(std::iter::repeat(r.parameter).take(rb));
        out
    });
    let target = RegularBoundaryCnf {
        parameter: r.parameter + 1,
        blocks: rb,
        block_size: q_new,
        positive: false,
        partition,
        f0: Vec::new(),
        f1: canonical_clause_set(f1),
        f2: Vec::new(),
    };
    Ok(ReductionOutput {
        target: Instance::RegularChainedCnf(target),
        parameter: r.parameter + 1,
        constants: constant_map([
            ("trackers", rb as i64),
            ("block_size", q_new as i64),
            ("weight", (r.parameter + 1) as i64),
        ]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{solve, SolveMode, DEFAULT_BUDGET};

    fn decide_both(inst: &Instance) -> bool {
        let e = solve(inst, SolveMode::Exhaustive, DEFAULT_BUDGET).unwrap().decision;
        let s = solve(inst, SolveMode::Structured, DEFAULT_BUDGET).unwrap().decision;
        assert_eq!(e, s, "modes disagree on {}", inst.kind());
        e
    }

    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    /// Random clause over variables `lo+1..=lo+span`, no repeated variable.
    fn random_clause(state: &mut u64, lo: usize, span: usize, len: u64) -> Vec<i64> {
        let mut clause: Vec<i64> = Vec::new();
        for _ in 0..len {
            let v = (lo + 1 + (xorshift(state) as usize) % span) as i64;
            if clause.iter().any(|l| l.unsigned_abs() == v.unsigned_abs()) {
                continue;
            }
            clause.push(if xorshift(state) % 2 == 0 { v } else { -v });
        }
        clause
    }

    #[test]
    fn negative_literal_becomes_the_rest_of_its_group() {
        let cnf = ChainedCnf {
            parameter: 2,
            blocks: 1,
            block_size: 4,
            positive: false,
            partition: Some(vec![0, 0, 0, 1]),
            clauses: vec![vec![vec![-1, 4]]],
        };
        let out = positivize(&Instance::ChainedCnf(cnf.clone())).unwrap();
        let Instance::ChainedCnf(target) = &out.target else { panic!() };
        assert_eq!(target.clauses, vec![vec![vec![2, 3, 4]]]);
        assert!(target.positive);
        assert_eq!(out.constants["rewritten_literals"], 1);
        assert!(out.target.validate().is_empty());
        assert_eq!(decide_both(&Instance::ChainedCnf(cnf)), decide_both(&out.target));
    }

    #[test]
    fn all_positive_input_is_unchanged() {
        let cnf = ChainedCnf {
            parameter: 1,
            blocks: 2,
            block_size: 2,
            positive: true,
            partition: Some(vec![0, 0]),
            clauses: vec![vec![vec![1, 4]]],
        };
        let out = positivize(&Instance::ChainedCnf(cnf.clone())).unwrap();
        let Instance::ChainedCnf(target) = &out.target else { panic!() };
        assert_eq!(target.clauses, cnf.clauses);
        assert_eq!(out.constants["rewritten_literals"], 0);
    }

    #[test]
    fn singleton_group_negation_drops_the_literal() {
        // group 1 = {position 1}: its variable is forced true, so a clause
        // of just its negation becomes empty and the instance unsatisfiable
        let cnf = ChainedCnf {
            parameter: 2,
            blocks: 1,
            block_size: 2,
            positive: false,
            partition: Some(vec![0, 1]),
            clauses: vec![vec![vec![-2]]],
        };
        let out = positivize(&Instance::ChainedCnf(cnf.clone())).unwrap();
        let Instance::ChainedCnf(target) = &out.target else { panic!() };
        assert_eq!(target.clauses, vec![vec![Vec::<i64>::new()]]);
        assert!(!decide_both(&Instance::ChainedCnf(cnf)));
        assert!(!decide_both(&out.target));
    }

    #[test]
    fn positivize_requires_a_partition() {
        let cnf = ChainedCnf {
            parameter: 1,
            blocks: 1,
            block_size: 2,
            positive: false,
            partition: None,
            clauses: vec![vec![vec![-1]]],
        };
        let err = positivize(&Instance::ChainedCnf(cnf)).unwrap_err();
        assert!(err.to_string().contains("exactly-one groups"));
    }

    #[test]
    fn positivize_keeps_the_boundary_form() {
        let reg = RegularBoundaryCnf {
            parameter: 1,
            blocks: 3,
            block_size: 2,
            positive: false,
            partition: Some(vec![0, 0]),
            f0: vec![vec![1]],
            f1: vec![vec![-1, 4], vec![2, -3]],
            f2: vec![vec![-2]],
        };
        let out = positivize(&Instance::RegularChainedCnf(reg.clone())).unwrap();
        let Instance::RegularChainedCnf(target) = &out.target else { panic!() };
        assert!(target.positive);
        assert_eq!(target.f0, vec![vec![1]]);
        // -1 -> 2 (left partner), -3 -> 4 (right partner): both clauses collapse
        assert_eq!(target.f1, vec![vec![2, 4]]);
        assert_eq!(target.f2, vec![vec![1]]);
        assert_eq!(out.constants["rewritten_literals"], 3);
        assert!(out.target.validate().is_empty());
        assert_eq!(
            decide_both(&Instance::RegularChainedCnf(reg)),
            decide_both(&out.target)
        );
    }

    #[test]
    fn positivize_agrees_on_random_partitioned_instances() {
        let mut state = 0x3c6ef372fe94f82bu64;
        let mut yes = 0;
        for draw in 0..60u64 {
            let blocks = 1 + (xorshift(&mut state) % 3) as usize;
            let groups = 1 + (xorshift(&mut state) % 2) as usize;
            let mut partition = Vec::new();
            for g in 0..groups {
                let size = 1 + (xorshift(&mut state) % 2) as usize;
                partition.extend(std::iter::repeat(g).take(size));
            }
            let block_size = partition.len();
            let sets = if blocks <= 1 { 1 } else { blocks - 1 };
            let clauses: Vec<Vec<Vec<i64>>> = (0..sets)
                .map(|j| {
                    let span = if blocks == 1 { block_size } else { 2 * block_size };
                    let n = xorshift(&mut state) % 3;
                    canonical_clause_set(
                        (0..n)
                            .map(|_| {
                                let len = 1 + xorshift(&mut state) % 2;
                                random_clause(&mut state, j * block_size, span, len)
                            })
                            .collect(),
                    )
                })
                .collect();
            let cnf = ChainedCnf {
                parameter: groups,
                blocks,
                block_size,
                positive: false,
                partition: Some(partition),
                clauses,
            };
            let inst = Instance::ChainedCnf(cnf);
            assert!(inst.validate().is_empty(), "draw {draw}: {:?}", inst.validate());
            let out = positivize(&inst).unwrap();
            assert!(out.target.validate().is_empty());
            let before = decide_both(&inst);
            assert_eq!(before, decide_both(&out.target), "draw {draw}");
            yes += usize::from(before);
        }
        assert!(yes > 5, "want satisfiable draws, got {yes}");
    }

    #[test]
    fn tracker_fold_freezes_the_layout() {
        let reg = RegularBoundaryCnf {
            parameter: 1,
            blocks: 3,
            block_size: 2,
            positive: true,
            partition: Some(vec![0, 0]),
            f0: vec![vec![1]],
            f1: vec![vec![1, 3]],
            f2: vec![vec![2]],
        };
        let out = regularize_ii(&reg).unwrap();
        assert_eq!(out.constants["trackers"], 3);
        assert_eq!(out.constants["block_size"], 5); // q + blocks
        assert_eq!(out.constants["weight"], 2);
        assert_eq!(out.parameter, 2);
        let Instance::RegularChainedCnf(target) = &out.target else { panic!() };
        assert!(target.f0.is_empty() && target.f2.is_empty());
        assert_eq!(target.partition.as_deref().unwrap(), &[0, 0, 1, 1, 1]);
        assert!(out.target.validate().is_empty());
        assert!(decide_both(&Instance::RegularChainedCnf(reg)));
        assert!(decide_both(&out.target));
    }

    #[test]
    fn tracker_fold_preserves_boundary_unsatisfiability() {
        // f2 demands both variables of an exactly-one group: never satisfiable
        let reg = RegularBoundaryCnf {
            parameter: 1,
            blocks: 2,
            block_size: 2,
            positive: true,
            partition: Some(vec![0, 0]),
            f0: Vec::new(),
            f1: vec![vec![1, 2, 3, 4]],
            f2: vec![vec![1], vec![2]],
        };
        let out = regularize_ii(&reg).unwrap();
        assert!(out.target.validate().is_empty());
        assert!(!decide_both(&Instance::RegularChainedCnf(reg)));
        assert!(!decide_both(&out.target));
    }

    #[test]
    fn tracker_fold_agrees_on_random_boundary_instances() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut yes = 0;
        for draw in 0..60u64 {
            let blocks = 2 + (xorshift(&mut state) % 2) as usize;
            let q = 1 + (xorshift(&mut state) % 2) as usize;
            let k = 1 + (xorshift(&mut state) as usize) % q;
            let mut boundary_sets = Vec::new();
            for span in [q, 2 * q, q] {
                let n = xorshift(&mut state) % 2 + u64::from(draw % 2 == 0);
                boundary_sets.push(canonical_clause_set(
                    (0..n)
                        .map(|_| {
                            let len = 1 + xorshift(&mut state) % 2;
                            random_clause(&mut state, 0, span, len)
                        })
                        .collect(),
                ));
            }
            let f2 = boundary_sets.pop().unwrap();
            let f1 = boundary_sets.pop().unwrap();
            let f0 = boundary_sets.pop().unwrap();
            let reg = RegularBoundaryCnf {
                parameter: k,
                blocks,
                block_size: q,
                positive: false,
                partition: None,
                f0,
                f1,
                f2,
            };
            let inst = Instance::RegularChainedCnf(reg.clone());
            assert!(inst.validate().is_empty(), "draw {draw}: {:?}", inst.validate());
            let out = regularize_ii(&reg).unwrap();
            assert!(out.target.validate().is_empty());
            let before = decide_both(&inst);
            assert_eq!(before, decide_both(&out.target), "draw {draw}: {reg:?}");
            yes += usize::from(before);
        }
        assert!(yes > 5, "want satisfiable draws, got {yes}");
    }

    #[test]
    fn tracker_fold_needs_a_junction() {
        let reg = RegularBoundaryCnf {
            parameter: 1,
            blocks: 1,
            block_size: 1,
            positive: true,
            partition: None,
            f0: vec![vec![1]],
            f1: Vec::new(),
            f2: Vec::new(),
        };
        assert!(matches!(regularize_ii(&reg), Err(ReductionError::Unsupported(_))));
    }
}
