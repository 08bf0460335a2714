//! Reductions out of the timed cellular automaton problems: flavor
//! conversion by time annotation, and the satisfiability encoding of runs.

use crate::instances::cnf::canonical_clause_set;
use crate::instances::{CaFlavor, CellularAutomaton, ChainedCnf, Instance};

use super::{constant_map, ReductionError, ReductionOutput};

/// Rebuild an all-accepting automaton as a non-halting one: interior states
/// become (state, time) pairs so every cell counts steps in lockstep, and one
/// extra step moves every accepting cell into a sink state `s_a`. A run of
/// the target survives `time + 1` steps exactly when some run of the source
/// ends after `time` steps with every interior cell accepting.
pub fn annotate_time(ca: &CellularAutomaton) -> Result<ReductionOutput, ReductionError> {
    if ca.flavor != CaFlavor::AllAccepting {
        return Err(ReductionError::Unsupported(
            "time annotation starts from the all-accepting flavor".into(),
        ));
    }
    let t = ca.time;
    let levels = t + 1;
    let interior: Vec<usize> = (0..ca.states).filter(|&s| !ca.is_boundary_state(s)).collect();
    let boundary = if ca.s_l == ca.s_r { 1 } else { 2 };
    let annot = |s: usize, tp: usize| {
        boundary + interior.binary_search(&s).expect("interior state") * levels + tp
    };
    let s_a = boundary + interior.len() * levels;
    let new_sl = 0;
    let new_sr = boundary - 1;
    let enc = |s: usize, tp: usize| {
        if s == ca.s_l {
            new_sl
        } else if s == ca.s_r {
            new_sr
        } else {
            annot(s, tp)
        }
    };

    let mut transitions: Vec<[usize; 4]> = Vec::new();
    for tp in 0..t {
        for z in &ca.transitions {
            transitions.push([enc(z[0], tp), annot(z[1], tp), enc(z[2], tp), annot(z[3], tp + 1)]);
        }
    }
    // Final step: a cell whose source state is accepting may retire to the
    // sink next to any states that can occur at the last annotated time.
    let mut level_t = vec![new_sl];
    if new_sr != new_sl {
        level_t.push(new_sr);
    }
    level_t.extend(interior.iter().map(|&s| annot(s, t)));
    for &s in &ca.accepting {
        if ca.is_boundary_state(s) {
            continue;
        }
        for &x in &level_t {
            for &y in &level_t {
                transitions.push([x, annot(s, t), y, s_a]);
            }
        }
    }
    transitions.sort_unstable();
    transitions.dedup();

    let mut initial = vec![new_sl];
    for &c in &ca.initial[1..ca.parameter - 1] {
        initial.push(annot(c, 0));
    }
    initial.push(new_sr);

    let states = s_a + 1;
    let target = CellularAutomaton {
        parameter: ca.parameter,
        states,
        s_l: new_sl,
        s_r: new_sr,
        transitions,
        accepting: vec![s_a],
        initial,
        time: t + 1,
        flavor: CaFlavor::NonHalting,
    };
    Ok(ReductionOutput {
        target: Instance::CellularAutomaton(target),
        parameter: ca.parameter,
        constants: constant_map([("states", states as i64), ("time", (t + 1) as i64)]),
    })
}

/// Encode runs of an at-least-one-accepting automaton as a chained CNF
/// formula. Block `t'` carries a variable per (cell, state) pair plus, for
/// each interior cell, one per transition; exactly one variable per group is
/// true, naming the cell's state at time `t'` and the transition it applies
/// next. Clause families: at least one state per cell, at least one
/// transition per interior cell, the initial configuration as units, an
/// accepting interior cell at the last time, boundary pinning units, cause
/// clauses (a state at time `t'` needs a producing transition at `t'-1`) and
/// consistency clauses (a selected transition matches its neighborhood).
pub fn to_chained_sat(ca: &CellularAutomaton) -> Result<ReductionOutput, ReductionError> {
    if ca.flavor != CaFlavor::AtLeastOneAccepting {
        return Err(ReductionError::Unsupported(
            "the run encoding starts from the at-least-one-accepting flavor".into(),
        ));
    }
    let q = ca.parameter;
    let ns = ca.states;
    let tn = ca.transitions.len();
    let t = ca.time;
    let blocks = t + 1;
    // With no transitions there are no selector groups to fill; the encoding
    // degrades to the x-variables alone (the empty at-least-one-transition
    // clauses then make the target unsatisfiable, matching a machine that
    // halts at its first step). q = 2 has no interior cells at all, where
    // 2q-2 = q anyway.
    let has_y = tn > 0 && q >= 3;
    let block_size = q * ns + if has_y { (q - 2) * tn } else { 0 };
    let weight = if has_y { 2 * q - 2 } else { q };

    let mut partition = Vec::with_capacity(block_size);
    for r in 0..q {
        partition.extend(std::iter::repeat(r).take(ns));
    }
    if has_y {
        for r in 0..q - 2 {
            partition.extend(std::iter::repeat(q + r).take(tn));
        }
    }

    let var = |b: usize, pos: usize| (b * block_size + pos + 1) as i64;
    let xv = |b: usize, r: usize, s: usize| var(b, (r - 1) * ns + s);
    let yv = |b: usize, r: usize, zi: usize| var(b, q * ns + (r - 2) * tn + zi);
    // clause set index for constraints living inside block `b`
    let within = |b: usize| b.min(t - 1);

    let mut sets: Vec<Vec<Vec<i64>>> = vec![Vec::new(); t];
    for b in 0..blocks {
        for r in 1..=q {
            sets[within(b)].push((0..ns).map(|s| xv(b, r, s)).collect());
        }
        for r in 2..q {
            sets[within(b)].push((0..tn).map(|zi| yv(b, r, zi)).collect());
        }
        sets[within(b)].push(vec![xv(b, 1, ca.s_l)]);
        sets[within(b)].push(vec![xv(b, q, ca.s_r)]);
    }
    for r in 1..=q {
        sets[0].push(vec![xv(0, r, ca.initial[r - 1])]);
    }
    let mut accept = Vec::new();
    for r in 2..q {
        for &s in &ca.accepting {
            if !ca.is_boundary_state(s) {
                accept.push(xv(t, r, s));
            }
        }
    }
    sets[within(t)].push(accept);
    for b in 1..blocks {
        for r in 2..q {
            for s in 0..ns {
                let mut clause = vec![-xv(b, r, s)];
                clause.extend(
                    ca.transitions
                        .iter()
                        .enumerate()
                        .filter(|(_, z)| z[3] == s)
                        .map(|(zi, _)| yv(b - 1, r, zi)),
                );
                sets[b - 1].push(clause);
            }
        }
    }
    for b in 0..t {
        for r in 2..q {
            for (zi, z) in ca.transitions.iter().enumerate() {
                sets[within(b)].push(vec![-yv(b, r, zi), xv(b, r - 1, z[0])]);
                sets[within(b)].push(vec![-yv(b, r, zi), xv(b, r, z[1])]);
                sets[within(b)].push(vec![-yv(b, r, zi), xv(b, r + 1, z[2])]);
            }
        }
    }

    let target = ChainedCnf {
        parameter: weight,
        blocks,
        block_size,
        positive: false,
        partition: Some(partition),
        clauses: sets.into_iter().map(canonical_clause_set).collect(),
    };
    Ok(ReductionOutput {
        target: Instance::ChainedCnf(target),
        parameter: weight,
        constants: constant_map([
            ("block_size", block_size as i64),
            ("blocks", blocks as i64),
            ("weight", weight as i64),
        ]),
    })
}
