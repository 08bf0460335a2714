//! Lowerings from counter machines to scheduling and to path emulation.
//!
//! Both constructions simulate the machine's nondecreasing counters with
//! per-counter chains (of unit tasks, or of weighted path vertices) laid
//! against a global time axis, and turn every check into a local capacity
//! squeeze that overflows exactly when the checked counter pair sits on the
//! rejecting values.

use crate::instances::scheduling::poset_width;
use crate::instances::{
    CounterMachine, Instance, SchedulingInstance, UniformEmulationInstance,
};
use crate::reductions::{constant_map, ReductionError, ReductionOutput};

/// How a check participates in the gadgets. A check naming two distinct
/// counters squeezes through two tasks/vertices; a check naming the same
/// counter twice either tests a single value (`r1 == r2`) or can never fire
/// at all (`r1 != r2` asks one counter for two values at once).
enum CheckShape {
    Pair,
    Single { counter: usize, value: usize },
    Never,
}

fn shape(check: (usize, usize, usize, usize)) -> CheckShape {
    let (c1, c2, r1, r2) = check;
    if c1 != c2 {
        CheckShape::Pair
    } else if r1 == r2 {
        CheckShape::Single { counter: c1, value: r1 }
    } else {
        CheckShape::Never
    }
}

/// Machines whose counters cannot move (`bound == 0`) collapse the gadget
/// geometry: indicator times become adjacent and the capacity argument that
/// keeps the emitted parameter within its declared bound no longer holds.
/// Such machines are degenerate anyway (every check fires or never fires),
/// so both constructions refuse them rather than emit an unsound gadget.
fn require_moving_counters(m: &CounterMachine) -> Result<(), ReductionError> {
    if m.bound == 0 && !m.checks.is_empty() {
        return Err(ReductionError::Unsupported(
            "counter machines with checks need a positive counter bound".into(),
        ));
    }
    Ok(())
}

/// Unit-time scheduling on `2k+1` machines with a hard deadline.
///
/// A full-length chain of `D` time tasks pins one machine per slot. Each
/// counter becomes a chain of `D - n` tasks whose slack (`n` slots) realises
/// the counter value as a running shift. Stage `j` repeats its check at
/// `kn+1` indicator times; filler tasks pinned to an indicator time fill the
/// slot up to one (pair check) or zero (single-value check) spare places, and
/// each checked counter contributes a task locked between its chain
/// neighbours `t - r` — schedulable off the indicator slot exactly when the
/// counter avoids the rejecting value at some repetition every chain can
/// afford to honour.
pub fn to_scheduling(m: &CounterMachine) -> Result<ReductionOutput, ReductionError> {
    require_moving_counters(m)?;
    let k = m.parameter;
    let n = m.bound;
    let r = m.checks.len();
    let machines = 2 * k + 1;
    let c = (k * n + 1) * (n + 1);
    let deadline = c * r + n + 1;
    let chain_len = deadline - n;

    // Tasks are numbered: time chain, indicator fillers, counter chains,
    // check tasks. `a(t)`/`c_task(i, y)` translate 1-based gadget
    // coordinates into ids.
    let a = |t: usize| t - 1;
    let mut prec: Vec<(usize, usize)> = Vec::new();
    for t in 1..deadline {
        prec.push((a(t), a(t + 1)));
    }

    // Indicator times per stage: t = (j-1)c + alpha(n+1) + n + 1.
    let mut indicators: Vec<(usize, usize)> = Vec::new();
    for j in 0..r {
        for alpha in 0..=k * n {
            indicators.push((j, j * c + alpha * (n + 1) + n + 1));
        }
    }

    let mut next = deadline;
    for &(j, t) in &indicators {
        let fillers = match shape(m.checks[j]) {
            // A single-value check must overflow on one task, so its
            // indicator slots carry one more filler than a pair check's.
            CheckShape::Single { .. } => k,
            _ => k - 1,
        };
        for _ in 0..fillers {
            let b = next;
            next += 1;
            if t >= 2 {
                prec.push((a(t - 1), b));
            }
            prec.push((b, a(t + 1)));
        }
    }

    let base = next;
    let c_task = |i: usize, y: usize| base + (i - 1) * chain_len + (y - 1);
    next += k * chain_len;
    for i in 1..=k {
        for y in 1..chain_len {
            prec.push((c_task(i, y), c_task(i, y + 1)));
        }
    }

    for &(j, t) in &indicators {
        let (c1, c2, r1, r2) = m.checks[j];
        let probes: Vec<(usize, usize)> = match shape(m.checks[j]) {
            CheckShape::Pair => vec![(c1, r1), (c2, r2)],
            CheckShape::Single { counter, value } => vec![(counter, value)],
            CheckShape::Never => vec![],
        };
        for (i, value) in probes {
            let tp = t - value;
            let d = next;
            next += 1;
            if tp >= 2 {
                prec.push((c_task(i, tp - 1), d));
            }
            prec.push((d, c_task(i, tp + 1)));
        }
    }

    let tasks = next;
    prec.sort_unstable();
    debug_assert!(prec.windows(2).all(|w| w[0] < w[1]));
    let width = poset_width(tasks, &prec).expect("gadget precedences are acyclic");
    let parameter = machines + width;
    let target = Instance::Scheduling(SchedulingInstance {
        parameter,
        machines,
        deadline,
        tasks,
        prec,
    });
    Ok(ReductionOutput {
        target,
        parameter,
        constants: constant_map([
            ("machines", machines as i64),
            ("c", c as i64),
            ("deadline", deadline as i64),
            ("tasks", tasks as i64),
            ("width", width as i64),
        ]),
    })
}

/// Weight layout for one-counter machines with bound 1 (factor `c == 15`).
///
/// The source path runs `head ++ token ++ floor ++ anti`. The floor holds one
/// vertex per target position: weight 15 on the wall at position 1, weight
/// `15 - u` on interior positions (`u` being the room left for the two moving
/// chains), and weight 0 on the final position `M`, which instead is filled by
/// the weight-15 head. Interior room is `6` at parking cells `4j - 1`, `5` at
/// the two neighbours of a live test, and `4` elsewhere.
///
/// Everything is pinned by adjacency and counting. The head only fits at `M`,
/// so the token's first vertex starts at `M - 1`; the token's last vertex
/// touches the wall's floor vertex, so it ends at position 2. With `M - 1`
/// vertices the token must therefore descend monotonically with exactly one
/// stay. The anti-chain's first vertex touches the floor's zero-weight end,
/// pinning it to `M - 1` too, and since the token alone cannot fill any cell,
/// the anti-chain must also reach position 2, descending with exactly `r`
/// stays. Room parity finishes the job: plain cells take one visit from each
/// chain (2 + 2), parking cells take one extra stay (2 + 2 + 2) — the token's
/// single stay marks the stage where the counter steps up (or the last parking
/// if it never does) and the anti-chain stays at every other parking — and the
/// odd rooms beside a live test can only be filled by a weight-3 landing plus
/// a regular visit.
///
/// For stage `j` testing value `a` at position `s = 4j + 1`, the token carries
/// weight 3 at index `M + 1 - s - a` and the anti-chain at index
/// `M - 1 + r - 5j + a`; with the counter at value `v` they land on
/// `s + (a - v)` and `s - (a - v)`, so both hit the test cell (room 4,
/// overflow) exactly when `v == a`, and otherwise fill the two room-5
/// neighbours. Checks that can never fire add neither landings nor room.
fn single_counter_weights(m: &CounterMachine, len: usize, cap: usize) -> Vec<usize> {
    let r = m.checks.len();
    let mut room = vec![4usize; len + 1];
    room[1] = 0;
    room[len] = cap; // the floor's final vertex weighs 0; the head fills this cell
    for x in 1..=r + 1 {
        room[4 * x - 1] = 6;
    }
    let mut live: Vec<(usize, usize)> = Vec::new();
    for (idx, &check) in m.checks.iter().enumerate() {
        if let CheckShape::Single { value, .. } = shape(check) {
            if value <= m.bound {
                let j = idx + 1;
                live.push((j, value));
                room[4 * j] = 5;
                room[4 * j + 2] = 5;
            }
        }
    }
    let mut weights = Vec::with_capacity(3 * len - 2 + r);
    weights.push(cap);
    let token_base = weights.len();
    weights.extend(std::iter::repeat(2).take(len - 1));
    weights.extend((1..=len).map(|c| cap - room[c]));
    let anti_base = weights.len();
    weights.extend(std::iter::repeat(2).take(len - 2 + r));
    for &(j, value) in &live {
        let s = 4 * j + 1;
        weights[token_base + len - s - value] = 3;
        weights[anti_base + len - 2 + r - 5 * j + value] = 3;
    }
    weights
}

/// Uniform emulation of a weighted path with factor `c`.
///
/// For two or more counters the source path concatenates a floor (one vertex
/// per target position, heavy enough to pin the i-th floor vertex to
/// position i), one component per counter (a light return path, a left
/// turning point of weight `d2`, a main path whose `d1`-weighted vertices
/// encode the checked values, and a right turning point of weight `d3`), and
/// a weight-1 filler path that tops the total up to exactly `M * c`. A
/// counter's value shows up as the offset between its main path and the
/// floor; a check's test position only has room for its `d1` vertices when
/// the counters dodge the rejecting values.
///
/// A single counter is too small for that scheme: its turning point weighs
/// no more than the room a test window must offer, so it cannot be pinned,
/// and the filler can absorb any resulting slack. Machines with one counter
/// instead get the rigid layout of [`single_counter_weights`]: a walled-in
/// floor plus two weight-2 chains, anchored at both ends through the floor's
/// walls, that sweep the interior with a fixed number of stays. Their
/// weight-3 vertices land symmetrically around a test and collide on it
/// (overflowing the exactly-sized cell) precisely when the counter sits on
/// the rejecting value. Every cell is filled exactly, so no free-floating
/// filler exists to paper over a misplaced chain.
pub fn to_uniform_emulation(m: &CounterMachine) -> Result<ReductionOutput, ReductionError> {
    require_moving_counters(m)?;
    let k = m.parameter;
    let n = m.bound;
    let r = m.checks.len();
    let d1 = 3 * k + 2;
    let d2 = k * d1 + 1;
    let d3 = k * d2 + 1;
    let cap = 2 * k * d3 + 1;
    let n0 = 3 * n + 1;
    let len = 1 + (r + 1) * n0;

    if k == 1 {
        let weights = if n == 1 {
            single_counter_weights(m, len, cap)
        } else if m.checks.is_empty() {
            // No checks: any walk works, so a wall-and-sweep layout
            // (trivially emulable) is enough.
            let mut w = vec![cap - 7; len];
            w[0] = cap;
            w[len - 1] = cap;
            w.extend(std::iter::repeat(7).take(len - 2));
            w
        } else {
            return Err(ReductionError::Unsupported(
                "single-counter machines with checks need counter bound exactly one".into(),
            ));
        };
        let total: usize = weights.iter().sum();
        assert_eq!(total, len * cap, "single-counter gadget fills every cell exactly");
        let target = Instance::UniformEmulation(UniformEmulationInstance {
            parameter: cap,
            target_length: len,
            weights,
        });
        return Ok(ReductionOutput {
            target,
            parameter: cap,
            constants: constant_map([
                ("d1", d1 as i64),
                ("d2", d2 as i64),
                ("d3", d3 as i64),
                ("c", cap as i64),
                ("n0", n0 as i64),
                ("m", len as i64),
            ]),
        });
    }

    // Floor weights. For k >= 3 the generic schedule (mids of weight
    // c - 3*d1) pins both turning points of every counter: no interior
    // position has room for a d2. For k == 2 it does not (3*d1 >= d2), so
    // two-counter machines get a tighter schedule: position 2 admits exactly
    // the two return ends plus the two main starts, positions within `n` of
    // a test admit one d1 landing plus the forced unit visits, and every
    // other interior position admits only the forced unit visits. All
    // interior availabilities then stay below d2, which restores the pinning.
    let mut window = vec![false; len + 1];
    if k == 2 {
        for (idx, &check) in m.checks.iter().enumerate() {
            if matches!(shape(check), CheckShape::Never) {
                continue;
            }
            let t = n0 * (idx + 1) + 1;
            for p in t - n..=t + n {
                window[p] = true;
            }
        }
    }
    let plain = if k == 2 { cap - 3 * k - 1 } else { cap - 3 * d1 };

    let mut weights: Vec<usize> = Vec::new();
    weights.push(cap - k * d2);
    for i in 2..len {
        let w = if (i - 1) % n0 == 0 && (1..=r).contains(&((i - 1) / n0)) {
            // Test position of stage j. A pair check overflows on two
            // d1 landings, a single-value check must overflow on one,
            // so the latter's floor vertex is heavier. A check that can
            // never fire lands no d1 at all and needs no test room.
            match shape(m.checks[(i - 1) / n0 - 1]) {
                CheckShape::Single { .. } => cap - d1 - 2 * k + 2,
                CheckShape::Pair => cap - 2 * d1 + 1,
                CheckShape::Never if k == 2 => plain,
                CheckShape::Never => cap - 2 * d1 + 1,
            }
        } else if k == 2 && i == 2 {
            cap - 2 * k
        } else if k == 2 && window[i] {
            cap - d1 - 2 * k
        } else {
            plain
        };
        weights.push(w);
    }
    weights.push(cap - k * d3 - 1);

    // main-path index n0*j + value carries weight d1 when stage j tests
    // this counter for that value.
    let main_len = len - 2 + n;
    let mut heavy = vec![vec![false; main_len + 1]; k + 1];
    for (idx, &(c1, c2, r1, r2)) in m.checks.iter().enumerate() {
        let j = idx + 1;
        match shape(m.checks[idx]) {
            CheckShape::Pair => {
                heavy[c1][n0 * j + r1] = true;
                heavy[c2][n0 * j + r2] = true;
            }
            CheckShape::Single { counter, value } => heavy[counter][n0 * j + value] = true,
            CheckShape::Never => {}
        }
    }
    for marks in heavy.iter().skip(1) {
        for _ in 0..len - 2 {
            weights.push(1);
        }
        weights.push(d2);
        for i in 1..=main_len {
            weights.push(if marks[i] { d1 } else { 1 });
        }
        weights.push(d3);
    }

    let total: usize = weights.iter().sum();
    let goal = len * cap;
    assert!(total <= goal, "gadget weight stays within the load budget");
    weights.resize(goal - total + weights.len(), 1);

    let target = Instance::UniformEmulation(UniformEmulationInstance {
        parameter: cap,
        target_length: len,
        weights,
    });
    Ok(ReductionOutput {
        target,
        parameter: cap,
        constants: constant_map([
            ("d1", d1 as i64),
            ("d2", d2 as i64),
            ("d3", d3 as i64),
            ("c", cap as i64),
            ("n0", n0 as i64),
            ("m", len as i64),
        ]),
    })
}
