//! Reductions on layered colored graphs: the partial complement that swaps
//! chained multicolored clique and independent set, and the encoding of
//! chained multicolored clique as an accepting run of a nondecreasing
//! counter machine.

use std::collections::BTreeSet;

use crate::instances::{CounterMachine, Instance, LayeredColoredGraph};

use super::{constant_map, ReductionError, ReductionOutput};

/// Complement a layered graph over the pairs that matter: distinct vertices
/// at layer distance at most one. Cliques in the input are exactly the
/// independent sets of the output and vice versa, so the wrapped problem
/// flips between chained clique and chained independent set.
pub fn partial_complement(inst: &Instance) -> Result<ReductionOutput, ReductionError> {
    let (g, to_clique) = match inst {
        Instance::ChainedClique(g) => (g, false),
        Instance::ChainedIndependentSet(g) => (g, true),
        other => {
            return Err(ReductionError::WrongKind {
                id: "cmc-partial-complement".into(),
                expected: "chained-clique or chained-independent-set",
                got: other.kind(),
            })
        }
    };
    let present: BTreeSet<(usize, usize)> = g.edges.iter().copied().collect();
    let mut edges = Vec::new();
    for a in 0..g.n {
        for b in a + 1..g.n {
            if g.layer_of[a].abs_diff(g.layer_of[b]) <= 1 && !present.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    let flipped = edges.len() as i64;
    let target = LayeredColoredGraph { edges, ..g.clone() };
    Ok(ReductionOutput {
        parameter: target.parameter,
        constants: constant_map([("edges", flipped)]),
        target: if to_clique {
            Instance::ChainedClique(target)
        } else {
            Instance::ChainedIndependentSet(target)
        },
    })
}

/// Compile chained multicolored clique into a nondecreasing counter machine
/// with `4k` counters.
///
/// Layers are first evened out: an odd layer count gains one fully
/// compatible layer (complete internally and toward the previous layer), and
/// every (layer, color) class is padded with isolated vertices to a common
/// size `m`. Counter pair `(c+, c-)` of a color then walks up the value line
/// in stages; the stage-`j` selection checks pin the pair to `(jm+l,
/// (j+1)m+1-l)` for a unique `l`, which names the `l`-th class vertex
/// placed into the clique. Between the selection checks, one check per
/// missing edge rejects any run whose pinned vertices are not adjacent.
pub fn to_nnccm(g: &LayeredColoredGraph) -> Result<ReductionOutput, ReductionError> {
    let k = g.parameter;
    let classes0 = g.classes();
    let m = classes0
        .iter()
        .flat_map(|row| row.iter().map(Vec::len))
        .max()
        .unwrap_or(0)
        .max(1);

    // Padded working copy: ids above g.n are padding.
    let mut layers = g.layers;
    let mut n = g.n;
    let mut layer_of = g.layer_of.clone();
    let mut color_of = g.color_of.clone();
    let mut edges: BTreeSet<(usize, usize)> = g.edges.iter().copied().collect();
    if layers % 2 == 1 {
        let last: Vec<usize> =
            (0..g.n).filter(|&v| g.layer_of[v] + 1 == layers).collect();
        let first_new = n;
        for color in 0..k {
            for _ in 0..m {
                layer_of.push(layers);
                color_of.push(color);
                for &v in &last {
                    edges.insert((v, n));
                }
                for w in first_new..n {
                    edges.insert((w, n));
                }
                n += 1;
            }
        }
        layers += 1;
    }
    for layer in 0..layers {
        for color in 0..k {
            let have = (0..n)
                .filter(|&v| layer_of[v] == layer && color_of[v] == color)
                .count();
            for _ in have..m {
                layer_of.push(layer);
                color_of.push(color);
                n += 1;
            }
        }
    }
    let mut classes = vec![vec![Vec::new(); k]; layers];
    for v in 0..n {
        classes[layer_of[v]][color_of[v]].push(v);
    }

    let bound = m * (layers + 1);
    // 1-based counter ids: four per color, keyed by stage parity and role.
    let up = |color: usize, parity: usize| 1 + 4 * color + 2 * parity;
    let down = |color: usize, parity: usize| 2 + 4 * color + 2 * parity;

    let mut checks: Vec<(usize, usize, usize, usize)> = Vec::new();
    let selection = |checks: &mut Vec<(usize, usize, usize, usize)>, j: usize| {
        let par = j % 2;
        for color in 0..k {
            let (c1, c2) = (up(color, par), down(color, par));
            // Sweeping the reject region up to and *including* jm is what
            // pins the pair inside the stage window [jm+1, (j+1)m]; stopping
            // at jm-1 would let both counters park at jm and skip selecting
            // a vertex altogether.
            for r1 in 0..=j * m {
                for r2 in 0..=bound {
                    checks.push((c1, c2, r1, r2));
                }
            }
            for r1 in 0..=bound {
                for r2 in 0..=j * m {
                    checks.push((c1, c2, r1, r2));
                }
            }
            for l in 1..=m {
                let partner = (j + 1) * m + 1 - l;
                for r2 in j * m..=(j + 1) * m {
                    if r2 != partner {
                        checks.push((c1, c2, j * m + l, r2));
                    }
                }
            }
            for r1 in (j + 1) * m + 1..=bound {
                for r2 in 0..=bound {
                    checks.push((c1, c2, r1, r2));
                }
            }
            for r1 in 0..=bound {
                for r2 in (j + 1) * m + 1..=bound {
                    checks.push((c1, c2, r1, r2));
                }
            }
        }
    };

    let slot = |classes: &Vec<Vec<Vec<usize>>>, layer: usize, v: usize| {
        classes[layer][color_of[v]].iter().position(|&u| u == v).unwrap() + 1
    };
    for j in 1..=layers {
        let par = j % 2;
        selection(&mut checks, j);
        let here = j - 1;
        for ci in 0..k {
            for cj in ci + 1..k {
                for &u in &classes[here][ci] {
                    for &v in &classes[here][cj] {
                        let key = (u.min(v), u.max(v));
                        if !edges.contains(&key) {
                            checks.push((
                                up(ci, par),
                                up(cj, par),
                                j * m + slot(&classes, here, u),
                                j * m + slot(&classes, here, v),
                            ));
                        }
                    }
                }
            }
        }
        if j > 1 {
            let prev = j - 2;
            for ci in 0..k {
                for &u in &classes[here][ci] {
                    for cj in 0..k {
                        for &v in &classes[prev][cj] {
                            let key = (u.min(v), u.max(v));
                            if !edges.contains(&key) {
                                checks.push((
                                    up(ci, par),
                                    up(cj, 1 - par),
                                    j * m + slot(&classes, here, u),
                                    (j - 1) * m + slot(&classes, prev, v),
                                ));
                            }
                        }
                    }
                }
            }
        }
        selection(&mut checks, j);
        if j > 1 {
            selection(&mut checks, j - 1);
        }
    }

    let total = checks.len() as i64;
    let machine = CounterMachine { parameter: 4 * k, bound, checks };
    Ok(ReductionOutput {
        parameter: machine.parameter,
        constants: constant_map([
            ("counters", 4 * k as i64),
            ("m", m as i64),
            ("bound", bound as i64),
            ("layers", layers as i64),
            ("checks", total),
        ]),
        target: Instance::CounterMachine(machine),
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

    /// Emitted machines carry hundreds of checks; only the layered
    /// reachability sweep stays in budget there, so targets are decided in
    /// structured mode (mode agreement is covered on small machines).
    fn decide_machine(inst: &Instance, budget: u64) -> bool {
        solve(inst, SolveMode::Structured, budget).unwrap().decision
    }

    fn xorshift(state: &mut u64) -> u64 {
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        *state
    }

    fn layered(k: usize, sizes: &[usize], edges: Vec<(usize, usize)>) -> LayeredColoredGraph {
        let mut layer_of = Vec::new();
        let mut color_of = Vec::new();
        for (l, &s) in sizes.iter().enumerate() {
            for v in 0..s {
                layer_of.push(l);
                color_of.push(v % k);
            }
        }
        let g = LayeredColoredGraph {
            parameter: k,
            layers: sizes.len(),
            n: layer_of.len(),
            layer_of,
            color_of,
            edges,
        };
        let mut errs = Vec::new();
        g.validate_into(&mut errs);
        assert!(errs.is_empty(), "bad fixture: {errs:?}");
        g
    }

    #[test]
    fn complement_is_an_involution_on_near_pairs() {
        let g = layered(2, &[2, 2], vec![(0, 1), (1, 2)]);
        let once = partial_complement(&Instance::ChainedClique(g.clone())).unwrap();
        let twice = partial_complement(&once.target).unwrap();
        let Instance::ChainedClique(back) = &twice.target else { panic!() };
        assert_eq!(back.edges, g.edges);
        assert!(once.target.validate().is_empty());
    }

    #[test]
    fn clique_and_complemented_independent_set_agree() {
        let g = layered(2, &[2, 2], vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let src = Instance::ChainedClique(g);
        let out = partial_complement(&src).unwrap();
        assert!(matches!(out.target, Instance::ChainedIndependentSet(_)));
        assert!(decide_both(&src));
        assert!(decide_both(&out.target));
    }

    #[test]
    fn edgeless_two_layer_graph_stays_no_after_complement() {
        let g = layered(1, &[1, 1], vec![]);
        let src = Instance::ChainedClique(g);
        let out = partial_complement(&src).unwrap();
        assert!(!decide_both(&src));
        assert!(!decide_both(&out.target));
    }

    #[test]
    fn random_layered_graphs_flip_between_the_two_problems() {
        let mut state = 0x1a7e_23d5_u64;
        let mut yes = 0;
        for _ in 0..40 {
            let k = 1 + (xorshift(&mut state) as usize) % 2;
            let layers = 1 + (xorshift(&mut state) as usize) % 3;
            let sizes: Vec<usize> =
                (0..layers).map(|_| k * (1 + (xorshift(&mut state) as usize) % 2)).collect();
            let shell = layered(k, &sizes, vec![]);
            let mut edges = Vec::new();
            for a in 0..shell.n {
                for b in a + 1..shell.n {
                    if shell.layer_of[a].abs_diff(shell.layer_of[b]) <= 1
                        && xorshift(&mut state) % 2 == 0
                    {
                        edges.push((a, b));
                    }
                }
            }
            let g = LayeredColoredGraph { edges, ..shell };
            let src = Instance::ChainedClique(g);
            let out = partial_complement(&src).unwrap();
            assert!(out.target.validate().is_empty());
            let want = decide_both(&src);
            assert_eq!(want, decide_both(&out.target));
            yes += usize::from(want);
        }
        assert!(yes > 5, "random stream should see chained cliques");
    }

    #[test]
    fn counter_encoding_constants_and_first_check() {
        let g = layered(1, &[2, 2], vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let out = to_nnccm(&g).unwrap();
        let Instance::CounterMachine(mc) = &out.target else { panic!() };
        assert_eq!(out.constants["counters"], 4);
        assert_eq!(out.constants["m"], 2);
        assert_eq!(out.constants["bound"], 6);
        assert_eq!(out.constants["layers"], 2);
        assert_eq!(mc.parameter, 4);
        // stage 1 uses the odd-parity pair (counters 3 and 4); the first
        // sweep forbids values below the stage window
        assert_eq!(mc.checks[0], (3, 4, 0, 0));
        assert!(out.target.validate().is_empty());
    }

    #[test]
    fn fully_cross_wired_layers_accept() {
        let g = layered(1, &[2, 2], vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(decide_both(&Instance::ChainedClique(g.clone())));
        let out = to_nnccm(&g).unwrap();
        assert!(decide_machine(&out.target, 100_000_000));
    }

    #[test]
    fn missing_cross_edge_rejects() {
        let g = layered(1, &[1, 1], vec![]);
        assert!(!decide_both(&Instance::ChainedClique(g.clone())));
        let out = to_nnccm(&g).unwrap();
        assert!(!decide_machine(&out.target, 100_000_000));
    }

    #[test]
    fn odd_layer_counts_gain_a_compatible_layer() {
        let g = layered(1, &[1], vec![]);
        let out = to_nnccm(&g).unwrap();
        assert_eq!(out.constants["layers"], 2);
        assert!(decide_both(&Instance::ChainedClique(g.clone())));
        assert!(decide_machine(&out.target, 100_000_000));
    }

    #[test]
    fn empty_color_class_rejects_even_in_a_single_layer() {
        let g = LayeredColoredGraph {
            parameter: 1,
            layers: 1,
            n: 0,
            layer_of: vec![],
            color_of: vec![],
            edges: vec![],
        };
        assert!(!decide_both(&Instance::ChainedClique(g.clone())));
        let out = to_nnccm(&g).unwrap();
        assert!(!decide_machine(&out.target, 100_000_000));
    }

    #[test]
    fn same_color_cross_layer_non_edge_is_detected() {
        // a1-b1 (both color 0) is the only missing pair, so the clique needs
        // a cross-layer check on equal colors to be refuted
        let g = layered(2, &[2, 2], vec![(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!decide_both(&Instance::ChainedClique(g.clone())));
        let out = to_nnccm(&g).unwrap();
        let answer = solve(&out.target, SolveMode::Structured, 500_000_000).unwrap();
        assert!(!answer.decision);
    }

    #[test]
    fn random_small_graphs_round_trip_through_counters() {
        let mut state = 0xc047_u64 ^ 0x7e57;
        let mut yes = 0;
        for _ in 0..12 {
            let layers = 1 + (xorshift(&mut state) as usize) % 2;
            let sizes: Vec<usize> =
                (0..layers).map(|_| 1 + (xorshift(&mut state) as usize) % 2).collect();
            let shell = layered(1, &sizes, vec![]);
            let mut edges = Vec::new();
            for a in 0..shell.n {
                for b in a + 1..shell.n {
                    if shell.layer_of[a].abs_diff(shell.layer_of[b]) <= 1
                        && xorshift(&mut state) % 3 > 0
                    {
                        edges.push((a, b));
                    }
                }
            }
            let g = LayeredColoredGraph { edges, ..shell };
            let src = Instance::ChainedClique(g.clone());
            let out = to_nnccm(&g).unwrap();
            assert!(out.target.validate().is_empty());
            let want = decide_both(&src);
            assert_eq!(want, decide_machine(&out.target, 200_000_000));
            yes += usize::from(want);
        }
        assert!(yes > 2, "random stream should see accepting machines");
    }
}
