//! Chained satisfiability into vertex problems on graphs of logarithmic
//! pathwidth, and the reverse direction: clique along a narrow path
//! decomposition into single-block weighted CNF.
//!
//! The two forward reductions share a frame. Group sizes are first padded to
//! a power of two `2^t` with virtual variables (plus one positive clause per
//! padded group so a virtual variable can never be a group's true one); each
//! (block, group) then gets a binary choice gadget with one piece per code
//! bit, and each clause becomes a gadget that meets its share of the budget
//! exactly when some window group selects a variable satisfying the clause.
//! Only choice gadgets of the two blocks at a junction coexist in a bag, so
//! the largest bag is linear in `k·t` while the vertex count is exponential
//! in `t` — that gap is what keeps the emitted parameter (bag size measured
//! in `log2 n` slices) bounded in `k` alone.

use crate::instances::cnf::canonical_clause_set;
use crate::instances::graph::Bags;
use crate::instances::{
    log_width_ratio, ChainedCnf, Instance, PathwidthVertexInstance,
};

use super::{constant_map, ReductionError, ReductionOutput};

/// A chained CNF whose groups all have the same power-of-two size `1 << t`,
/// plus the padded group layout (positions per group, ascending; original
/// members first, virtual ones after).
struct PaddedSat {
    cnf: ChainedCnf,
    groups: Vec<Vec<usize>>,
    t: usize,
}

/// Grow every group to the next power of two shared by all groups. Virtual
/// variables are appended to the end of each block in group order, and every
/// (block, group) that gained one also gains a positive clause over its
/// original variables, so the padded instance has exactly the answer of the
/// source: the one true variable per group must still be an original one.
fn pad_to_power_of_two(c: &ChainedCnf) -> Result<PaddedSat, ReductionError> {
    let Some(orig) = c.groups() else {
        return Err(ReductionError::Unsupported(
            "the binary choice gadgets need an exactly-one partition".into(),
        ));
    };
    if orig.is_empty() || orig.iter().any(|g| g.is_empty()) {
        return Err(ReductionError::Unsupported(
            "partition groups must be nonempty".into(),
        ));
    }
    let k = orig.len();
    let gmax = orig.iter().map(|g| g.len()).max().unwrap_or(1);
    let size = gmax.next_power_of_two();
    let t = size.trailing_zeros() as usize;
    let q2 = k * size;

    let mut partition = c.partition.clone().expect("groups() implies a partition");
    let mut groups = orig.clone();
    let mut next = c.block_size;
    for (j, g) in orig.iter().enumerate() {
        for _ in g.len()..size {
            partition.push(j);
            groups[j].push(next);
            next += 1;
        }
    }

    // Literals keep their (block, position); only the block stride changes.
    let remap = |lit: i64| -> i64 {
        let var = lit.unsigned_abs() as usize;
        let v2 = (c.block_of(var) * q2 + c.pos_of(var) + 1) as i64;
        if lit > 0 {
            v2
        } else {
            -v2
        }
    };
    let mut clauses: Vec<Vec<Vec<i64>>> = c
        .clauses
        .iter()
        .map(|set| set.iter().map(|cl| cl.iter().copied().map(remap).collect()).collect())
        .collect();
    let last = clauses.len().saturating_sub(1);
    for b in 0..c.blocks {
        for (j, g) in orig.iter().enumerate() {
            if g.len() == size {
                continue;
            }
            let honesty: Vec<i64> = g.iter().map(|&p| (b * q2 + p + 1) as i64).collect();
            clauses[b.min(last)].push(honesty);
        }
    }
    let clauses = clauses.into_iter().map(canonical_clause_set).collect();

    Ok(PaddedSat {
        cnf: ChainedCnf {
            parameter: c.parameter,
            blocks: c.blocks,
            block_size: q2,
            positive: c.positive,
            partition: Some(partition),
            clauses,
        },
        groups,
        t,
    })
}

/// Does selecting code `x` in (block `b`, group `j`) — that variable true,
/// the rest of the group false — satisfy `clause`? Positive literals want
/// exactly their own variable selected; a negative literal on this group
/// wants anything else selected. Literals on other groups are undecided by
/// this selection and count as unsatisfied here.
fn selection_satisfies(p: &PaddedSat, clause: &[i64], b: usize, j: usize, x: usize) -> bool {
    let var = p.cnf.var_at(b, p.groups[j][x]);
    let part = p.cnf.partition.as_ref().expect("padded instances keep their partition");
    clause.iter().any(|&lit| {
        if lit > 0 {
            lit == var
        } else {
            let y = lit.unsigned_abs() as usize;
            p.cnf.block_of(y) == b && part[p.cnf.pos_of(y)] == j && lit != -var
        }
    })
}

fn as_chained_cnf(inst: &Instance, id: &str) -> Result<ChainedCnf, ReductionError> {
    match inst {
        Instance::ChainedCnf(c) => Ok(c.clone()),
        Instance::RegularChainedCnf(r) => Ok(r.expand()),
        other => Err(ReductionError::WrongKind {
            id: id.into(),
            expected: "chained-cnf",
            got: other.kind(),
        }),
    }
}

/// Encode a partitioned chained CNF as dominating set on a graph whose path
/// decomposition is narrow relative to `log2 n`.
///
/// Per (block, group, bit) a triangle with vertices marked 0 and 1 plus a
/// private third forces one pick per bit; the picks spell a code. Per clause
/// and window group, a selector gadget holds one vertex per code, each wired
/// to the complement bits of its code, plus two hubs adjacent to all of
/// them: exactly one selector vertex joins the set, and only the vertex of
/// the spelled code can (every other one is already dominated, and the hubs
/// cannot stand in without going over budget). The clause vertex hangs off
/// the selector vertices whose selection satisfies the clause, so it gets
/// dominated exactly when some window group's spelled choice does.
pub fn sat_to_log_pathwidth_domset(inst: &Instance) -> Result<ReductionOutput, ReductionError> {
    let c = as_chained_cnf(inst, "chained-sat-to-log-pw-domset")?;
    let padded = pad_to_power_of_two(&c)?;
    let cc = &padded.cnf;
    let (k, t) = (padded.groups.len(), padded.t);
    let size = 1usize << t;
    let r = cc.blocks;

    // Triangles are block-major, so each window is one contiguous id range.
    let tri = |b: usize, j: usize, beta: usize| ((b * k + j) * t + beta) * 3;
    let mut n = 3 * r * k * t;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for base in (0..n).step_by(3) {
        edges.push((base, base + 1));
        edges.push((base, base + 2));
        edges.push((base + 1, base + 2));
    }

    let mut bags: Bags = Vec::new();
    let mut budget = r * k * t;
    let mut clause_gadgets = 0i64;
    for (i, set) in cc.clauses.iter().enumerate() {
        let (lo, hi) = if r == 1 { (0, 0) } else { (i, i + 1) };
        let window: Vec<usize> = (tri(lo, 0, 0)..tri(lo, 0, 0) + 3 * k * t * (hi - lo + 1)).collect();
        bags.push(window.clone());
        for clause in set {
            clause_gadgets += 1;
            let mut base = window.clone();
            let mut selectors = Vec::new(); // (block, group, first code vertex)
            for b in lo..=hi {
                for j in 0..k {
                    let v0 = n;
                    let (z1, z2) = (n + size, n + size + 1);
                    n += size + 2;
                    for x in 0..size {
                        for beta in 0..t {
                            let bit = (x >> beta) & 1;
                            edges.push((tri(b, j, beta) + (1 - bit), v0 + x));
                        }
                        edges.push((v0 + x, z1));
                        edges.push((v0 + x, z2));
                    }
                    base.push(z1);
                    base.push(z2);
                    selectors.push((b, j, v0));
                    budget += 1;
                }
            }
            let cv = n;
            n += 1;
            base.push(cv);
            for &(b, j, v0) in &selectors {
                for x in 0..size {
                    if selection_satisfies(&padded, clause, b, j, x) {
                        edges.push((v0 + x, cv));
                    }
                }
            }
            bags.push(base.clone());
            for &(_, _, v0) in &selectors {
                for x in 0..size {
                    let mut bag = base.clone();
                    let at = bag.partition_point(|&u| u < v0 + x);
                    bag.insert(at, v0 + x);
                    bags.push(bag);
                }
            }
        }
    }
    edges.sort_unstable();

    let target = PathwidthVertexInstance {
        parameter: log_width_ratio(n, &bags),
        n,
        edges,
        bags,
        solution_size: budget,
    };
    Ok(ReductionOutput {
        parameter: target.parameter,
        constants: constant_map([
            ("solution_size", budget as i64),
            ("code_bits", t as i64),
            ("choice_triangles", (r * k * t) as i64),
            ("clause_gadgets", clause_gadgets),
        ]),
        target: Instance::PathwidthDominatingSet(target),
    })
}

/// Encode a partitioned chained CNF as independent set on a graph whose path
/// decomposition is narrow relative to `log2 n`.
///
/// Per (block, group, bit) one edge with endpoints marked 0 and 1: an
/// independent set at full budget picks one endpoint per edge, spelling a
/// code. Each clause expands to one column per satisfying selection (a
/// positive literal contributes its own code, a negative literal every other
/// code of its group; the list is padded to even length by repeating the
/// last column). The gadget is a ladder: a top rail through all columns with
/// two extra endpoints, a bottom rail, rungs, and per column a selection
/// vertex adjacent to its rung and to the complement bits of its code. With
/// an even column count the two rails alone reach only `columns + 1`
/// vertices; the extra one needs a selection vertex, available exactly when
/// some window group spells a satisfying code.
pub fn sat_to_log_pathwidth_indset(inst: &Instance) -> Result<ReductionOutput, ReductionError> {
    let c = as_chained_cnf(inst, "chained-sat-to-log-pw-indset")?;
    let padded = pad_to_power_of_two(&c)?;
    let cc = &padded.cnf;
    let (k, t) = (padded.groups.len(), padded.t);
    let size = 1usize << t;
    let r = cc.blocks;
    let part = cc.partition.clone().expect("padded instances keep their partition");

    let pair = |b: usize, j: usize, beta: usize| ((b * k + j) * t + beta) * 2;
    let mut n = 2 * r * k * t;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for base in (0..n).step_by(2) {
        edges.push((base, base + 1));
    }

    let mut bags: Bags = Vec::new();
    let mut budget = r * k * t;
    let mut clause_gadgets = 0i64;
    for (i, set) in cc.clauses.iter().enumerate() {
        let (lo, hi) = if r == 1 { (0, 0) } else { (i, i + 1) };
        let window: Vec<usize> =
            (pair(lo, 0, 0)..pair(lo, 0, 0) + 2 * k * t * (hi - lo + 1)).collect();
        bags.push(window.clone());
        for clause in set {
            clause_gadgets += 1;
            // One column per single-group selection that satisfies the clause.
            let mut columns: Vec<(usize, usize, usize)> = Vec::new();
            for &lit in clause {
                let y = lit.unsigned_abs() as usize;
                let (b, pos) = (cc.block_of(y), cc.pos_of(y));
                let j = part[pos];
                if lit > 0 {
                    let x = padded.groups[j]
                        .iter()
                        .position(|&p| p == pos)
                        .expect("every position belongs to its group");
                    columns.push((b, j, x));
                } else {
                    for x in 0..size {
                        if padded.groups[j][x] != pos {
                            columns.push((b, j, x));
                        }
                    }
                }
            }
            if columns.len() % 2 == 1 {
                let dup = *columns.last().expect("odd length implies nonempty");
                columns.push(dup);
            }
            let ell = columns.len();
            budget += ell + 2;

            // Column-major ids: head, then (top, bottom, selector) per
            // column, then tail.
            let head = n;
            let col = |s: usize| head + 1 + 3 * s;
            let tail = head + 1 + 3 * ell;
            n = tail + 1;
            if ell == 0 {
                edges.push((head, tail));
            } else {
                edges.push((head, col(0)));
                edges.push((col(ell - 1), tail));
            }
            for (s, &(b, j, x)) in columns.iter().enumerate() {
                let (top, bottom, sel) = (col(s), col(s) + 1, col(s) + 2);
                edges.push((top, bottom));
                edges.push((top, sel));
                edges.push((bottom, sel));
                if s + 1 < ell {
                    edges.push((top, col(s + 1)));
                    edges.push((bottom, col(s + 1) + 1));
                }
                for beta in 0..t {
                    let bit = (x >> beta) & 1;
                    edges.push((pair(b, j, beta) + (1 - bit), sel));
                }
            }

            // Slide a two-column window of the ladder through the bags.
            let with = |extra: &[usize]| {
                let mut bag = window.clone();
                bag.extend_from_slice(extra);
                bag
            };
            if ell == 0 {
                bags.push(with(&[head, tail]));
            } else {
                bags.push(with(&[head, col(0), col(0) + 1, col(0) + 2]));
                for s in 1..ell {
                    bags.push(with(&[
                        col(s - 1),
                        col(s - 1) + 1,
                        col(s - 1) + 2,
                        col(s),
                        col(s) + 1,
                        col(s) + 2,
                    ]));
                }
                bags.push(with(&[col(ell - 1), col(ell - 1) + 1, col(ell - 1) + 2, tail]));
            }
        }
    }
    edges.sort_unstable();

    let target = PathwidthVertexInstance {
        parameter: log_width_ratio(n, &bags),
        n,
        edges,
        bags,
        solution_size: budget,
    };
    Ok(ReductionOutput {
        parameter: target.parameter,
        constants: constant_map([
            ("solution_size", budget as i64),
            ("code_bits", t as i64),
            ("choice_pairs", (r * k * t) as i64),
            ("clause_gadgets", clause_gadgets),
        ]),
        target: Instance::PathwidthIndependentSet(target),
    })
}

/// Encode clique along a narrow path decomposition as single-block weighted
/// CNF asking for exactly `2k+2` true variables.
///
/// Pairwise-intersecting bag intervals share a bag, so any clique sits
/// inside one bag. One selector variable per bag, one variable per clique
/// subset of each of the `k` per-bag groups (the empty subset included), and
/// one counter variable per (level, partial sum). Clauses force exactly one
/// selected bag, one subset per group of it, pairwise-compatible subsets,
/// and counter levels that add the subset sizes up to the clique size — the
/// `2k+2` budget is one selector, one subset per group, and `k+1` counters.
pub fn log_pathwidth_clique_to_weighted_cnf(
    inst: &Instance,
) -> Result<ReductionOutput, ReductionError> {
    let p = match inst {
        Instance::PathwidthClique(p) => p,
        other => {
            return Err(ReductionError::WrongKind {
                id: "log-pw-clique-to-weighted-cnf".into(),
                expected: "pathwidth-clique",
                got: other.kind(),
            })
        }
    };
    let g = p.graph();
    let k = p.parameter;
    let want = p.solution_size;
    let bags: Bags = if p.bags.is_empty() { vec![Vec::new()] } else { p.bags.clone() };
    let rb = bags.len();

    // Subset variables, bag-major then group-major then submask-ascending.
    // members are actual vertices; only cliques (incl. the empty set) exist.
    let mut subset_vars: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut per_bag_group: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); k]; rb];
    for (i, bag) in bags.iter().enumerate() {
        for j in 0..k {
            let chunk = &bag[j * bag.len() / k..(j + 1) * bag.len() / k];
            for mask in 0u32..1 << chunk.len() {
                let members: Vec<usize> = (0..chunk.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| chunk[b])
                    .collect();
                let clique = members.iter().enumerate().all(|(a, &u)| {
                    members[a + 1..].iter().all(|&v| g.has_edge(u, v))
                });
                if clique {
                    per_bag_group[i][j].push(subset_vars.len());
                    subset_vars.push((i, j, members));
                }
            }
        }
    }

    let bag_var = |i: usize| (i + 1) as i64;
    let sub_var = |e: usize| (rb + e + 1) as i64;
    let t_base = rb + subset_vars.len();
    let t_var = |level: usize, q: usize| (t_base + level * (want + 1) + q + 1) as i64;
    let total = t_base + (k + 1) * (want + 1);

    let mut clauses: Vec<Vec<i64>> = Vec::new();
    clauses.push((0..rb).map(bag_var).collect());
    for (e, &(i, _, _)) in subset_vars.iter().enumerate() {
        clauses.push(vec![bag_var(i), -sub_var(e)]);
    }
    for (i, groups) in per_bag_group.iter().enumerate() {
        for members in groups {
            let mut clause = vec![-bag_var(i)];
            clause.extend(members.iter().map(|&e| sub_var(e)));
            clauses.push(clause);
        }
    }
    for (i, groups) in per_bag_group.iter().enumerate() {
        for j1 in 0..k {
            for j2 in j1 + 1..k {
                for &e1 in &groups[j1] {
                    for &e2 in &groups[j2] {
                        let (s1, s2) = (&subset_vars[e1].2, &subset_vars[e2].2);
                        let joined = s1
                            .iter()
                            .all(|&u| s2.iter().all(|&v| g.has_edge(u, v)));
                        if !joined {
                            clauses.push(vec![-sub_var(e1), -sub_var(e2)]);
                        }
                    }
                }
                let _ = i;
            }
        }
    }
    clauses.push(vec![t_var(0, 0)]);
    for level in 1..=k {
        clauses.push((0..=want).map(|q| t_var(level, q)).collect());
    }
    for (e, &(_, j, ref members)) in subset_vars.iter().enumerate() {
        for q in 0..=want {
            for q2 in 0..=want {
                if q + members.len() != q2 {
                    clauses.push(vec![-sub_var(e), -t_var(j, q), -t_var(j + 1, q2)]);
                }
            }
        }
    }
    clauses.push(vec![t_var(k, want)]);

    let target = ChainedCnf {
        parameter: 2 * k + 2,
        blocks: 1,
        block_size: total,
        positive: false,
        partition: None,
        clauses: vec![canonical_clause_set(clauses)],
    };
    Ok(ReductionOutput {
        parameter: target.parameter,
        constants: constant_map([
            ("true_weight", (2 * k + 2) as i64),
            ("variables", total as i64),
            ("bag_selectors", rb as i64),
            ("subset_vars", subset_vars.len() as i64),
            ("counter_vars", ((k + 1) * (want + 1)) as i64),
        ]),
        target: Instance::ChainedCnf(target),
    })
}
