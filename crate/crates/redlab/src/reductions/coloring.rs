//! Reductions centered on list coloring: positive partitioned chained
//! satisfiability into list coloring along a path decomposition, list
//! coloring into precoloring extension, and list coloring into the chained
//! multicolored clique problem on a layered graph.

use std::collections::BTreeSet;

use crate::instances::graph::{pd_width, Bags};
use crate::instances::{ChainedCnf, Instance, LayeredColoredGraph, ListColoringInstance};

use super::{constant_map, ReductionError, ReductionOutput};

/// Encode a positive, partitioned chained CNF as list coloring on a path
/// decomposition of width at most `2k+1`.
///
/// One chooser vertex per (block, group) carries the group's variables as
/// its color list, so a coloring is exactly a choice of one true variable
/// per group. Every clause becomes a gadget: a clause vertex that must take
/// the "selected" color of some group in the junction window, plus one guard
/// vertex per window variable missing from the clause. The guard's two-color
/// list blocks that selection whenever the group chose a variable the clause
/// does not contain, so the clause vertex is colorable iff some chosen
/// variable appears in the clause.
pub fn sat_to_list_coloring(inst: &Instance) -> Result<ReductionOutput, ReductionError> {
    let c: ChainedCnf = match inst {
        Instance::ChainedCnf(c) => c.clone(),
        Instance::RegularChainedCnf(r) => r.expand(),
        other => {
            return Err(ReductionError::WrongKind {
                id: "chained-sat-to-list-coloring".into(),
                expected: "chained-cnf",
                got: other.kind(),
            })
        }
    };
    if !c.positive {
        return Err(ReductionError::Unsupported(
            "the coloring gadgets need positive clauses; positivize first".into(),
        ));
    }
    let Some(groups) = c.groups() else {
        return Err(ReductionError::Unsupported(
            "the coloring gadgets need an exactly-one partition".into(),
        ));
    };
    let k = c.parameter;
    let q = c.block_size;
    let r = c.blocks;

    // Colors: one per variable, then one "group j of block b selected" color.
    let var_color = |b: usize, p: usize| b * q + p;
    let pick_color = |b: usize, j: usize| r * q + b * k + j;
    let colors = r * q + r * k;

    // Chooser vertices come first so clause-gadget ids stay above them.
    let chooser = |b: usize, j: usize| b * k + j;
    let mut n = r * k;
    let mut lists: Vec<Vec<usize>> = Vec::new();
    for b in 0..r {
        for g in &groups {
            lists.push(g.iter().map(|&p| var_color(b, p)).collect());
        }
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut bags: Bags = Vec::new();
    let mut clause_vertices = 0i64;

    for (i, set) in c.clauses.iter().enumerate() {
        // Junction i constrains blocks i and i+1; a single block is its own
        // window.
        let (lo, hi) = if r == 1 { (0, 0) } else { (i, i + 1) };
        let window: Vec<usize> =
            (lo..=hi).flat_map(|b| (0..k).map(move |j| chooser(b, j))).collect();
        bags.push(window.clone());
        for clause in set {
            let in_clause: BTreeSet<usize> =
                clause.iter().map(|&l| l.unsigned_abs() as usize).collect();
            let z = n;
            n += 1;
            clause_vertices += 1;
            lists.push((lo..=hi).flat_map(|b| (0..k).map(move |j| pick_color(b, j))).collect());
            let mut with_z = window.clone();
            with_z.push(z);
            bags.push(with_z.clone());
            for b in lo..=hi {
                for (j, g) in groups.iter().enumerate() {
                    for &p in g {
                        if in_clause.contains(&(b * q + p + 1)) {
                            continue;
                        }
                        let w = n;
                        n += 1;
                        let mut pair = vec![var_color(b, p), pick_color(b, j)];
                        pair.sort_unstable();
                        lists.push(pair);
                        edges.push((chooser(b, j), w));
                        edges.push((z, w));
                        let mut bag = with_z.clone();
                        bag.push(w);
                        bags.push(bag);
                    }
                }
            }
        }
    }
    edges.sort_unstable();

    let width = pd_width(&bags);
    let target = ListColoringInstance {
        parameter: width,
        n,
        edges,
        bags,
        colors,
        lists,
        precolored: Vec::new(),
    };
    Ok(ReductionOutput {
        parameter: target.parameter,
        constants: constant_map([
            ("width", width as i64),
            ("colors", colors as i64),
            ("clause_vertices", clause_vertices),
        ]),
        target: Instance::ListColoring(target),
    })
}

/// Rewrite a list-coloring instance as precoloring extension: every list
/// becomes the full palette, and each vertex gains one precolored pendant
/// neighbor per color its original list excluded. Width grows by at most
/// one; the new bags slot in right after the first bag of their vertex.
pub fn to_precoloring(lc: &ListColoringInstance) -> Result<ReductionOutput, ReductionError> {
    let eff = lc.effective_lists();
    let palette: Vec<usize> = (0..lc.colors).collect();

    // Pendant ids are dense above the originals, vertex-major then by color.
    let mut pendants: Vec<Vec<(usize, usize)>> = vec![Vec::new(); lc.n];
    let mut next = lc.n;
    let mut precolored = Vec::new();
    let mut edges = lc.edges.clone();
    for v in 0..lc.n {
        for &c in &palette {
            if eff[v].binary_search(&c).is_err() {
                pendants[v].push((next, c));
                precolored.push((next, c));
                edges.push((v, next));
                next += 1;
            }
        }
    }
    edges.sort_unstable();

    let mut bags: Bags = Vec::new();
    for (i, bag) in lc.bags.iter().enumerate() {
        bags.push(bag.clone());
        for &v in bag {
            let first = i == 0 || lc.bags[i - 1].binary_search(&v).is_err();
            if !first {
                continue;
            }
            for &(w, _) in &pendants[v] {
                let mut inserted = bag.clone();
                inserted.push(w);
                bags.push(inserted);
            }
        }
    }

    let width = pd_width(&bags);
    let pendant_count = (next - lc.n) as i64;
    let target = ListColoringInstance {
        parameter: width,
        n: next,
        edges,
        bags,
        colors: lc.colors,
        lists: vec![palette; next],
        precolored,
    };
    Ok(ReductionOutput {
        parameter: target.parameter,
        constants: constant_map([("width", width as i64), ("pendants", pendant_count)]),
        target: Instance::ListColoring(target),
    })
}

/// Encode list coloring as chained multicolored clique. Bags are padded to
/// exactly `k+1` slots with fresh isolated vertices whose list is the single
/// color 0; layer `i` then holds one vertex per (slot vertex, admissible
/// color), colored by its slot. Edges admit two same-layer or distance-one
/// picks unless they witness a coloring conflict: the same vertex must keep
/// its color across layers, and neighbors in the source must differ.
pub fn to_cmc(lc: &ListColoringInstance) -> Result<ReductionOutput, ReductionError> {
    let eff = lc.effective_lists();
    let k = lc.parameter;
    let slots = k + 1;
    // A vertexless instance has no bags; one all-padding layer keeps the
    // target well-formed and trivially YES, matching the empty source.
    let source_bags: Bags =
        if lc.bags.is_empty() { vec![Vec::new()] } else { lc.bags.clone() };
    let layers = source_bags.len();

    // Slot occupants per layer: original bag members in ascending order,
    // then padding. Padding entries have no source vertex.
    let mut occupant: Vec<Vec<Option<usize>>> = Vec::new();
    let mut pads = 0i64;
    for bag in &source_bags {
        let mut row: Vec<Option<usize>> = bag.iter().map(|&v| Some(v)).collect();
        while row.len() < slots {
            row.push(None);
            pads += 1;
        }
        occupant.push(row);
    }

    // One target vertex per (layer, slot, admissible color).
    let mut layer_of = Vec::new();
    let mut color_of = Vec::new();
    let mut source_of: Vec<(Option<usize>, usize)> = Vec::new();
    let mut ids: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut n = 0;
    for (i, row) in occupant.iter().enumerate() {
        let mut per_slot = Vec::new();
        for (s, &occ) in row.iter().enumerate() {
            let choices: Vec<usize> = match occ {
                Some(v) => eff[v].clone(),
                None => vec![0],
            };
            let mut here = Vec::new();
            for c in choices {
                here.push(n);
                layer_of.push(i);
                color_of.push(s);
                source_of.push((occ, c));
                n += 1;
            }
            per_slot.push(here);
        }
        ids.push(per_slot);
    }

    let src_edges: BTreeSet<(usize, usize)> = lc.edges.iter().copied().collect();
    let conflict = |a: usize, b: usize| -> bool {
        let (va, ca) = source_of[a];
        let (vb, cb) = source_of[b];
        match (va, vb) {
            (Some(x), Some(y)) if x == y => ca != cb,
            (Some(x), Some(y)) => {
                ca == cb && src_edges.contains(&(x.min(y), x.max(y)))
            }
            _ => false,
        }
    };
    let mut edges = Vec::new();
    for i in 0..layers {
        for s in 0..slots {
            for s2 in s + 1..slots {
                for &a in &ids[i][s] {
                    for &b in &ids[i][s2] {
                        if !conflict(a, b) {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        if i + 1 < layers {
            for s in 0..slots {
                for s2 in 0..slots {
                    for &a in &ids[i][s] {
                        for &b in &ids[i + 1][s2] {
                            let same = source_of[a].0.is_some()
                                && source_of[a].0 == source_of[b].0;
                            let keep = if same {
                                source_of[a].1 == source_of[b].1
                            } else {
                                !conflict(a, b)
                            };
                            if keep {
                                edges.push((a, b));
                            }
                        }
                    }
                }
            }
        }
    }
    edges.sort_unstable();

    let target = LayeredColoredGraph {
        parameter: slots,
        layers,
        n,
        layer_of,
        color_of,
        edges,
    };
    Ok(ReductionOutput {
        parameter: slots,
        constants: constant_map([
            ("colors", slots as i64),
            ("layers", layers as i64),
            ("padding_vertices", pads),
        ]),
        target: Instance::ChainedClique(target),
    })
}
