//! Chained weighted CNF instances.
//!
//! Variables live in `blocks` consecutive blocks of `block_size` variables
//! each and are addressed DIMACS-style: variable `v` (1-based, global) sits in
//! block `(v-1)/block_size` at position `(v-1)%block_size`. A clause is a
//! sorted list of nonzero literals; clause set `i` (0-based) constrains the
//! junction between blocks `i` and `i+1`. The decision question: is there an
//! assignment with exactly `parameter` true variables per block satisfying
//! every clause? With a `partition`, "exactly one true variable per group" is
//! required instead, and `parameter` equals the number of groups.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ChainedCnf {
    /// Exact number of true variables per block (= group count when partitioned).
    pub parameter: usize,
    pub blocks: usize,
    pub block_size: usize,
    /// Promise that no clause contains a negative literal.
    pub positive: bool,
    /// Optional group id per in-block position, `0..group_count`, shared by
    /// every block. Solutions must make exactly one variable per group true.
    pub partition: Option<Vec<usize>>,
    /// One clause set per junction; a single set over block 1 when `blocks == 1`.
    pub clauses: Vec<Vec<Vec<i64>>>,
}

impl ChainedCnf {
    pub fn num_vars(&self) -> usize {
        self.blocks * self.block_size
    }

    /// 0-based block of a global 1-based variable index.
    pub fn block_of(&self, var: usize) -> usize {
        (var - 1) / self.block_size
    }

    /// 0-based in-block position of a global 1-based variable index.
    pub fn pos_of(&self, var: usize) -> usize {
        (var - 1) % self.block_size
    }

    /// Global 1-based variable for (0-based block, 0-based position).
    pub fn var_at(&self, block: usize, pos: usize) -> i64 {
        (block * self.block_size + pos + 1) as i64
    }

    pub fn expected_junctions(&self) -> usize {
        if self.blocks <= 1 {
            1
        } else {
            self.blocks - 1
        }
    }

    /// Group member positions (0-based, ascending) for each group id.
    pub fn groups(&self) -> Option<Vec<Vec<usize>>> {
        let part = self.partition.as_ref()?;
        let count = part.iter().copied().max().map_or(0, |m| m + 1);
        let mut groups = vec![Vec::new(); count];
        for (pos, &g) in part.iter().enumerate() {
            if g < count {
                groups[g].push(pos);
            }
        }
        Some(groups)
    }

    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.blocks == 0 {
            errs.push("blocks must be at least 1".into());
        }
        if self.block_size == 0 {
            errs.push("block_size must be at least 1".into());
        }
        if self.parameter > self.block_size {
            errs.push(format!(
                "weight {} exceeds block size {}",
                self.parameter, self.block_size
            ));
        }
        if self.clauses.len() != self.expected_junctions() {
            errs.push(format!(
                "expected {} clause sets for {} blocks, found {}",
                self.expected_junctions(),
                self.blocks,
                self.clauses.len()
            ));
        }
        let q = self.block_size.max(1);
        for (j, set) in self.clauses.iter().enumerate() {
            for (c, clause) in set.iter().enumerate() {
                let mut prev: Option<(usize, i64)> = None;
                for &lit in clause {
                    if lit == 0 {
                        errs.push(format!("junction {j} clause {c} contains literal 0"));
                        continue;
                    }
                    let var = lit.unsigned_abs() as usize;
                    if var > self.num_vars() {
                        errs.push(format!(
                            "junction {j} clause {c} literal {lit} out of range"
                        ));
                        continue;
                    }
                    let b = (var - 1) / q;
                    let allowed = if self.blocks <= 1 { b == 0 } else { b == j || b == j + 1 };
                    if !allowed {
                        errs.push(format!(
                            "junction {j} clause {c} literal {lit} touches block {b}"
                        ));
                    }
                    if lit < 0 && self.positive {
                        errs.push(format!(
                            "positive flag set but junction {j} clause {c} has literal {lit}"
                        ));
                    }
                    let key = (var, lit);
                    if let Some(p) = prev {
                        if p.0 == var {
                            errs.push(format!(
                                "junction {j} clause {c} repeats variable {var}"
                            ));
                        } else if p >= key {
                            errs.push(format!(
                                "junction {j} clause {c} literals not sorted at {lit}"
                            ));
                        }
                    }
                    prev = Some(key);
                }
            }
        }
        if let Some(part) = &self.partition {
            validate_partition(part, self.block_size, self.parameter, errs);
        }
    }

    /// Evaluate one clause under per-block true-position sets (sorted).
    pub fn clause_satisfied(&self, clause: &[i64], truth: &[Vec<usize>]) -> bool {
        clause.iter().any(|&lit| {
            let var = lit.unsigned_abs() as usize;
            let b = self.block_of(var);
            let p = self.pos_of(var);
            let val = truth.get(b).is_some_and(|t| t.binary_search(&p).is_ok());
            val == (lit > 0)
        })
    }

    /// Check every clause of every junction under a full assignment.
    pub fn all_satisfied(&self, truth: &[Vec<usize>]) -> bool {
        self.clauses
            .iter()
            .all(|set| set.iter().all(|c| self.clause_satisfied(c, truth)))
    }

    /// True-position sets that respect the block weight / partition discipline.
    pub fn weights_ok(&self, truth: &[Vec<usize>]) -> bool {
        if truth.len() != self.blocks {
            return false;
        }
        match self.groups() {
            Some(groups) => truth.iter().all(|t| {
                t.len() == self.parameter
                    && groups
                        .iter()
                        .all(|g| g.iter().filter(|p| t.binary_search(p).is_ok()).count() == 1)
            }),
            None => truth.iter().all(|t| t.len() == self.parameter),
        }
    }
}

/// Sort literals of a clause by variable (ascending), erroring later if a
/// variable repeats; clause sets are sorted and deduplicated.
pub fn canonical_clause_set(mut set: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    for clause in set.iter_mut() {
        clause.sort_unstable_by_key(|&l| (l.unsigned_abs(), l));
        clause.dedup();
    }
    set.sort_unstable();
    set.dedup();
    set
}

fn validate_partition(part: &[usize], block_size: usize, parameter: usize, errs: &mut Vec<String>) {
    if part.len() != block_size {
        errs.push(format!(
            "partition length {} does not match block size {}",
            part.len(),
            block_size
        ));
        return;
    }
    let count = part.iter().copied().max().map_or(0, |m| m + 1);
    let mut seen = vec![false; count];
    for &g in part {
        seen[g] = true;
    }
    for (g, s) in seen.iter().enumerate() {
        if !s {
            errs.push(format!("partition group {g} is empty"));
        }
    }
    if count != parameter {
        errs.push(format!(
            "partition has {count} groups but weight parameter is {parameter}"
        ));
    }
}

/// Chained CNF in regular form: one junction formula `f1` repeated along the
/// chain plus boundary formulas `f0` (first block) and `f2` (last block).
/// Literals of `f0`/`f2` use positions `1..=q` of their block; `f1` uses
/// `1..=q` for the left block of a junction and `q+1..=2q` for the right.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RegularBoundaryCnf {
    pub parameter: usize,
    pub blocks: usize,
    pub block_size: usize,
    pub positive: bool,
    pub partition: Option<Vec<usize>>,
    pub f0: Vec<Vec<i64>>,
    pub f1: Vec<Vec<i64>>,
    pub f2: Vec<Vec<i64>>,
}

impl RegularBoundaryCnf {
    pub fn validate_into(&self, errs: &mut Vec<String>) {
        if self.blocks == 0 {
            errs.push("blocks must be at least 1".into());
        }
        if self.block_size == 0 {
            errs.push("block_size must be at least 1".into());
        }
        if self.parameter > self.block_size {
            errs.push(format!(
                "weight {} exceeds block size {}",
                self.parameter, self.block_size
            ));
        }
        if self.blocks == 1 && !self.f1.is_empty() {
            errs.push("single-block instance cannot carry a junction formula".into());
        }
        let q = self.block_size.max(1);
        for (name, set, span) in [("f0", &self.f0, q), ("f1", &self.f1, 2 * q), ("f2", &self.f2, q)]
        {
            for (c, clause) in set.iter().enumerate() {
                let mut prev: Option<(usize, i64)> = None;
                for &lit in clause {
                    if lit == 0 {
                        errs.push(format!("{name} clause {c} contains literal 0"));
                        continue;
                    }
                    let var = lit.unsigned_abs() as usize;
                    if var > span {
                        errs.push(format!("{name} clause {c} literal {lit} out of range"));
                    }
                    if lit < 0 && self.positive {
                        errs.push(format!(
                            "positive flag set but {name} clause {c} has literal {lit}"
                        ));
                    }
                    let key = (var, lit);
                    if let Some(p) = prev {
                        if p.0 == var {
                            errs.push(format!("{name} clause {c} repeats variable {var}"));
                        } else if p >= key {
                            errs.push(format!("{name} clause {c} literals not sorted at {lit}"));
                        }
                    }
                    prev = Some(key);
                }
            }
        }
        if let Some(part) = &self.partition {
            validate_partition(part, self.block_size, self.parameter, errs);
        }
    }

    /// Expand the regular description into an explicit chained CNF: `f1`
    /// shifted to every junction, `f0` attached to the first clause set and
    /// `f2` to the last (both land in the single set when `blocks == 1`).
    pub fn expand(&self) -> ChainedCnf {
        let q = self.block_size as i64;
        let shift = |set: &[Vec<i64>], by: i64| -> Vec<Vec<i64>> {
            set.iter()
                .map(|cl| cl.iter().map(|&l| if l > 0 { l + by } else { l - by }).collect())
                .collect()
        };
        let mut clauses: Vec<Vec<Vec<i64>>> = Vec::new();
        if self.blocks <= 1 {
            let mut set = self.f0.clone();
            set.extend(self.f2.iter().cloned());
            clauses.push(canonical_clause_set(set));
        } else {
            for j in 0..self.blocks - 1 {
                let mut set = shift(&self.f1, j as i64 * q);
                if j == 0 {
                    set.extend(self.f0.iter().cloned());
                }
                if j == self.blocks - 2 {
                    set.extend(shift(&self.f2, (self.blocks as i64 - 1) * q));
                }
                clauses.push(canonical_clause_set(set));
            }
        }
        ChainedCnf {
            parameter: self.parameter,
            blocks: self.blocks,
            block_size: self.block_size,
            positive: self.positive,
            partition: self.partition.clone(),
            clauses,
        }
    }
}
