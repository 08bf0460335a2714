//! Reference decision procedures.
//!
//! Every problem kind gets two independent implementations:
//!
//! * [`SolveMode::Exhaustive`] — a brute-force search whose correctness is
//!   meant to be checkable by eye (enumerate candidate objects, test the
//!   defining predicate).
//! * [`SolveMode::Structured`] — a dynamic program or guided search that
//!   exploits the instance structure (frontiers, decompositions, windows).
//!
//! The two modes must agree on every instance; the test suite and the
//! verification harness lean on that agreement.  All solvers charge work
//! against a step [`Budget`] and fail loudly with [`SolveError::Budget`]
//! instead of stalling, so a resource failure is never confused with a
//! "no" answer.

use serde::{Deserialize, Serialize};

use crate::instances::{check_certificate, Certificate, Instance};

mod bandwidth;
mod cellular;
mod chained_cnf;
mod chained_layered;
mod counter;
mod emulation;
mod fsa;
mod lcs;
mod list_coloring;
mod pathwidth;
mod reconfig;
mod scheduling;

/// Default step budget: generous for the bundled corpora, small enough that a
/// runaway search trips quickly.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Which of the two reference implementations to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMode {
    Exhaustive,
    Structured,
}

impl SolveMode {
    pub fn all() -> [SolveMode; 2] {
        [SolveMode::Exhaustive, SolveMode::Structured]
    }
}

impl std::fmt::Display for SolveMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveMode::Exhaustive => write!(f, "exhaustive"),
            SolveMode::Structured => write!(f, "structured"),
        }
    }
}

/// Failures distinct from a "no" decision.
#[derive(Debug, thiserror::Error)]
pub enum SolveError {
    /// The instance failed its own invariants; solvers refuse to guess.
    #[error("invalid instance: {}", .0.join("; "))]
    Invalid(Vec<String>),
    /// The step budget ran out before the search finished.
    #[error("step budget exhausted ({limit} steps); rerun with a larger budget")]
    Budget { limit: u64 },
}

/// Step meter shared by all searches.  One unit is one "elementary object
/// examined": a generated configuration, an enumerated subset, a DP cell.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    /// Charge `n` steps, failing if the meter would exceed the limit.
    pub fn charge(&mut self, n: u64) -> Result<(), SolveError> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(SolveError::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Decision plus, on "yes", a witness that [`check_certificate`] accepts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Answer {
    pub decision: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

impl Answer {
    pub fn no() -> Self {
        Answer { decision: false, certificate: None }
    }

    pub fn yes(certificate: Certificate) -> Self {
        Answer { decision: true, certificate: Some(certificate) }
    }
}

/// Validate `instance`, then run the solver for its kind in the given mode.
pub fn solve(instance: &Instance, mode: SolveMode, budget_limit: u64) -> Result<Answer, SolveError> {
    let errs = instance.validate();
    if !errs.is_empty() {
        return Err(SolveError::Invalid(errs));
    }
    let mut budget = Budget::new(budget_limit);
    let answer = solve_valid(instance, mode, &mut budget)?;
    debug_assert!(certificate_consistent(instance, &answer));
    Ok(answer)
}

/// As [`solve`], but exposes the meter so callers can read back step usage.
pub fn solve_with_budget(
    instance: &Instance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    let errs = instance.validate();
    if !errs.is_empty() {
        return Err(SolveError::Invalid(errs));
    }
    solve_valid(instance, mode, budget)
}

fn solve_valid(
    instance: &Instance,
    mode: SolveMode,
    budget: &mut Budget,
) -> Result<Answer, SolveError> {
    match instance {
        Instance::CellularAutomaton(ca) => cellular::solve(ca, mode, budget),
        Instance::ChainedCnf(cnf) => chained_cnf::solve(cnf, mode, budget),
        Instance::RegularChainedCnf(reg) => chained_cnf::solve(&reg.expand(), mode, budget),
        Instance::ChainedClique(g) => chained_layered::solve(g, true, mode, budget),
        Instance::ChainedIndependentSet(g) => chained_layered::solve(g, false, mode, budget),
        Instance::CounterMachine(m) => counter::solve(m, mode, budget),
        Instance::ListColoring(inst) => list_coloring::solve(inst, mode, budget),
        Instance::PathwidthDominatingSet(inst) => {
            pathwidth::solve(inst, crate::instances::VertexProblem::DominatingSet, mode, budget)
        }
        Instance::PathwidthIndependentSet(inst) => {
            pathwidth::solve(inst, crate::instances::VertexProblem::IndependentSet, mode, budget)
        }
        Instance::PathwidthClique(inst) => {
            pathwidth::solve(inst, crate::instances::VertexProblem::Clique, mode, budget)
        }
        Instance::Scheduling(inst) => scheduling::solve(inst, mode, budget),
        Instance::UniformEmulation(inst) => emulation::solve(inst, mode, budget),
        Instance::Bandwidth(inst) => bandwidth::solve(inst, mode, budget),
        Instance::Reconfiguration(inst) => reconfig::solve(inst, mode, budget),
        Instance::FsaIntersection(inst) => fsa::solve(inst, mode, budget),
        Instance::Lcs(inst) => lcs::solve(inst, mode, budget),
    }
}

fn certificate_consistent(instance: &Instance, answer: &Answer) -> bool {
    match (&answer.certificate, answer.decision) {
        (Some(cert), true) => check_certificate(instance, cert) == Ok(true),
        (Some(_), false) => false,
        (None, true) => false,
        (None, false) => true,
    }
}
