//! Typed problem instances, validation, and certificate checking.
//!
//! Every instance serializes as a single JSON object `{"kind": ...,
//! "parameter": .., ...}`. Vertex sets are sorted integer arrays; clause
//! literals follow the DIMACS sign convention (±v, 1-based). `validate`
//! returns a list of named violations and never aborts; solvers and
//! reductions refuse instances with nonempty diagnostics.

pub mod automaton;
pub mod bandwidth;
pub mod certificate;
pub mod cnf;
pub mod coloring;
pub mod counter;
pub mod emulation;
pub mod fsa;
pub mod graph;
pub mod layered;
pub mod lcs;
pub mod pathwidth;
pub mod reconfig;
pub mod scheduling;

pub use automaton::{CaFlavor, CellularAutomaton};
pub use bandwidth::BandwidthInstance;
pub use certificate::Certificate;
pub use cnf::{ChainedCnf, RegularBoundaryCnf};
pub use coloring::ListColoringInstance;
pub use counter::CounterMachine;
pub use emulation::UniformEmulationInstance;
pub use fsa::{Dfa, FsaIntersectionInstance};
pub use graph::{pd_width, Graph};
pub use layered::LayeredColoredGraph;
pub use lcs::LcsInstance;
pub use pathwidth::{log_width_ratio, PathwidthVertexInstance, VertexProblem};
pub use reconfig::{ReconfigInstance, ReconfigProblem, ReconfigRule};
pub use scheduling::{poset_width, SchedulingInstance};

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    CellularAutomaton(CellularAutomaton),
    ChainedCnf(ChainedCnf),
    RegularChainedCnf(RegularBoundaryCnf),
    ChainedClique(LayeredColoredGraph),
    ChainedIndependentSet(LayeredColoredGraph),
    CounterMachine(CounterMachine),
    ListColoring(ListColoringInstance),
    PathwidthDominatingSet(PathwidthVertexInstance),
    PathwidthIndependentSet(PathwidthVertexInstance),
    PathwidthClique(PathwidthVertexInstance),
    Scheduling(SchedulingInstance),
    UniformEmulation(UniformEmulationInstance),
    Bandwidth(BandwidthInstance),
    Reconfiguration(ReconfigInstance),
    FsaIntersection(FsaIntersectionInstance),
    Lcs(LcsInstance),
}

impl Instance {
    /// The kind tag used in the JSON form.
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::CellularAutomaton(_) => "cellular-automaton",
            Instance::ChainedCnf(_) => "chained-cnf",
            Instance::RegularChainedCnf(_) => "regular-chained-cnf",
            Instance::ChainedClique(_) => "chained-clique",
            Instance::ChainedIndependentSet(_) => "chained-independent-set",
            Instance::CounterMachine(_) => "counter-machine",
            Instance::ListColoring(_) => "list-coloring",
            Instance::PathwidthDominatingSet(_) => "pathwidth-dominating-set",
            Instance::PathwidthIndependentSet(_) => "pathwidth-independent-set",
            Instance::PathwidthClique(_) => "pathwidth-clique",
            Instance::Scheduling(_) => "scheduling",
            Instance::UniformEmulation(_) => "uniform-emulation",
            Instance::Bandwidth(_) => "bandwidth",
            Instance::Reconfiguration(_) => "reconfiguration",
            Instance::FsaIntersection(_) => "fsa-intersection",
            Instance::Lcs(_) => "lcs",
        }
    }

    /// The declared parameter (the `parameter` JSON field).
    pub fn parameter(&self) -> usize {
        match self {
            Instance::CellularAutomaton(x) => x.parameter,
            Instance::ChainedCnf(x) => x.parameter,
            Instance::RegularChainedCnf(x) => x.parameter,
            Instance::ChainedClique(x) => x.parameter,
            Instance::ChainedIndependentSet(x) => x.parameter,
            Instance::CounterMachine(x) => x.parameter,
            Instance::ListColoring(x) => x.parameter,
            Instance::PathwidthDominatingSet(x) => x.parameter,
            Instance::PathwidthIndependentSet(x) => x.parameter,
            Instance::PathwidthClique(x) => x.parameter,
            Instance::Scheduling(x) => x.parameter,
            Instance::UniformEmulation(x) => x.parameter,
            Instance::Bandwidth(x) => x.parameter,
            Instance::Reconfiguration(x) => x.parameter,
            Instance::FsaIntersection(x) => x.parameter,
            Instance::Lcs(x) => x.parameter,
        }
    }

    /// All invariant violations, empty iff the instance is well-formed.
    pub fn validate(&self) -> Vec<String> {
        let mut errs = Vec::new();
        match self {
            Instance::CellularAutomaton(x) => x.validate_into(&mut errs),
            Instance::ChainedCnf(x) => x.validate_into(&mut errs),
            Instance::RegularChainedCnf(x) => x.validate_into(&mut errs),
            Instance::ChainedClique(x) => x.validate_into(&mut errs),
            Instance::ChainedIndependentSet(x) => x.validate_into(&mut errs),
            Instance::CounterMachine(x) => x.validate_into(&mut errs),
            Instance::ListColoring(x) => x.validate_into(&mut errs),
            Instance::PathwidthDominatingSet(x) => x.validate_into(&mut errs),
            Instance::PathwidthIndependentSet(x) => x.validate_into(&mut errs),
            Instance::PathwidthClique(x) => x.validate_into(&mut errs),
            Instance::Scheduling(x) => x.validate_into(&mut errs),
            Instance::UniformEmulation(x) => x.validate_into(&mut errs),
            Instance::Bandwidth(x) => x.validate_into(&mut errs),
            Instance::Reconfiguration(x) => x.validate_into(&mut errs),
            Instance::FsaIntersection(x) => x.validate_into(&mut errs),
            Instance::Lcs(x) => x.validate_into(&mut errs),
        }
        errs
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances always serialize")
    }

    pub fn from_json(bytes: &str) -> Result<Instance, String> {
        serde_json::from_str(bytes).map_err(|e| format!("malformed instance JSON: {e}"))
    }
}

/// Check a certificate against an instance; see [`certificate::check`].
pub fn check_certificate(instance: &Instance, cert: &Certificate) -> Result<bool, String> {
    certificate::check(instance, cert)
}
