//! Answer-preserving instance transformations with bounded parameter growth.
//!
//! Every transformation consumes a validated source instance and emits a
//! [`ReductionOutput`]: the target instance, the target's parameter, and a
//! map of named construction constants that the verification harness
//! recomputes independently from the source. Transformations are
//! deterministic — gadget vertices and variables are laid out in a fixed
//! lexicographic order — so repeated runs are byte-identical.

pub mod cellular;
pub mod cnf;
pub mod coloring;
pub mod counter;
pub mod layered;
pub mod pathwidth;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::instances::Instance;

/// Result of applying a reduction: the built instance, its parameter, and
/// the construction constants (sizes, thresholds, budgets) the instance was
/// built from, for downstream formula checks.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ReductionOutput {
    pub target: Instance,
    pub parameter: usize,
    pub constants: BTreeMap<String, i64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReductionError {
    #[error("invalid source instance: {}", .0.join("; "))]
    InvalidSource(Vec<String>),
    /// The source fails a precondition of the construction.
    #[error("{0}")]
    Unsupported(String),
    #[error("unknown reduction id `{0}`")]
    UnknownId(String),
    #[error("`{id}` expects a {expected} source, got {got}")]
    WrongKind { id: String, expected: &'static str, got: &'static str },
}

pub(crate) fn constant_map<const N: usize>(pairs: [(&str, i64); N]) -> BTreeMap<String, i64> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
