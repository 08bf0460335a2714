//! redlab: a laboratory for chained and path-structured decision problems.
//!
//! The crate has four library layers and a CLI on top:
//!
//! * [`instances`] — typed problem instances with validators, certificate
//!   checkers, and a canonical JSON interchange format,
//! * [`solvers`] — for every problem two independent decision procedures
//!   (an `Exhaustive` oracle and a `Structured` algorithm) that must agree,
//! * [`reductions`] — parameter-preserving instance transformations between
//!   the problems, each reporting its gadget constants and parameter bound,
//! * [`harness`] — instance enumerators/generators and a verifier that
//!   replays every reduction against both-side oracles on small instances,
//!   including deliberately broken mutant variants that must be caught.
//!
//! Everything is deterministic: generators are seeded, orderings are
//! lexicographic, and solvers take explicit step budgets and fail loudly
//! (rather than silently truncating) when a search would exceed them.

pub mod harness;
pub mod instances;
pub mod reductions;
pub mod solvers;
