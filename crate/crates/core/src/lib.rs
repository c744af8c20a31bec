//! Constructive partitioning of `{1, ..., n}` into `k` disjoint containers
//! that all sum to the same target `t`.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! - [`instance`]: triangular numbers, feasibility of `(n, k, t)` and the
//!   enumeration of every feasible `(k, t)` for a given `n`.
//! - [`partitioning`]: containers, partitionings and the total verifier.
//! - [`pisolve`]: the recursive decomposition solver, driven iteratively over
//!   slot frames so that stack depth does not grow with `n`.
//! - [`meander`]: the closed-form meander and Gauss constructions.
//! - [`oracle`]: a small backtracking reference solver used for differential
//!   testing.
//! - [`cut`]: conversion of a partitioning into a cutting-sticks plan.
//!
//! ```
//! use equisum_core::{make_instance, pisolve::solve, verify};
//!
//! let inst = make_instance(45, 9, 115).unwrap();
//! let p = solve(inst, false).unwrap();
//! assert!(verify(&p).valid());
//! assert_eq!(p.containers()[0].elements(), &[15, 27, 28, 45]);
//! ```

#![no_std]

extern crate alloc;

pub mod cut;
mod error;
pub mod instance;
pub mod meander;
pub mod oracle;
pub mod partitioning;
pub mod pisolve;

pub use cut::{cut_plan, CutPlan};
pub use error::{Error, InvariantKind, InvariantViolation};
pub use instance::{delta, divisor_pairs, enumerate_feasible, make_instance, Instance};
pub use meander::{
    gauss_params, gauss_partitioning, meander_applicable, meander_matrix, meander_partitioning,
    GaussParams, MeanderMatrix, Parity,
};
pub use oracle::{brute_force_solve, existence_sweep, OracleLimits, SweepEntry};
pub use partitioning::{verify, Container, Partitioning, VerificationReport};
pub use pisolve::{solve, solve_detailed, CaseStep, CaseTag, SlotFrame, Solution};
