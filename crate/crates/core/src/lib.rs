//! Projection-splitting solvers for systems of monotone inclusion problems.
//!
//! Given pairs of maximal monotone operators `(A_i, B_i)`, `i = 1..m`, on
//! `R^n`, the goal is a point `x` with `0 ∈ A_i(x) + B_i(x)` for every `i`.
//! `A_i` is single valued and continuous but need not be Lipschitz; `B_i` is
//! accessed only through its resolvent `(I + βB_i)^{-1}` and a bounded
//! selection.
//!
//! Two outer methods are provided:
//!
//! - [`solve_parallel`] evaluates every forward-backward map at the current
//!   point, runs an Armijo-type search per unsatisfied component, and
//!   projects onto the intersection of the resulting separating halfspaces
//!   followed by the feasibility set `X`.
//! - [`solve_cyclic`] visits one component per iteration (selected by
//!   [`rho`]) and projects onto that single separating halfspace.
//!
//! Both solvers produce an [`IterationTrace`] with per-iteration residuals,
//! step lengths, operator-evaluation counters and, when a reference solution
//! is known, Fejér distances.
//!
//! The crate is `no_std` (it needs `alloc`). The `std` feature only adds
//! `std::error::Error` impls.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(clippy::all)]

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod linesearch;
pub mod matrix;
pub mod operator;
pub mod problems;
pub mod solver;
pub mod vector;

pub use error::{Error, Result};
pub use geometry::{
    project_halfspace, project_intersection, project_polyhedron, Halfspace, Polyhedron,
    ProjectionSettings,
};
pub use linesearch::{armijo_search, LineSearchParams, LineSearchResult};
pub use matrix::Matrix;
pub use operator::{
    forward_backward, residual, verify_solution, EvalCounter, InclusionSystem,
    SetValuedOperator, SingleValuedOperator,
};
pub use problems::{gen_example1, gen_example2, ExampleKind, NormalConeOperator, RandomSpec};
pub use solver::{
    rho, solve_cyclic, solve_cyclic_observed, solve_parallel, solve_parallel_observed, BetaSchedule, ConvergedBy, IterationRecord,
    IterationTrace, Observer, Outcome, SolverConfig, Target,
};
