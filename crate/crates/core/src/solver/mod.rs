//! The two outer methods and their per-iteration diagnostics.

mod config;
mod cyclic;
mod parallel;
mod trace;

pub use config::{BetaSchedule, SolverConfig, Target};
pub use cyclic::{solve_cyclic, solve_cyclic_observed};
pub use parallel::{solve_parallel, solve_parallel_observed};
pub use trace::{ConvergedBy, IterationRecord, IterationTrace, Outcome};

use alloc::vec::Vec;

use crate::error::{check_dim, check_finite, Result};
use crate::geometry::{project_polyhedron, Halfspace};
use crate::linesearch::LineSearchResult;
use crate::operator::{EvalCounter, InclusionSystem};
use crate::vector::dist;

/// Cyclic component selector: `k mod m`, with multiples of `m` mapped to `m`.
/// The result is one-based.
///
/// # Panics
/// If `m == 0`.
pub fn rho(k: usize, m: usize) -> usize {
    assert!(m >= 1, "rho needs at least one component");
    match k % m {
        0 => m,
        r => r,
    }
}

/// Hooks into the intermediate objects of a solve. All methods default to
/// doing nothing.
pub trait Observer {
    /// A completed inner loop for `component` at iteration `k`.
    fn line_search(&mut self, _k: usize, _component: usize, _x: &[f64], _j_point: &[f64], _result: &LineSearchResult) {}

    /// A separating halfspace built for `component` at iteration `k`.
    fn halfspace(&mut self, _k: usize, _component: usize, _halfspace: &Halfspace) {}
}

impl Observer for () {}

/// Validated starting state shared by both methods.
pub(crate) struct Start {
    pub x: Vec<f64>,
    pub projected: bool,
}

pub(crate) fn prepare(system: &InclusionSystem, x0: &[f64], cfg: &SolverConfig) -> Result<Start> {
    cfg.validate(system.dim())?;
    check_dim(system.dim(), x0.len())?;
    check_finite(x0, "starting point")?;
    let set = system.feasible_set();
    if set.contains(x0, cfg.projection.tol) {
        Ok(Start {
            x: x0.to_vec(),
            projected: false,
        })
    } else {
        Ok(Start {
            x: project_polyhedron(x0, set, &cfg.projection)?,
            projected: true,
        })
    }
}

pub(crate) fn target_distance(cfg: &SolverConfig, x: &[f64]) -> Option<f64> {
    cfg.target.as_ref().map(|t| dist(x, &t.solution))
}

pub(crate) fn target_reached(cfg: &SolverConfig, fejer: Option<f64>) -> bool {
    match (cfg.target.as_ref().and_then(|t| t.radius), fejer) {
        (Some(r), Some(d)) => d <= r,
        _ => false,
    }
}

pub(crate) fn work_since(before: EvalCounter, now: EvalCounter) -> (u64, u64) {
    (now.a_evals - before.a_evals, now.resolvent_evals - before.resolvent_evals)
}
