use alloc::vec::Vec;

use super::trace::{IterationRecord, Recorder};
use super::{prepare, target_distance, target_reached, work_since, ConvergedBy, IterationTrace, Observer, Outcome, SolverConfig};
use crate::error::Result;
use crate::geometry::{project_intersection, project_polyhedron, Halfspace};
use crate::linesearch::armijo_search;
use crate::operator::{forward_backward_parts, EvalCounter, InclusionSystem};
use crate::vector::dist;

/// Runs the parallel method from `x0`: every component gets a
/// forward-backward step and (unless already solved) a line search, and the
/// iterate moves to `P_X(P_{H_k}(x^k))` where `H_k` intersects the separating
/// halfspaces of the unsolved components.
///
/// Invalid configurations and shape errors are returned as `Err`; failures
/// during the iteration end the run with [`Outcome::Error`].
pub fn solve_parallel(system: &InclusionSystem, x0: &[f64], cfg: &SolverConfig) -> Result<IterationTrace> {
    solve_parallel_observed(system, x0, cfg, &mut ())
}

pub fn solve_parallel_observed(
    system: &InclusionSystem,
    x0: &[f64],
    cfg: &SolverConfig,
    observer: &mut dyn Observer,
) -> Result<IterationTrace> {
    let start = prepare(system, x0, cfg)?;
    let mut x = start.x;
    let mut counter = EvalCounter::default();
    let mut recorder = Recorder::new(cfg.trace_stride);
    let mut k = 0;
    let outcome = loop {
        if k >= cfg.k_max {
            break Outcome::MaxIterations;
        }
        match iterate(system, &x, k, cfg, &mut counter, observer) {
            Ok(Step::Stop(rec, outcome)) => {
                recorder.push(rec);
                break outcome;
            }
            Ok(Step::Move(rec, next)) => {
                let fixed = rec.step_norm.is_some_and(|s| s <= cfg.eps_fix);
                recorder.push(rec);
                x = next;
                k += 1;
                if fixed {
                    break Outcome::FixedPoint;
                }
            }
            Err(error) => break Outcome::Error { iteration: k, error },
        }
    };
    Ok(IterationTrace {
        records: recorder.finish(),
        outcome,
        x_final: x,
        iterations: k,
        counter,
        projected_start: start.projected,
        wall_time: None,
    })
}

enum Step {
    Stop(IterationRecord, Outcome),
    Move(IterationRecord, Vec<f64>),
}

fn iterate(
    system: &InclusionSystem,
    x: &[f64],
    k: usize,
    cfg: &SolverConfig,
    counter: &mut EvalCounter,
    observer: &mut dyn Observer,
) -> Result<Step> {
    let before = *counter;
    let fejer_dist = target_distance(cfg, x);
    let mut rec = IterationRecord {
        k,
        x: x.to_vec(),
        residuals: Vec::new(),
        component: None,
        active_set: Vec::new(),
        alphas: Vec::new(),
        depths: Vec::new(),
        a_evals: 0,
        resolvent_evals: 0,
        n_t_cumulative: counter.n_t(),
        step_norm: None,
        fejer_dist,
    };
    if target_reached(cfg, fejer_dist) {
        return Ok(Step::Stop(rec, Outcome::Converged(ConvergedBy::Target)));
    }

    let beta = cfg.beta.at(k)?;
    let m = system.num_components();
    let mut fbs = Vec::with_capacity(m);
    for i in 0..m {
        let fb = forward_backward_parts(system, i, x, beta, counter)?;
        let r = dist(x, &fb.j);
        rec.residuals.push(r);
        if r <= cfg.eps_res {
            rec.active_set.push(i);
        }
        fbs.push(fb);
    }

    if rec.active_set.len() == m {
        (rec.a_evals, rec.resolvent_evals) = work_since(before, *counter);
        rec.n_t_cumulative = counter.n_t();
        return Ok(Step::Stop(rec, Outcome::Converged(ConvergedBy::Residual)));
    }

    // Solved components contribute H_i = R^n and are left out of H_k.
    let mut halfspaces = Vec::with_capacity(m - rec.active_set.len());
    for (i, fb) in fbs.iter().enumerate() {
        if rec.active_set.contains(&i) {
            continue;
        }
        let ls = armijo_search(system.single_valued(i), system.set_valued(i), x, &fb.j, beta, &cfg.line_search)?;
        counter.a_evals += ls.a_evals;
        counter.selections += ls.a_evals;
        observer.line_search(k, i, x, &fb.j, &ls);
        rec.alphas.push(ls.alpha);
        rec.depths.push(ls.j);
        let h = Halfspace::new(ls.normal, ls.xbar)?;
        observer.halfspace(k, i, &h);
        halfspaces.push(h);
    }

    let y = project_intersection(x, &halfspaces, &cfg.projection)?;
    let next = project_polyhedron(&y, system.feasible_set(), &cfg.projection)?;
    rec.step_norm = Some(dist(&next, x));
    (rec.a_evals, rec.resolvent_evals) = work_since(before, *counter);
    rec.n_t_cumulative = counter.n_t();
    Ok(Step::Move(rec, next))
}
