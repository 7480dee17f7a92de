use alloc::vec;
use alloc::vec::Vec;

use super::trace::{IterationRecord, Recorder};
use super::{prepare, rho, target_distance, target_reached, work_since, ConvergedBy, IterationTrace, Observer, Outcome, SolverConfig};
use crate::error::Result;
use crate::geometry::{project_halfspace, project_polyhedron, Halfspace};
use crate::linesearch::armijo_search;
use crate::operator::{forward_backward_parts, EvalCounter, InclusionSystem};
use crate::vector::dist;

/// Runs the cyclic method from `x0`: iteration `k` works only on component
/// `rho(k, m)` and projects onto its separating halfspace, then onto `X`.
///
/// Components passing the residual test are collected in a satisfied set
/// without moving the iterate; the set is cleared by every projection step,
/// and the run converges once it holds all `m` components.
pub fn solve_cyclic(system: &InclusionSystem, x0: &[f64], cfg: &SolverConfig) -> Result<IterationTrace> {
    solve_cyclic_observed(system, x0, cfg, &mut ())
}

pub fn solve_cyclic_observed(
    system: &InclusionSystem,
    x0: &[f64],
    cfg: &SolverConfig,
    observer: &mut dyn Observer,
) -> Result<IterationTrace> {
    let start = prepare(system, x0, cfg)?;
    let m = system.num_components();
    let mut x = start.x;
    let mut counter = EvalCounter::default();
    let mut recorder = Recorder::new(cfg.trace_stride);
    let mut satisfied = vec![false; m];
    let mut k = 0;
    let outcome = loop {
        if k >= cfg.k_max {
            break Outcome::MaxIterations;
        }
        match iterate(system, &x, k, cfg, &mut satisfied, &mut counter, observer) {
            Ok(Step::Stop(rec)) => {
                recorder.push(rec);
                break Outcome::Converged(ConvergedBy::Target);
            }
            Ok(Step::Satisfied(rec)) => {
                recorder.push(rec);
                k += 1;
                if satisfied.iter().all(|&s| s) {
                    break Outcome::Converged(ConvergedBy::Residual);
                }
            }
            Ok(Step::Move(rec, next)) => {
                recorder.push(rec);
                x = next;
                k += 1;
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
    Stop(IterationRecord),
    Satisfied(IterationRecord),
    Move(IterationRecord, Vec<f64>),
}

fn iterate(
    system: &InclusionSystem,
    x: &[f64],
    k: usize,
    cfg: &SolverConfig,
    satisfied: &mut [bool],
    counter: &mut EvalCounter,
    observer: &mut dyn Observer,
) -> Result<Step> {
    let before = *counter;
    let fejer_dist = target_distance(cfg, x);
    let i = rho(k, system.num_components()) - 1;
    let mut rec = IterationRecord {
        k,
        x: x.to_vec(),
        residuals: Vec::new(),
        component: Some(i),
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
        rec.component = None;
        return Ok(Step::Stop(rec));
    }

    let beta = cfg.beta.at(k)?;
    let fb = forward_backward_parts(system, i, x, beta, counter)?;
    let r = dist(x, &fb.j);
    rec.residuals.push(r);

    if r <= cfg.eps_res {
        satisfied[i] = true;
        rec.active_set = satisfied_indices(satisfied);
        rec.step_norm = Some(0.0);
        (rec.a_evals, rec.resolvent_evals) = work_since(before, *counter);
        rec.n_t_cumulative = counter.n_t();
        return Ok(Step::Satisfied(rec));
    }

    let ls = armijo_search(system.single_valued(i), system.set_valued(i), x, &fb.j, beta, &cfg.line_search)?;
    counter.a_evals += ls.a_evals;
    counter.selections += ls.a_evals;
    observer.line_search(k, i, x, &fb.j, &ls);
    rec.alphas.push(ls.alpha);
    rec.depths.push(ls.j);
    let h = Halfspace::new(ls.normal, ls.xbar)?;
    observer.halfspace(k, i, &h);

    let y = project_halfspace(x, &h);
    let next = project_polyhedron(&y, system.feasible_set(), &cfg.projection)?;
    satisfied.iter_mut().for_each(|s| *s = false);
    rec.step_norm = Some(dist(&next, x));
    (rec.a_evals, rec.resolvent_evals) = work_since(before, *counter);
    rec.n_t_cumulative = counter.n_t();
    Ok(Step::Move(rec, next))
}

fn satisfied_indices(satisfied: &[bool]) -> Vec<usize> {
    satisfied.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
}
