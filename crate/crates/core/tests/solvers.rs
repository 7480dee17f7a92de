mod common;

use std::sync::Arc;

use common::checker::{vanishing_steps, worst_fejer_increase, Checker};
use common::{cube, scaled_identity_system};
use fbsplit::operator::{InclusionSystem, OperatorPair, SetValuedOperator, SingleValuedOperator, WholeSpace};
use fbsplit::problems::{ExampleInstance, ExampleKind};
use fbsplit::vector::dist;
use fbsplit::*;

fn bench_config(n: usize) -> SolverConfig {
    SolverConfig {
        target: Some(Target { solution: vec![0.0; n], radius: Some(1e-3) }),
        ..SolverConfig::default()
    }
}

fn instance(kind: ExampleKind, n: usize, m: usize, seed: u64) -> InclusionSystem {
    ExampleInstance::generate(kind, RandomSpec::new(n, m, seed))
        .unwrap()
        .to_system(ProjectionSettings::default())
        .unwrap()
}

#[test]
fn parallel_stops_immediately_at_a_solution() {
    let sys = instance(ExampleKind::Linear, 5, 10, 3);
    let t = solve_parallel(&sys, &[0.0; 5], &SolverConfig::default()).unwrap();
    assert_eq!(t.outcome, Outcome::Converged(ConvergedBy::Residual));
    assert_eq!(t.iterations, 0);
    assert_eq!(t.records.len(), 1);
    assert_eq!(t.records[0].active_set, (0..10).collect::<Vec<_>>());
    assert_eq!(t.n_t(), 20);
    assert!(t.records[0].alphas.is_empty());
}

#[test]
fn cyclic_visits_each_component_once_at_a_solution() {
    let sys = instance(ExampleKind::Linear, 5, 10, 3);
    let t = solve_cyclic(&sys, &[0.0; 5], &SolverConfig::default()).unwrap();
    assert_eq!(t.outcome, Outcome::Converged(ConvergedBy::Residual));
    assert_eq!(t.iterations, 10);
    assert_eq!(t.records.len(), 10);
    assert!(t.records.iter().all(|r| r.alphas.is_empty() && r.step_norm == Some(0.0)));
    // k = 0 visits component m (zero-based m - 1), then 1, 2, ...
    let visited: Vec<usize> = t.records.iter().map(|r| r.component.unwrap()).collect();
    assert_eq!(visited, vec![9, 0, 1, 2, 3, 4, 5, 6, 7, 8]);
    assert_eq!(t.n_t(), 20);
}

#[test]
fn identity_toy_halves_the_iterate() {
    // J = 0, the search accepts α = 1/2 with normal x/2, and the halfspace
    // projection lands exactly on x/2.
    let sys = scaled_identity_system(2, 1.0);
    let cfg = SolverConfig { eps_fix: 1e-14, ..Default::default() };
    let t = solve_parallel(&sys, &[3.0, -2.0], &cfg).unwrap();
    assert_eq!(t.records[0].residuals, vec![13f64.sqrt()]);
    assert_eq!(t.records[0].alphas, vec![0.5]);
    assert_eq!(t.records[1].x, vec![1.5, -1.0]);
    assert_eq!(t.records[2].x, vec![0.75, -0.5]);
    assert_eq!(t.outcome, Outcome::Converged(ConvergedBy::Residual));
    assert!(verify_solution(&sys, &t.x_final, 1.0, 1e-9).unwrap());
    // Each iteration: forward-backward (1 + 1) plus two line-search trials.
    assert_eq!(t.records[0].a_evals, 3);
    assert_eq!(t.records[0].resolvent_evals, 1);
}

#[test]
fn converged_by_residual_verifies() {
    let sys = scaled_identity_system(3, 2.0);
    let cfg = SolverConfig { eps_fix: 1e-14, ..Default::default() };
    for t in [
        solve_parallel(&sys, &[1.0, 2.0, -3.0], &cfg).unwrap(),
        solve_cyclic(&sys, &[1.0, 2.0, -3.0], &cfg).unwrap(),
    ] {
        assert_eq!(t.outcome, Outcome::Converged(ConvergedBy::Residual));
        assert!(verify_solution(&sys, &t.x_final, cfg.beta.lower(), 10.0 * cfg.eps_res).unwrap());
    }
}

#[test]
fn example1_benchmark_size_converges() {
    let sys = instance(ExampleKind::Linear, 5, 10, 0);
    let cfg = bench_config(5);
    let p = solve_parallel(&sys, &[1.0; 5], &cfg).unwrap();
    let c = solve_cyclic(&sys, &[1.0; 5], &cfg).unwrap();
    for t in [&p, &c] {
        assert_eq!(t.outcome, Outcome::Converged(ConvergedBy::Target));
        assert!(dist(&t.x_final, &[0.0; 5]) <= 1e-3);
        assert!(t.projected_start);
    }
    assert!(p.iterations <= 1000);
    assert!(c.iterations <= 10_000);
}

#[test]
fn run_invariants_hold_on_generated_instances() {
    for kind in [ExampleKind::Linear, ExampleKind::Cubic] {
        for (n, seed) in [(2, 1u64), (5, 2), (10, 3)] {
            let sys = instance(kind, n, 10, seed);
            let cfg = bench_config(n);
            for parallel in [true, false] {
                let mut checker = Checker::new(0.1, cfg.beta.upper(), 1.0);
                let t = if parallel {
                    solve_parallel_observed(&sys, &vec![1.0; n], &cfg, &mut checker)
                } else {
                    solve_cyclic_observed(&sys, &vec![1.0; n], &cfg, &mut checker)
                }
                .unwrap();
                let label = format!("{kind:?} n={n} parallel={parallel}");
                assert!(t.outcome.is_converged(), "{label}: {:?}", t.outcome);
                checker.assert_ok();
                assert!(checker.halfspaces > 0);
                assert!(worst_fejer_increase(&t) <= 1e-9, "{label}");
                for r in t.records.iter().skip(1) {
                    assert!(sys.feasible_set().contains(&r.x, cfg.projection.tol), "{label}");
                }
                let (tail, head) = vanishing_steps(&t);
                assert!(tail <= head, "{label}: {tail} > {head}");
                let ks: Vec<usize> = t.records.iter().map(|r| r.k).collect();
                assert!(ks.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(t.n_t(), t.records.last().unwrap().n_t_cumulative);
                let summed: u64 = t.records.iter().map(|r| r.a_evals + r.resolvent_evals).sum();
                assert_eq!(summed, t.n_t());
            }
        }
    }
}

#[test]
fn single_component_runs_coincide() {
    for seed in 0..5u64 {
        let kind = if seed % 2 == 0 { ExampleKind::Linear } else { ExampleKind::Cubic };
        let sys = instance(kind, 4, 1, seed);
        let cfg = SolverConfig { k_max: 300, ..SolverConfig::default() };
        let p = solve_parallel(&sys, &[1.0; 4], &cfg).unwrap();
        let c = solve_cyclic(&sys, &[1.0; 4], &cfg).unwrap();
        let len = p.records.len().min(c.records.len());
        assert!(len > 10);
        for (a, b) in p.records.iter().zip(&c.records).take(len) {
            assert!(dist(&a.x, &b.x) <= 1e-12, "seed {seed} k {}", a.k);
        }
    }
}

#[test]
fn start_outside_feasible_set_is_projected() {
    let sys = scaled_identity_system(2, 1.0);
    let t = solve_parallel(&sys, &[5e3, 0.0], &SolverConfig { k_max: 1, ..Default::default() }).unwrap();
    assert!(t.projected_start);
    assert!((t.records[0].x[0] - 1e3).abs() < 1e-6);
    assert_eq!(t.outcome, Outcome::MaxIterations);
    assert_eq!(t.iterations, 1);
}

#[test]
fn fixed_point_stop() {
    // The first step halves x0 and moves by ‖x0‖/2 < eps_fix.
    let sys = scaled_identity_system(2, 1.0);
    let cfg = SolverConfig { eps_fix: 10.0, ..Default::default() };
    let t = solve_parallel(&sys, &[1.0, 1.0], &cfg).unwrap();
    assert_eq!(t.outcome, Outcome::FixedPoint);
    assert_eq!(t.iterations, 1);
    assert_eq!(t.x_final, vec![0.5, 0.5]);
}

#[test]
fn stride_thins_records_but_keeps_the_last() {
    let sys = instance(ExampleKind::Linear, 3, 4, 8);
    let full = solve_parallel(&sys, &[1.0; 3], &bench_config(3)).unwrap();
    let cfg = SolverConfig { trace_stride: 4, ..bench_config(3) };
    let thin = solve_parallel(&sys, &[1.0; 3], &cfg).unwrap();
    assert_eq!(full.iterations, thin.iterations);
    assert_eq!(full.n_t(), thin.n_t());
    assert_eq!(thin.records.last(), full.records.last());
    assert!(thin.records.iter().rev().skip(1).all(|r| r.k % 4 == 0));
}

struct Exploding;

impl SingleValuedOperator for Exploding {
    fn dim(&self) -> usize {
        2
    }
    fn eval(&self, x: &[f64]) -> Vec<f64> {
        if x[0] < 0.9 {
            vec![f64::NAN; 2]
        } else {
            x.to_vec()
        }
    }
}

struct Constant;

impl SingleValuedOperator for Constant {
    fn dim(&self) -> usize {
        2
    }
    fn eval(&self, _x: &[f64]) -> Vec<f64> {
        vec![0.01, 0.0]
    }
}

/// Identity resolvent with a selection that is not in the operator's graph;
/// it points against the search direction so no trial is ever accepted.
struct BadSelection;

impl SetValuedOperator for BadSelection {
    fn dim(&self) -> usize {
        2
    }
    fn resolvent(&self, z: &[f64], _beta: f64) -> Result<Vec<f64>> {
        Ok(z.to_vec())
    }
    fn select_bounded(&self, _y: &[f64], radius: f64) -> Vec<f64> {
        vec![-radius, 0.0]
    }
}

#[test]
fn iteration_failures_end_in_error_outcome() {
    let pairs: Vec<OperatorPair> = vec![(
        Arc::new(Exploding) as Arc<dyn SingleValuedOperator>,
        Arc::new(WholeSpace { n: 2 }) as Arc<dyn SetValuedOperator>,
    )];
    let sys = InclusionSystem::new(pairs, cube(2, 10.0)).unwrap();
    let t = solve_parallel(&sys, &[1.0, 1.0], &SolverConfig::default()).unwrap();
    assert!(matches!(t.outcome, Outcome::Error { iteration: 0, .. }), "{:?}", t.outcome);

    let pairs: Vec<OperatorPair> = vec![(
        Arc::new(Constant) as Arc<dyn SingleValuedOperator>,
        Arc::new(BadSelection) as Arc<dyn SetValuedOperator>,
    )];
    let sys = InclusionSystem::new(pairs, cube(2, 10.0)).unwrap();
    let t = solve_cyclic(&sys, &[1.0, 1.0], &SolverConfig::default()).unwrap();
    assert_eq!(t.outcome, Outcome::Error { iteration: 0, error: Error::LineSearchExhausted { j_max: 100 } });
}

#[test]
fn beta_schedule_bounds_are_enforced() {
    let sys = scaled_identity_system(2, 1.0);
    let cfg = SolverConfig {
        beta: BetaSchedule::from_fn(0.5, 2.0, |k| if k < 3 { 1.0 } else { 5.0 }).unwrap(),
        ..Default::default()
    };
    let t = solve_parallel(&sys, &[1.0, 1.0], &cfg).unwrap();
    assert!(matches!(t.outcome, Outcome::Error { iteration: 3, error: Error::ContractViolation(_) }));
    assert!(BetaSchedule::constant(0.0).is_err());
    assert!(BetaSchedule::from_fn(2.0, 1.0, |_| 1.5).is_err());
}

#[test]
fn varying_steps_still_converge() {
    let sys = instance(ExampleKind::Cubic, 3, 5, 4);
    let cfg = SolverConfig {
        beta: BetaSchedule::from_fn(0.5, 2.0, |k| if k % 2 == 0 { 0.5 } else { 2.0 }).unwrap(),
        ..bench_config(3)
    };
    let mut checker = Checker::new(0.1, 2.0, 1.0);
    let t = solve_parallel_observed(&sys, &[1.0; 3], &cfg, &mut checker).unwrap();
    assert!(t.outcome.is_converged());
    checker.assert_ok();
}

#[test]
fn invalid_configuration_is_rejected_up_front() {
    let sys = scaled_identity_system(2, 1.0);
    let bad = [
        SolverConfig { eps_res: 0.0, ..Default::default() },
        SolverConfig { trace_stride: 0, ..Default::default() },
        SolverConfig { line_search: LineSearchParams { theta: 1.5, ..Default::default() }, ..Default::default() },
        SolverConfig { target: Some(Target { solution: vec![0.0; 3], radius: None }), ..Default::default() },
    ];
    for cfg in bad {
        assert!(solve_parallel(&sys, &[1.0, 1.0], &cfg).is_err());
        assert!(solve_cyclic(&sys, &[1.0, 1.0], &cfg).is_err());
    }
    assert!(solve_parallel(&sys, &[1.0], &SolverConfig::default()).is_err());
    assert!(solve_parallel(&sys, &[f64::NAN, 1.0], &SolverConfig::default()).is_err());
}
