//! Seeded benchmark runs in the layout of the iteration/`nT` tables.

use std::fmt::Write as _;
use std::time::Instant;

use fbsplit::geometry::ProjectionSettings;
use fbsplit::problems::{ExampleInstance, ExampleKind};
use fbsplit::vector::norm;
use fbsplit::{
    solve_cyclic, solve_parallel, BetaSchedule, IterationTrace, LineSearchParams, Outcome, RandomSpec, SolverConfig,
    Target,
};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Parallel,
    Cyclic,
    Both,
}

impl Algorithm {
    fn expand(self) -> &'static [Algorithm] {
        match self {
            Algorithm::Parallel => &[Algorithm::Parallel],
            Algorithm::Cyclic => &[Algorithm::Cyclic],
            Algorithm::Both => &[Algorithm::Parallel, Algorithm::Cyclic],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Parallel => "parallel",
            Algorithm::Cyclic => "cyclic",
            Algorithm::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// 1 = linear operators, 2 = linear plus cube.
    pub example: u8,
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub seed: u64,
    pub scale: f64,
    pub delta: f64,
    pub theta: f64,
    pub beta: f64,
    /// Selection radius R.
    pub radius: f64,
    /// Stop once `‖x^k‖ <= tol_dist` (the generated instances are solved by 0).
    pub tol_dist: f64,
    pub eps_res: f64,
    pub eps_proj: f64,
    pub k_max: usize,
    pub j_max: u32,
    pub trace_stride: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            example: 1,
            algorithm: Algorithm::Both,
            n: 5,
            m: 10,
            l: 20,
            seed: 0,
            scale: 1.0,
            delta: 0.1,
            theta: 0.5,
            beta: 1.0,
            radius: 1.0,
            tol_dist: 1e-3,
            eps_res: 1e-10,
            eps_proj: 1e-8,
            k_max: 100_000,
            j_max: 100,
            trace_stride: 1,
        }
    }
}

impl RunConfig {
    pub fn spec(&self) -> RandomSpec {
        RandomSpec {
            n: self.n,
            m: self.m,
            l: self.l,
            seed: self.seed,
            scale: self.scale,
        }
    }

    pub fn kind(&self) -> Result<ExampleKind> {
        ExampleKind::from_number(self.example).ok_or_else(|| Error::Config(format!("unknown example {}", self.example)))
    }

    pub fn projection(&self) -> ProjectionSettings {
        ProjectionSettings {
            tol: self.eps_proj,
            max_sweeps: 100_000,
        }
    }

    pub fn solver_config(&self) -> Result<SolverConfig> {
        if self.tol_dist.is_nan() || self.tol_dist <= 0.0 {
            return Err(Error::Config("tol_dist must be positive".into()));
        }
        let cfg = SolverConfig {
            line_search: LineSearchParams {
                theta: self.theta,
                delta: self.delta,
                radius: self.radius,
                j_max: self.j_max,
            },
            beta: BetaSchedule::constant(self.beta)?,
            eps_res: self.eps_res,
            eps_fix: self.eps_res,
            projection: self.projection(),
            k_max: self.k_max,
            target: Some(Target {
                solution: vec![0.0; self.n],
                radius: Some(self.tol_dist),
            }),
            trace_stride: self.trace_stride,
        };
        cfg.validate(self.n)?;
        Ok(cfg)
    }
}

/// One line of the report table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub algorithm: Algorithm,
    pub example: u8,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub iter: usize,
    #[serde(rename = "nT")]
    pub n_t: u64,
    pub wall_time_seconds: f64,
    pub outcome: String,
    pub final_dist: f64,
    #[serde(default)]
    pub error: Option<String>,
}

impl ReportRow {
    pub fn converged(&self) -> bool {
        self.outcome == "Converged"
    }
}

pub struct BenchRun {
    pub row: ReportRow,
    pub trace: IterationTrace,
}

/// Generates the instance described by `cfg` and runs the requested
/// algorithms on it from `x0 = (1, …, 1)`.
pub fn run_benchmark(cfg: &RunConfig) -> Result<Vec<BenchRun>> {
    let inst = ExampleInstance::generate(cfg.kind()?, cfg.spec())?;
    run_instance(&inst, cfg)
}

/// As [`run_benchmark`] on an existing instance; the instance's shape and
/// seed override those in `cfg`.
pub fn run_instance(inst: &ExampleInstance, cfg: &RunConfig) -> Result<Vec<BenchRun>> {
    let cfg = RunConfig {
        example: inst.kind.number(),
        n: inst.spec.n,
        m: inst.spec.m,
        l: inst.spec.l,
        seed: inst.spec.seed,
        scale: inst.spec.scale,
        ..cfg.clone()
    };
    let system = inst.to_system(cfg.projection())?;
    let solver_cfg = cfg.solver_config()?;
    let x0 = vec![1.0; cfg.n];
    cfg.algorithm
        .expand()
        .iter()
        .map(|&alg| {
            let start = Instant::now();
            let mut trace = match alg {
                Algorithm::Cyclic => solve_cyclic(&system, &x0, &solver_cfg)?,
                _ => solve_parallel(&system, &x0, &solver_cfg)?,
            };
            let elapsed = start.elapsed();
            trace.wall_time = Some(elapsed);
            let error = match &trace.outcome {
                Outcome::Error { iteration, error } => Some(format!("iteration {iteration}: {error}")),
                _ => None,
            };
            let row = ReportRow {
                algorithm: alg,
                example: cfg.example,
                n: cfg.n,
                m: cfg.m,
                seed: cfg.seed,
                iter: trace.iterations,
                n_t: trace.n_t(),
                wall_time_seconds: elapsed.as_secs_f64(),
                outcome: trace.outcome.label().to_owned(),
                final_dist: norm(&trace.x_final),
                error,
            };
            Ok(BenchRun { row, trace })
        })
        .collect()
}

/// Aligned text table.
pub fn format_table(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<9} {:>3} {:>4} {:>4} {:>6} {:>8} {:>8} {:>12} {:>11}  outcome",
        "algorithm", "ex", "n", "m", "seed", "iter", "nT", "time(s)", "final_dist"
    );
    for r in rows {
        let _ = write!(
            out,
            "{:<9} {:>3} {:>4} {:>4} {:>6} {:>8} {:>8} {:>12.6} {:>11.3e}  {}",
            r.algorithm.name(),
            r.example,
            r.n,
            r.m,
            r.seed,
            r.iter,
            r.n_t,
            r.wall_time_seconds,
            r.final_dist,
            r.outcome
        );
        if let Some(e) = &r.error {
            let _ = write!(out, " ({e})");
        }
        out.push('\n');
    }
    out
}
