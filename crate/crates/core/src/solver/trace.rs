use alloc::vec::Vec;
use core::time::Duration;

use crate::error::Error;
use crate::operator::EvalCounter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvergedBy {
    /// Every component passed the residual test at the same point.
    Residual,
    /// The iterate came within the target radius of the known solution.
    Target,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Converged(ConvergedBy),
    /// Successive iterates coincided to within `eps_fix`.
    FixedPoint,
    MaxIterations,
    Error { iteration: usize, error: Error },
}

impl Outcome {
    pub fn is_converged(&self) -> bool {
        matches!(self, Outcome::Converged(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Converged(_) => "Converged",
            Outcome::FixedPoint => "FixedPoint",
            Outcome::MaxIterations => "MaxIterations",
            Outcome::Error { .. } => "Error",
        }
    }
}

/// State and work of one outer iteration `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord {
    pub k: usize,
    /// The iterate `x^k` at the start of the iteration.
    pub x: Vec<f64>,
    /// `‖x^k - J_i(x^k, β_k)‖` for the components evaluated this iteration.
    /// Empty when the iteration stopped on the target test before any work.
    pub residuals: Vec<f64>,
    /// Component visited by the cyclic method.
    pub component: Option<usize>,
    /// Components whose residual test passed (for the cyclic method, the
    /// accumulated satisfied set).
    pub active_set: Vec<usize>,
    /// Step lengths `α` returned by the line searches.
    pub alphas: Vec<f64>,
    /// Trial exponents `j` of the line searches.
    pub depths: Vec<u32>,
    pub a_evals: u64,
    pub resolvent_evals: u64,
    /// `a_evals + resolvent_evals` summed over iterations `0..=k`.
    pub n_t_cumulative: u64,
    /// `‖x^{k+1} - x^k‖`, absent when no update was attempted.
    pub step_norm: Option<f64>,
    /// `‖x^k - x*‖` when a target solution is configured.
    pub fejer_dist: Option<f64>,
}

impl IterationRecord {
    pub fn max_residual(&self) -> Option<f64> {
        self.residuals.iter().copied().reduce(f64::max)
    }

    pub fn min_alpha(&self) -> Option<f64> {
        self.alphas.iter().copied().reduce(f64::min)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IterationTrace {
    pub records: Vec<IterationRecord>,
    pub outcome: Outcome,
    /// Last iterate reached.
    pub x_final: Vec<f64>,
    /// Value of the iteration counter `k` at termination.
    pub iterations: usize,
    pub counter: EvalCounter,
    /// The supplied starting point was outside `X` and was projected onto it.
    pub projected_start: bool,
    /// Filled in by callers that time the run.
    pub wall_time: Option<Duration>,
}

impl IterationTrace {
    pub fn n_t(&self) -> u64 {
        self.counter.n_t()
    }
}

pub(crate) struct Recorder {
    stride: usize,
    records: Vec<IterationRecord>,
    pending: Option<IterationRecord>,
}

impl Recorder {
    pub fn new(stride: usize) -> Self {
        Recorder {
            stride,
            records: Vec::new(),
            pending: None,
        }
    }

    pub fn push(&mut self, rec: IterationRecord) {
        if rec.k.is_multiple_of(self.stride) {
            self.pending = None;
            self.records.push(rec);
        } else {
            self.pending = Some(rec);
        }
    }

    pub fn finish(mut self) -> Vec<IterationRecord> {
        if let Some(rec) = self.pending.take() {
            self.records.push(rec);
        }
        self.records
    }
}
