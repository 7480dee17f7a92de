use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::geometry::ProjectionSettings;
use crate::linesearch::LineSearchParams;

#[derive(Clone)]
enum BetaRule {
    Constant(f64),
    Custom(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

/// Step sizes `β_k`, confined to `[lower, upper]`.
#[derive(Clone)]
pub struct BetaSchedule {
    lower: f64,
    upper: f64,
    rule: BetaRule,
}

impl fmt::Debug for BetaSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rule {
            BetaRule::Constant(b) => write!(f, "BetaSchedule::Constant({b})"),
            BetaRule::Custom(_) => write!(f, "BetaSchedule::Custom([{}, {}])", self.lower, self.upper),
        }
    }
}

impl BetaSchedule {
    pub fn constant(beta: f64) -> Result<Self> {
        Self::check_bounds(beta, beta)?;
        Ok(BetaSchedule {
            lower: beta,
            upper: beta,
            rule: BetaRule::Constant(beta),
        })
    }

    /// A schedule given by `rule`; every value it produces must lie in `[lower, upper]`.
    pub fn from_fn<F>(lower: f64, upper: f64, rule: F) -> Result<Self>
    where
        F: Fn(usize) -> f64 + Send + Sync + 'static,
    {
        Self::check_bounds(lower, upper)?;
        Ok(BetaSchedule {
            lower,
            upper,
            rule: BetaRule::Custom(Arc::new(rule)),
        })
    }

    fn check_bounds(lower: f64, upper: f64) -> Result<()> {
        if lower > 0.0 && lower <= upper && upper.is_finite() {
            Ok(())
        } else {
            Err(Error::ContractViolation("beta bounds must satisfy 0 < lower <= upper < inf"))
        }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn at(&self, k: usize) -> Result<f64> {
        let beta = match &self.rule {
            BetaRule::Constant(b) => *b,
            BetaRule::Custom(f) => f(k),
        };
        if beta >= self.lower && beta <= self.upper {
            Ok(beta)
        } else {
            Err(Error::ContractViolation("beta schedule left its declared bounds"))
        }
    }
}

/// A known solution, used for distance diagnostics and optionally as a
/// stopping rule.
#[derive(Debug, Clone, PartialEq)]
pub struct Target {
    pub solution: Vec<f64>,
    /// Stop once `‖x^k - solution‖ <= radius`.
    pub radius: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// θ, δ, the selection radius R and the inner-loop cap.
    pub line_search: LineSearchParams,
    pub beta: BetaSchedule,
    /// A component counts as solved when `‖x - J_i(x, β)‖ <= eps_res`.
    pub eps_res: f64,
    /// The parallel method stops when `‖x^{k+1} - x^k‖ <= eps_fix`.
    pub eps_fix: f64,
    /// Tolerances for projections onto `X` and onto halfspace intersections.
    pub projection: ProjectionSettings,
    pub k_max: usize,
    pub target: Option<Target>,
    /// Keep every `trace_stride`-th record (the last one is always kept).
    pub trace_stride: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            line_search: LineSearchParams::default(),
            beta: BetaSchedule::constant(1.0).expect("valid constant"),
            eps_res: 1e-10,
            eps_fix: 1e-10,
            projection: ProjectionSettings::default(),
            k_max: 100_000,
            target: None,
            trace_stride: 1,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self, n: usize) -> Result<()> {
        self.line_search.validate()?;
        self.projection.validate()?;
        for (v, what) in [
            (self.eps_res, "eps_res must be positive and finite"),
            (self.eps_fix, "eps_fix must be positive and finite"),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::ContractViolation(what));
            }
        }
        if self.trace_stride == 0 {
            return Err(Error::ContractViolation("trace stride must be at least 1"));
        }
        if let Some(t) = &self.target {
            crate::error::check_dim(n, t.solution.len())?;
            if let Some(r) = t.radius {
                if r.is_nan() || r <= 0.0 {
                    return Err(Error::ContractViolation("target radius must be positive"));
                }
            }
        }
        Ok(())
    }
}
