//! Armijo-type backtracking along the segment from `x` to its
//! forward-backward point `J`.
//!
//! Trial `j` uses `y_j = θ^j J + (1 - θ^j) x` and a bounded selection
//! `u_j ∈ B(y_j)`, and is accepted when
//!
//! ```text
//!     ⟨A(y_j) + u_j, x - J⟩ >= (δ / β) ‖x - J‖²
//! ```

use alloc::vec::Vec;

use crate::error::{check_dim, check_finite, Error, Result};
use crate::operator::{check_beta, SetValuedOperator, SingleValuedOperator};
use crate::vector::{add, convex_comb, dot, norm, norm_sq, sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSearchParams {
    /// Backtracking factor θ ∈ (0, 1).
    pub theta: f64,
    /// Sufficient-slope constant δ ∈ (0, 1).
    pub delta: f64,
    /// Radius R of the ball the selection must lie in.
    pub radius: f64,
    /// Largest trial exponent; `j_max + 1` trials are made at most.
    pub j_max: u32,
}

impl Default for LineSearchParams {
    fn default() -> Self {
        LineSearchParams {
            theta: 0.5,
            delta: 0.1,
            radius: 1.0,
            j_max: 100,
        }
    }
}

impl LineSearchParams {
    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.theta > 0.0 && self.theta < 1.0) {
            return Err(Error::ContractViolation("theta must lie in (0, 1)"));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::ContractViolation("delta must lie in (0, 1)"));
        }
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::ContractViolation("selection radius must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineSearchResult {
    /// `θ^j`.
    pub alpha: f64,
    pub j: u32,
    /// Accepted trial point `x̄ = αJ + (1 - α)x`.
    pub xbar: Vec<f64>,
    /// Selection `ū ∈ B(x̄)` used at the accepted trial.
    pub ubar: Vec<f64>,
    /// `A(x̄) + ū`, the normal of the separating halfspace.
    pub normal: Vec<f64>,
    /// Operator evaluations consumed (one per trial).
    pub a_evals: u64,
    /// `⟨A(x̄) + ū, x - J⟩` at the accepted trial.
    pub slope: f64,
    /// `(δ / β) ‖x - J‖²`.
    pub threshold: f64,
    /// Slope of the rejected trial `j - 1`, when `j >= 1`.
    pub rejected_slope: Option<f64>,
}

/// Runs the inner loop for one component.
///
/// `x` must differ from `j_point`; the caller handles components whose
/// forward-backward point is already a fixed point.
pub fn armijo_search(
    a: &dyn SingleValuedOperator,
    b: &dyn SetValuedOperator,
    x: &[f64],
    j_point: &[f64],
    beta: f64,
    params: &LineSearchParams,
) -> Result<LineSearchResult> {
    params.validate()?;
    check_beta(beta)?;
    check_dim(x.len(), j_point.len())?;
    let direction = sub(x, j_point);
    let gap_sq = norm_sq(&direction);
    if gap_sq == 0.0 {
        return Err(Error::ContractViolation("line search requires x != J"));
    }
    let threshold = params.delta / beta * gap_sq;

    let mut rejected_slope = None;
    for j in 0..=params.j_max {
        let alpha = libm::pow(params.theta, f64::from(j));
        let y = convex_comb(alpha, j_point, x);
        let a_at_y = a.eval(&y);
        check_dim(x.len(), a_at_y.len())?;
        let u = b.select_bounded(&y, params.radius);
        check_dim(x.len(), u.len())?;
        if norm(&u) > params.radius {
            return Err(Error::ContractViolation("bounded selection exceeds the radius"));
        }
        let normal = add(&a_at_y, &u);
        let slope = dot(&normal, &direction);
        if !slope.is_finite() {
            return Err(Error::NonFinite("line-search slope"));
        }
        if slope >= threshold {
            check_finite(&normal, "halfspace normal")?;
            return Ok(LineSearchResult {
                alpha,
                j,
                xbar: y,
                ubar: u,
                normal,
                a_evals: u64::from(j) + 1,
                slope,
                threshold,
                rejected_slope,
            });
        }
        rejected_slope = Some(slope);
    }
    Err(Error::LineSearchExhausted { j_max: params.j_max })
}
