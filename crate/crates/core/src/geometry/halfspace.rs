use alloc::vec::Vec;

use crate::error::{check_dim, Result};
use crate::vector::{add, dot, norm_sq};

/// Normals at or below this Euclidean norm make a halfspace the whole space.
pub const DEGENERATE_NORM: f64 = 1e-14;

/// `{y : ⟨g, y - x̄⟩ <= 0}` stored in anchored form `(g, x̄)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Halfspace {
    normal: Vec<f64>,
    anchor: Vec<f64>,
    degenerate: bool,
}

impl Halfspace {
    pub fn new(normal: Vec<f64>, anchor: Vec<f64>) -> Result<Self> {
        check_dim(normal.len(), anchor.len())?;
        let degenerate = libm::sqrt(norm_sq(&normal)) <= DEGENERATE_NORM;
        Ok(Halfspace {
            normal,
            anchor,
            degenerate,
        })
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }

    pub fn anchor(&self) -> &[f64] {
        &self.anchor
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// True when the halfspace is all of `R^n`.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Right-hand side of the offset form `⟨g, y⟩ <= ⟨g, x̄⟩`.
    pub fn offset(&self) -> f64 {
        dot(&self.normal, &self.anchor)
    }

    /// `⟨g, y - x̄⟩`; nonpositive exactly when `y` lies in the halfspace.
    pub fn signed_gap(&self, y: &[f64]) -> f64 {
        self.normal
            .iter()
            .zip(y.iter().zip(&self.anchor))
            .map(|(g, (yi, ai))| g * (yi - ai))
            .sum()
    }

    pub fn contains(&self, y: &[f64], tol: f64) -> bool {
        self.degenerate || self.signed_gap(y) <= tol
    }
}

/// Separating halfspace with normal `a_val + u` anchored at `xbar`.
pub fn build_halfspace(a_val: &[f64], u: &[f64], xbar: &[f64]) -> Result<Halfspace> {
    check_dim(a_val.len(), u.len())?;
    Halfspace::new(add(a_val, u), xbar.to_vec())
}

/// Closed-form projection `x - max(0, ⟨g, x - x̄⟩) / ‖g‖² · g`.
pub fn project_halfspace(x: &[f64], h: &Halfspace) -> Vec<f64> {
    debug_assert_eq!(x.len(), h.dim());
    let mut y = x.to_vec();
    if h.degenerate {
        return y;
    }
    let gap = h.signed_gap(x);
    if gap > 0.0 {
        let t = gap / norm_sq(&h.normal);
        for (yi, gi) in y.iter_mut().zip(&h.normal) {
            *yi -= t * gi;
        }
    }
    y
}
