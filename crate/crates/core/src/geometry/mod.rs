//! Halfspaces, polyhedra and Euclidean projections onto them.
//!
//! Polyhedra and intersections of several halfspaces are handled by
//! Hildreth's dual coordinate ascent (see [`hildreth`]); a single halfspace
//! uses the closed form.

mod halfspace;
pub mod hildreth;
mod polyhedron;

pub use halfspace::{build_halfspace, project_halfspace, Halfspace, DEGENERATE_NORM};
pub use polyhedron::Polyhedron;

use alloc::vec::Vec;

use crate::error::{check_dim, Error, Result};

/// Stopping rule shared by every Hildreth projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectionSettings {
    /// Feasibility and accuracy target. A sweep terminates the method once the
    /// iterate moved by at most `tol / 10` and no constraint is violated by
    /// more than `tol`.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for ProjectionSettings {
    fn default() -> Self {
        ProjectionSettings {
            tol: 1e-8,
            max_sweeps: 100_000,
        }
    }
}

impl ProjectionSettings {
    pub fn new(tol: f64, max_sweeps: usize) -> Result<Self> {
        let s = ProjectionSettings { tol, max_sweeps };
        s.validate()?;
        Ok(s)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::ContractViolation("projection tolerance must be positive and finite"));
        }
        if self.max_sweeps == 0 {
            return Err(Error::ContractViolation("max_sweeps must be at least 1"));
        }
        Ok(())
    }
}

/// Euclidean projection of `x` onto `{y : Ay <= b}`.
pub fn project_polyhedron(x: &[f64], poly: &Polyhedron, settings: &ProjectionSettings) -> Result<Vec<f64>> {
    settings.validate()?;
    check_dim(poly.dim(), x.len())?;
    let a = poly.matrix();
    let normals: Vec<&[f64]> = (0..a.rows()).map(|i| a.row(i)).collect();
    hildreth::project(x, &normals, poly.rhs(), settings)
}

/// Euclidean projection of `x` onto the intersection of `halfspaces`.
///
/// Degenerate (whole-space) halfspaces are ignored. An empty list returns
/// `x`, and a single halfspace is projected onto in closed form.
pub fn project_intersection(
    x: &[f64],
    halfspaces: &[Halfspace],
    settings: &ProjectionSettings,
) -> Result<Vec<f64>> {
    settings.validate()?;
    for h in halfspaces {
        check_dim(x.len(), h.dim())?;
    }
    let active: Vec<&Halfspace> = halfspaces.iter().filter(|h| !h.is_degenerate()).collect();
    match active.as_slice() {
        [] => Ok(x.to_vec()),
        [h] => Ok(project_halfspace(x, h)),
        _ => {
            let normals: Vec<&[f64]> = active.iter().map(|h| h.normal()).collect();
            let offsets: Vec<f64> = active.iter().map(|h| h.offset()).collect();
            hildreth::project(x, &normals, &offsets, settings)
        }
    }
}
