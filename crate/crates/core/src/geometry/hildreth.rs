//! Hildreth's dual coordinate ascent for least-distance problems
//!
//! ```text
//!     minimize   ½‖y - x‖²
//!     subject to ⟨g_i, y⟩ <= h_i,  i = 1..l
//! ```
//!
//! The primal iterate is kept as `y = x - Σ λ_i g_i` with `λ >= 0`. Each
//! sweep maximizes the dual exactly in one multiplier at a time, cycling over
//! the rows in order.

use alloc::vec;
use alloc::vec::Vec;

use super::ProjectionSettings;
use crate::error::{check_dim, check_finite, Error, Result};
use crate::vector::{dist, dot, norm_sq};

/// Projects `x` onto `{y : ⟨normals[i], y⟩ <= offsets[i]}` from a zero dual start.
pub fn project(x: &[f64], normals: &[&[f64]], offsets: &[f64], settings: &ProjectionSettings) -> Result<Vec<f64>> {
    let mut multipliers = vec![0.0; normals.len()];
    project_warm(x, normals, offsets, settings, &mut multipliers)
}

/// As [`project`], starting from (and returning through) `multipliers`.
///
/// Any nonnegative vector is a valid start; passing the multipliers of a
/// previous projection onto the same rows usually saves sweeps.
pub fn project_warm(
    x: &[f64],
    normals: &[&[f64]],
    offsets: &[f64],
    settings: &ProjectionSettings,
    multipliers: &mut [f64],
) -> Result<Vec<f64>> {
    check_dim(normals.len(), offsets.len())?;
    check_dim(normals.len(), multipliers.len())?;
    check_finite(x, "projection input")?;
    for g in normals {
        check_dim(x.len(), g.len())?;
    }
    let sq: Vec<f64> = normals.iter().map(|g| norm_sq(g)).collect();
    for (i, &s) in sq.iter().enumerate() {
        if s == 0.0 {
            if offsets[i] < -settings.tol {
                return Err(Error::Infeasible);
            }
            multipliers[i] = 0.0;
        } else if multipliers[i].is_nan() || multipliers[i] < 0.0 {
            multipliers[i] = 0.0;
        }
    }

    let mut y = x.to_vec();
    for (g, &lam) in normals.iter().zip(multipliers.iter()) {
        if lam != 0.0 {
            for (yj, gj) in y.iter_mut().zip(g.iter()) {
                *yj -= lam * gj;
            }
        }
    }

    let target = settings.tol / 10.0;
    let mut start = y.clone();
    let mut displacement = f64::INFINITY;
    for _ in 0..settings.max_sweeps {
        start.copy_from_slice(&y);
        for (i, g) in normals.iter().enumerate() {
            if sq[i] == 0.0 {
                continue;
            }
            let violation = dot(g, &y) - offsets[i];
            let updated = (multipliers[i] + violation / sq[i]).max(0.0);
            let delta = updated - multipliers[i];
            if delta != 0.0 {
                for (yj, gj) in y.iter_mut().zip(g.iter()) {
                    *yj -= delta * gj;
                }
                multipliers[i] = updated;
            }
        }
        displacement = dist(&y, &start);
        if !displacement.is_finite() {
            return Err(Error::NonFinite("Hildreth iterate"));
        }
        if displacement <= target && max_violation(&y, normals, offsets) <= settings.tol {
            return Ok(y);
        }
    }
    Err(Error::ProjectionNotConverged {
        sweeps: settings.max_sweeps,
        displacement,
        last: y,
    })
}

fn max_violation(y: &[f64], normals: &[&[f64]], offsets: &[f64]) -> f64 {
    normals
        .iter()
        .zip(offsets)
        .map(|(g, h)| dot(g, y) - h)
        .fold(0.0, f64::max)
}
