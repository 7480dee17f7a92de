//! Small dense vector kernels on `f64` slices.

use alloc::vec::Vec;

pub fn dot(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn norm_sq(x: &[f64]) -> f64 {
    dot(x, x)
}

pub fn norm(x: &[f64]) -> f64 {
    libm::sqrt(norm_sq(x))
}

/// `‖x - y‖`
pub fn dist(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    libm::sqrt(x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum())
}

/// y += a * x
pub fn axpy(a: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

pub fn sub(x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add(x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// `t * x + (1 - t) * y`
pub fn convex_comb(t: f64, x: &[f64], y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(a, b)| t * a + (1.0 - t) * b).collect()
}

pub fn max_abs(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}
