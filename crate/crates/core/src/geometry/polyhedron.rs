use alloc::vec::Vec;

use crate::error::{check_dim, check_finite, Error, Result};
use crate::matrix::Matrix;
use crate::vector::dot;

/// Slack allowed for the stored witness when a polyhedron is constructed.
pub const WITNESS_TOL: f64 = 1e-10;

/// `{x : Ax <= b}` together with a point certifying it is nonempty.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyhedron {
    a: Matrix,
    b: Vec<f64>,
    witness: Vec<f64>,
}

impl Polyhedron {
    pub fn new(a: Matrix, b: Vec<f64>, witness: Vec<f64>) -> Result<Self> {
        if a.rows() == 0 {
            return Err(Error::ContractViolation("polyhedron needs at least one row"));
        }
        check_dim(a.rows(), b.len())?;
        check_dim(a.cols(), witness.len())?;
        check_finite(a.as_slice(), "constraint matrix")?;
        check_finite(&b, "constraint bounds")?;
        let p = Polyhedron { a, b, witness };
        if p.max_violation(&p.witness) > WITNESS_TOL {
            return Err(Error::ContractViolation("witness point violates the constraints"));
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.a.cols()
    }

    pub fn num_rows(&self) -> usize {
        self.a.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn rhs(&self) -> &[f64] {
        &self.b
    }

    pub fn witness(&self) -> &[f64] {
        &self.witness
    }

    /// `max_i (A_i·x - b_i)`, clipped below at zero.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        (0..self.a.rows())
            .map(|i| dot(self.a.row(i), x) - self.b[i])
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.max_violation(x) <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn witness_must_be_feasible() {
        let err = Polyhedron::new(Matrix::identity(2), vec![0.0, 0.0], vec![1.0, 0.0]);
        assert!(matches!(err, Err(Error::ContractViolation(_))));
    }

    #[test]
    fn membership() {
        let p = Polyhedron::new(Matrix::identity(2), vec![1.0, 2.0], vec![0.0, 0.0]).unwrap();
        assert!(p.contains(&[1.0, 2.0], 0.0));
        assert!(!p.contains(&[1.1, 0.0], 1e-3));
        assert!((p.max_violation(&[1.5, 0.0]) - 0.5).abs() < 1e-15);
    }
}
