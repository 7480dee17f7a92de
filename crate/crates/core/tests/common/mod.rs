#![allow(dead_code)]

pub mod checker;
pub mod oracle;

use std::sync::Arc;

use fbsplit::geometry::Polyhedron;
use fbsplit::operator::{InclusionSystem, OperatorPair, SetValuedOperator, SingleValuedOperator, WholeSpace};
use fbsplit::Matrix;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Seeded uniform sampler for test data.
pub struct Sampler(ChaCha8Rng);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform on `[-r, r)`.
    pub fn sym(&mut self, r: f64) -> f64 {
        r * (2.0 * self.unit() - 1.0)
    }

    pub fn vec(&mut self, n: usize, r: f64) -> Vec<f64> {
        (0..n).map(|_| self.sym(r)).collect()
    }

    /// Nonempty polyhedron with `rows` random rows in `R^n`; the returned
    /// witness is strictly feasible.
    pub fn polyhedron(&mut self, n: usize, rows: usize) -> Polyhedron {
        let w = self.vec(n, 1.0);
        let a: Vec<Vec<f64>> = (0..rows).map(|_| self.vec(n, 1.0)).collect();
        let b: Vec<f64> = a
            .iter()
            .map(|r| r.iter().zip(&w).map(|(p, q)| p * q).sum::<f64>() + 0.5 * self.unit())
            .collect();
        Polyhedron::new(Matrix::from_rows(&a).unwrap(), b, w).unwrap()
    }
}

pub struct Scaled {
    pub n: usize,
    pub factor: f64,
}

impl SingleValuedOperator for Scaled {
    fn dim(&self) -> usize {
        self.n
    }
    fn eval(&self, x: &[f64]) -> Vec<f64> {
        x.iter().map(|v| self.factor * v).collect()
    }
}

/// Box `[-half, half]^n` as a polyhedron.
pub fn cube(n: usize, half: f64) -> Polyhedron {
    let mut rows = Vec::new();
    for i in 0..n {
        let mut r = vec![0.0; n];
        r[i] = 1.0;
        rows.push(r.clone());
        r[i] = -1.0;
        rows.push(r);
    }
    Polyhedron::new(Matrix::from_rows(&rows).unwrap(), vec![half; 2 * n], vec![0.0; n]).unwrap()
}

/// `m = 1`, `A(x) = factor · x`, `B = N_{R^n}`, `X` a large box; the unique
/// solution is the origin.
pub fn scaled_identity_system(n: usize, factor: f64) -> InclusionSystem {
    let pairs: Vec<OperatorPair> = vec![(
        Arc::new(Scaled { n, factor }) as Arc<dyn SingleValuedOperator>,
        Arc::new(WholeSpace { n }) as Arc<dyn SetValuedOperator>,
    )];
    InclusionSystem::new(pairs, cube(n, 1e3)).unwrap()
}
