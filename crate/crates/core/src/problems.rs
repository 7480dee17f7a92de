//! Seeded random test problems and the polyhedral normal-cone operator.
//!
//! Both example families share the constraint set `C = {x : Ax <= b}` and use
//! `B_i = N_C` for every component, with `X = C`:
//!
//! - [`ExampleKind::Linear`]: `A_i(x) = M_i x` with `M_i = Q_iᵀ Q_i`.
//! - [`ExampleKind::Cubic`]: `A_i(x) = M_i x + (x_1³, …, x_n³)`, monotone and
//!   continuous but not Lipschitz.
//!
//! Since `b >= 0` the origin is feasible, and it solves every component.
//!
//! Random entries come from ChaCha8 seeded with [`RandomSpec::seed`] via
//! `seed_from_u64`; each draw is `(next_u64() >> 11) · 2⁻⁵³ · scale`. Draw
//! order: `Q_1, …, Q_m` (row-major), then `A` (row-major), then `b`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{check_dim, Error, Result};
use crate::geometry::{project_polyhedron, Polyhedron, ProjectionSettings};
use crate::matrix::Matrix;
use crate::operator::{InclusionSystem, OperatorPair, SetValuedOperator, SingleValuedOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleKind {
    /// `A_i(x) = M_i x`.
    Linear,
    /// `A_i(x) = M_i x + f(x)` with `f` the componentwise cube.
    Cubic,
}

impl ExampleKind {
    /// 1 for [`ExampleKind::Linear`], 2 for [`ExampleKind::Cubic`].
    pub fn number(self) -> u8 {
        match self {
            ExampleKind::Linear => 1,
            ExampleKind::Cubic => 2,
        }
    }

    pub fn from_number(k: u8) -> Option<Self> {
        match k {
            1 => Some(ExampleKind::Linear),
            2 => Some(ExampleKind::Cubic),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    /// Number of constraint rows.
    pub l: usize,
    pub seed: u64,
    /// Multiplier applied to every uniform draw.
    pub scale: f64,
}

impl RandomSpec {
    pub fn new(n: usize, m: usize, seed: u64) -> Self {
        RandomSpec {
            n,
            m,
            l: 20,
            seed,
            scale: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 || self.l == 0 {
            return Err(Error::ContractViolation("n, m and l must be at least 1"));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::ContractViolation("scale must be positive and finite"));
        }
        Ok(())
    }
}

struct Uniform(ChaCha8Rng);

impl Uniform {
    fn new(seed: u64) -> Self {
        Uniform(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    fn next(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    fn matrix(&mut self, rows: usize, cols: usize, scale: f64) -> Matrix {
        let data = (0..rows * cols).map(|_| self.next() * scale).collect();
        Matrix::from_row_major(rows, cols, data).expect("sizes agree")
    }
}

/// `x ↦ Mx`, optionally plus the componentwise cube of `x`.
#[derive(Debug, Clone)]
pub struct ExampleOperator {
    matrix: Matrix,
    cubic: bool,
}

impl ExampleOperator {
    pub fn new(matrix: Matrix, cubic: bool) -> Result<Self> {
        check_dim(matrix.rows(), matrix.cols())?;
        Ok(ExampleOperator { matrix, cubic })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

impl SingleValuedOperator for ExampleOperator {
    fn dim(&self) -> usize {
        self.matrix.cols()
    }

    fn eval(&self, x: &[f64]) -> Vec<f64> {
        let mut y = self.matrix.mul_vec(x);
        if self.cubic {
            for (yi, xi) in y.iter_mut().zip(x) {
                *yi += xi * xi * xi;
            }
        }
        y
    }
}

/// `N_C` for a polyhedron `C`. The resolvent is the projection onto `C` for
/// every step size, and the bounded selection is always the zero vector.
#[derive(Debug, Clone)]
pub struct NormalConeOperator {
    set: Polyhedron,
    settings: ProjectionSettings,
}

impl NormalConeOperator {
    pub fn new(set: Polyhedron, settings: ProjectionSettings) -> Self {
        NormalConeOperator { set, settings }
    }

    pub fn set(&self) -> &Polyhedron {
        &self.set
    }
}

impl SetValuedOperator for NormalConeOperator {
    fn dim(&self) -> usize {
        self.set.dim()
    }

    fn resolvent(&self, z: &[f64], _beta: f64) -> Result<Vec<f64>> {
        project_polyhedron(z, &self.set, &self.settings)
    }

    fn select_bounded(&self, y: &[f64], _radius: f64) -> Vec<f64> {
        vec![0.0; y.len()]
    }
}

/// The raw data of a generated instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ExampleInstance {
    pub kind: ExampleKind,
    pub spec: RandomSpec,
    /// One `n × n` factor per component; `M_i = Q_iᵀ Q_i`.
    pub factors: Vec<Matrix>,
    /// `l × n` constraint matrix.
    pub constraints: Matrix,
    pub bounds: Vec<f64>,
}

impl ExampleInstance {
    pub fn generate(kind: ExampleKind, spec: RandomSpec) -> Result<Self> {
        spec.validate()?;
        let mut rng = Uniform::new(spec.seed);
        let factors = (0..spec.m).map(|_| rng.matrix(spec.n, spec.n, spec.scale)).collect();
        let constraints = rng.matrix(spec.l, spec.n, spec.scale);
        let bounds = (0..spec.l).map(|_| rng.next() * spec.scale).collect();
        Ok(ExampleInstance {
            kind,
            spec,
            factors,
            constraints,
            bounds,
        })
    }

    /// Assembles an instance from explicit data. The constraint set must
    /// contain the origin.
    pub fn from_parts(
        kind: ExampleKind,
        spec: RandomSpec,
        factors: Vec<Matrix>,
        constraints: Matrix,
        bounds: Vec<f64>,
    ) -> Result<Self> {
        spec.validate()?;
        check_dim(spec.m, factors.len())?;
        for q in &factors {
            check_dim(spec.n, q.rows())?;
            check_dim(spec.n, q.cols())?;
        }
        check_dim(spec.l, constraints.rows())?;
        check_dim(spec.n, constraints.cols())?;
        check_dim(spec.l, bounds.len())?;
        Ok(ExampleInstance {
            kind,
            spec,
            factors,
            constraints,
            bounds,
        })
    }

    pub fn constraint_set(&self) -> Result<Polyhedron> {
        Polyhedron::new(self.constraints.clone(), self.bounds.clone(), vec![0.0; self.spec.n])
    }

    pub fn operators(&self) -> Vec<ExampleOperator> {
        let cubic = self.kind == ExampleKind::Cubic;
        self.factors
            .iter()
            .map(|q| ExampleOperator {
                matrix: q.gram(),
                cubic,
            })
            .collect()
    }

    /// Builds the system with `B_i = N_C` for all `i` and `X = C`.
    pub fn to_system(&self, settings: ProjectionSettings) -> Result<InclusionSystem> {
        let set = self.constraint_set()?;
        let cone: Arc<dyn SetValuedOperator> = Arc::new(NormalConeOperator::new(set.clone(), settings));
        let pairs: Vec<OperatorPair> = self
            .operators()
            .into_iter()
            .map(|op| (Arc::new(op) as Arc<dyn SingleValuedOperator>, cone.clone()))
            .collect();
        InclusionSystem::new(pairs, set)
    }
}

/// Linear monotone instance (`A_i(x) = Q_iᵀQ_i x`).
pub fn gen_example1(spec: RandomSpec) -> Result<InclusionSystem> {
    ExampleInstance::generate(ExampleKind::Linear, spec)?.to_system(ProjectionSettings::default())
}

/// Linear-plus-cube instance (`A_i(x) = Q_iᵀQ_i x + x³`).
pub fn gen_example2(spec: RandomSpec) -> Result<InclusionSystem> {
    ExampleInstance::generate(ExampleKind::Cubic, spec)?.to_system(ProjectionSettings::default())
}
