//! Operator interfaces, the inclusion-system model, and the forward-backward map.
//!
//! Component indices are zero-based throughout the crate.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{check_dim, check_finite, Error, Result};
use crate::geometry::Polyhedron;
use crate::matrix::Matrix;
use crate::vector::dist;

/// Point-to-point monotone operator `A : R^n -> R^n`.
///
/// Monotonicity is assumed by the solvers, never checked.
pub trait SingleValuedOperator: Send + Sync {
    fn dim(&self) -> usize;
    fn eval(&self, x: &[f64]) -> Vec<f64>;
}

/// Maximal monotone operator `B`, seen through its resolvent and a bounded
/// selection of its values.
pub trait SetValuedOperator: Send + Sync {
    fn dim(&self) -> usize;

    /// `(I + βB)^{-1}(z)`.
    fn resolvent(&self, z: &[f64], beta: f64) -> Result<Vec<f64>>;

    /// Some `u ∈ B(y)` with `‖u‖ <= radius`.
    fn select_bounded(&self, y: &[f64], radius: f64) -> Vec<f64>;
}

/// Expensive oracle calls made so far.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalCounter {
    pub a_evals: u64,
    pub resolvent_evals: u64,
    pub selections: u64,
}

impl EvalCounter {
    /// Operator evaluations plus resolvent applications.
    pub fn n_t(&self) -> u64 {
        self.a_evals + self.resolvent_evals
    }
}

/// `x ↦ Mx`.
#[derive(Debug, Clone)]
pub struct LinearOperator {
    pub matrix: Matrix,
}

impl SingleValuedOperator for LinearOperator {
    fn dim(&self) -> usize {
        self.matrix.cols()
    }

    fn eval(&self, x: &[f64]) -> Vec<f64> {
        self.matrix.mul_vec(x)
    }
}

/// The zero operator on `R^n`, i.e. the normal cone of the whole space.
/// Its resolvent is the identity.
#[derive(Debug, Clone, Copy)]
pub struct WholeSpace {
    pub n: usize,
}

impl SingleValuedOperator for WholeSpace {
    fn dim(&self) -> usize {
        self.n
    }

    fn eval(&self, x: &[f64]) -> Vec<f64> {
        alloc::vec![0.0; x.len()]
    }
}

impl SetValuedOperator for WholeSpace {
    fn dim(&self) -> usize {
        self.n
    }

    fn resolvent(&self, z: &[f64], _beta: f64) -> Result<Vec<f64>> {
        Ok(z.to_vec())
    }

    fn select_bounded(&self, y: &[f64], _radius: f64) -> Vec<f64> {
        alloc::vec![0.0; y.len()]
    }
}

pub type OperatorPair = (Arc<dyn SingleValuedOperator>, Arc<dyn SetValuedOperator>);

/// `m` pairs `(A_i, B_i)` on `R^n` plus the projection set `X`.
#[derive(Clone)]
pub struct InclusionSystem {
    n: usize,
    pairs: Vec<OperatorPair>,
    feasible_set: Polyhedron,
}

impl core::fmt::Debug for InclusionSystem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("InclusionSystem")
            .field("n", &self.n)
            .field("m", &self.pairs.len())
            .field("feasible_set", &self.feasible_set)
            .finish()
    }
}

impl InclusionSystem {
    pub fn new(pairs: Vec<OperatorPair>, feasible_set: Polyhedron) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::ContractViolation("an inclusion system needs at least one pair"));
        }
        let n = feasible_set.dim();
        if n == 0 {
            return Err(Error::ContractViolation("dimension must be positive"));
        }
        for (a, b) in &pairs {
            check_dim(n, a.dim())?;
            check_dim(n, b.dim())?;
        }
        Ok(InclusionSystem {
            n,
            pairs,
            feasible_set,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn num_components(&self) -> usize {
        self.pairs.len()
    }

    pub fn single_valued(&self, i: usize) -> &dyn SingleValuedOperator {
        &*self.pairs[i].0
    }

    pub fn set_valued(&self, i: usize) -> &dyn SetValuedOperator {
        &*self.pairs[i].1
    }

    pub fn pairs(&self) -> &[OperatorPair] {
        &self.pairs
    }

    /// The set `X` the iterates are projected onto.
    pub fn feasible_set(&self) -> &Polyhedron {
        &self.feasible_set
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.pairs.len() {
            Ok(())
        } else {
            Err(Error::ContractViolation("component index out of range"))
        }
    }
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(Error::ContractViolation("step size beta must be positive and finite"))
    }
}

pub(crate) struct ForwardBackward {
    pub j: Vec<f64>,
}

pub(crate) fn forward_backward_parts(
    system: &InclusionSystem,
    i: usize,
    x: &[f64],
    beta: f64,
    counter: &mut EvalCounter,
) -> Result<ForwardBackward> {
    system.check_index(i)?;
    check_beta(beta)?;
    check_dim(system.n, x.len())?;
    let (a, b) = &system.pairs[i];
    let a_at_x = a.eval(x);
    counter.a_evals += 1;
    check_dim(system.n, a_at_x.len())?;
    check_finite(&a_at_x, "operator value")?;
    let forward: Vec<f64> = x.iter().zip(&a_at_x).map(|(xi, ai)| xi - beta * ai).collect();
    check_finite(&forward, "forward step")?;
    let j = b.resolvent(&forward, beta)?;
    counter.resolvent_evals += 1;
    check_dim(system.n, j.len())?;
    check_finite(&j, "resolvent value")?;
    Ok(ForwardBackward { j })
}

/// `J_i(x, β) = (I + βB_i)^{-1}(x - βA_i(x))`.
///
/// Adds one operator evaluation and one resolvent application to `counter`.
pub fn forward_backward(
    system: &InclusionSystem,
    i: usize,
    x: &[f64],
    beta: f64,
    counter: &mut EvalCounter,
) -> Result<Vec<f64>> {
    forward_backward_parts(system, i, x, beta, counter).map(|fb| fb.j)
}

/// `‖x - J_i(x, β)‖` for every component.
///
/// A component's entry is zero exactly when `0 ∈ A_i(x) + B_i(x)`.
pub fn residual(system: &InclusionSystem, x: &[f64], beta: f64) -> Result<Vec<f64>> {
    let mut counter = EvalCounter::default();
    (0..system.num_components())
        .map(|i| forward_backward(system, i, x, beta, &mut counter).map(|j| dist(x, &j)))
        .collect()
}

/// True iff every residual entry is at most `tol`.
pub fn verify_solution(system: &InclusionSystem, x: &[f64], beta: f64, tol: f64) -> Result<bool> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::ContractViolation("tolerance must be positive and finite"));
    }
    Ok(residual(system, x, beta)?.into_iter().all(|r| r <= tol))
}
