//! Expectation estimation, derivative-free optimizers and the VQE trial driver.

mod driver;
mod estimator;
mod nelder_mead;
mod spsa;

use serde::{Deserialize, Serialize};

pub use driver::{run_vqe, trial_initial_params, ConvergenceRecord};
pub use estimator::{argmax_basis, expectation, Estimator, ExpectationMode};
pub use nelder_mead::nelder_mead;
pub use spsa::spsa;

use crate::error::{Error, Result};

/// One objective evaluation. `index` counts evaluations from 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub index: usize,
    pub params: Vec<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizeResult {
    /// Argmin over `history`.
    pub x_best: Vec<f64>,
    pub f_best: f64,
    pub history: Vec<Evaluation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OptimizerKind {
    NelderMead {
        reflection: f64,
        expansion: f64,
        contraction: f64,
        shrink: f64,
        /// Offset of the initial simplex vertices along each coordinate.
        initial_step: f64,
    },
    Spsa {
        /// Gain numerator for `a_k = a / (k + 1 + stability)^0.602`.
        a: f64,
        /// Perturbation numerator for `c_k = c / (k + 1)^0.101`.
        c: f64,
        stability: f64,
        seed: u64,
    },
}

impl OptimizerKind {
    pub fn nelder_mead() -> Self {
        OptimizerKind::NelderMead {
            reflection: 1.0,
            expansion: 2.0,
            contraction: 0.5,
            shrink: 0.5,
            initial_step: 0.1,
        }
    }

    pub fn spsa(seed: u64) -> Self {
        OptimizerKind::Spsa {
            a: 0.3,
            c: 0.2,
            stability: 20.0,
            seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub kind: OptimizerKind,
    pub max_evals: usize,
    /// Nelder-Mead stops once the simplex values span less than `tolerance` and every
    /// vertex lies within `x_tolerance` (max-norm) of the best one. SPSA always runs
    /// to `max_evals`.
    pub tolerance: f64,
    pub x_tolerance: f64,
}

impl OptimizerConfig {
    pub fn nelder_mead(max_evals: usize) -> Self {
        Self {
            kind: OptimizerKind::nelder_mead(),
            max_evals,
            tolerance: 1e-10,
            x_tolerance: 1e-6,
        }
    }

    pub fn spsa(max_evals: usize, seed: u64) -> Self {
        Self {
            kind: OptimizerKind::spsa(seed),
            max_evals,
            tolerance: 0.0,
            x_tolerance: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.max_evals == 0 {
            return bad("max_evals must be at least 1".into());
        }
        if !(self.tolerance >= 0.0 && self.x_tolerance >= 0.0) {
            return bad(format!(
                "tolerances ({}, {}) must be non-negative",
                self.tolerance, self.x_tolerance
            ));
        }
        match self.kind {
            OptimizerKind::NelderMead {
                reflection,
                expansion,
                contraction,
                shrink,
                initial_step,
            } => {
                if !(reflection > 0.0
                    && expansion > 1.0
                    && expansion > reflection
                    && contraction > 0.0
                    && contraction < 1.0
                    && shrink > 0.0
                    && shrink < 1.0
                    && initial_step != 0.0
                    && initial_step.is_finite())
                {
                    return bad(format!("invalid Nelder-Mead coefficients {:?}", self.kind));
                }
            }
            OptimizerKind::Spsa {
                a, c, stability, ..
            } => {
                if !(a > 0.0 && c > 0.0 && stability >= 0.0) {
                    return bad(format!("invalid SPSA coefficients {:?}", self.kind));
                }
            }
        }
        Ok(())
    }

    /// Dispatches to the configured optimizer.
    pub fn minimize<F>(&self, objective: F, x0: &[f64]) -> Result<OptimizeResult>
    where
        F: FnMut(&[f64]) -> f64,
    {
        match self.kind {
            OptimizerKind::NelderMead { .. } => nelder_mead(objective, x0, self),
            OptimizerKind::Spsa { .. } => spsa(objective, x0, self),
        }
    }
}

/// Records evaluations, enforces finiteness and the evaluation budget.
pub(crate) struct Tracker<F> {
    objective: F,
    max_evals: usize,
    history: Vec<Evaluation>,
}

impl<F: FnMut(&[f64]) -> f64> Tracker<F> {
    pub(crate) fn new(objective: F, max_evals: usize) -> Self {
        Self {
            objective,
            max_evals,
            history: Vec::new(),
        }
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.history.len() >= self.max_evals
    }

    pub(crate) fn eval(&mut self, x: &[f64]) -> Result<f64> {
        let value = (self.objective)(x);
        let index = self.history.len();
        if !value.is_finite() {
            return Err(Error::NonFinite {
                value,
                evaluation: index,
            });
        }
        self.history.push(Evaluation {
            index,
            params: x.to_vec(),
            value,
        });
        Ok(value)
    }

    pub(crate) fn finish(self) -> OptimizeResult {
        let best = self
            .history
            .iter()
            .min_by(|a, b| a.value.total_cmp(&b.value))
            .expect("at least one evaluation");
        OptimizeResult {
            x_best: best.params.clone(),
            f_best: best.value,
            history: self.history,
        }
    }
}

pub(crate) fn check_dimension(x0: &[f64]) -> Result<()> {
    if x0.is_empty() {
        return Err(Error::InvalidArgument(
            "optimizer needs at least one parameter".into(),
        ));
    }
    Ok(())
}
