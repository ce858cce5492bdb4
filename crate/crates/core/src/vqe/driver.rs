use std::f64::consts::TAU;
use std::time::{Duration, Instant};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Estimator, Evaluation, ExpectationMode, OptimizerConfig, OptimizerKind};
use crate::error::{Error, Result};
use crate::problems::{Answer, CostFunction};
use crate::sim::Circuit;

/// History and outcome of one VQE trial. One history entry per objective evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub trial_id: usize,
    pub initial_params: Vec<f64>,
    pub history: Vec<Evaluation>,
    /// Whether the most probable main-register basis was feasible at each evaluation.
    pub feasible: Vec<bool>,
    pub best_value: f64,
    pub best_params: Vec<f64>,
    /// Most probable basis at `best_params`.
    pub answer_basis: usize,
    pub answer_probability: f64,
    pub answer: Answer,
    #[serde(with = "duration_secs")]
    pub elapsed: Duration,
}

impl ConvergenceRecord {
    /// Running minimum of the recorded expectation values.
    pub fn best_so_far(&self) -> Vec<f64> {
        self.history
            .iter()
            .scan(f64::INFINITY, |best, e| {
                *best = best.min(e.value);
                Some(*best)
            })
            .collect()
    }

    /// Same record with the wall-clock time zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed: Duration::ZERO,
            ..self.clone()
        }
    }
}

mod duration_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

fn trial_rng(init_seed: u64, trial_id: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(init_seed);
    rng.set_stream(trial_id as u64);
    rng
}

/// Initial parameters of trial `trial_id`: uniform in `[0, 2π)`.
pub fn trial_initial_params(n_params: usize, init_seed: u64, trial_id: usize) -> Vec<f64> {
    let mut rng = trial_rng(init_seed, trial_id);
    (0..n_params).map(|_| rng.gen_range(0.0..TAU)).collect()
}

/// Runs `trials` independent VQE trials and returns their records in trial order.
///
/// Trial `t` draws its initial point, its shot seeds and (for SPSA) its perturbation
/// seed from stream `t` of a ChaCha generator keyed by `init_seed`, so results do not
/// depend on how trials are scheduled. Trials run on the current rayon pool.
pub fn run_vqe(
    circuit: &Circuit,
    cost: &CostFunction,
    optimizer: &OptimizerConfig,
    mode: ExpectationMode,
    trials: usize,
    init_seed: u64,
) -> Result<Vec<ConvergenceRecord>> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial required".into()));
    }
    optimizer.validate()?;
    mode.validate()?;
    if circuit.n_params() == 0 {
        return Err(Error::InvalidArgument("circuit has no parameters".into()));
    }
    // fail fast on dimension/size errors before spawning trials
    drop(Estimator::new(circuit, cost)?);
    (0..trials)
        .into_par_iter()
        .map(|t| run_trial(circuit, cost, optimizer, mode, init_seed, t))
        .collect()
}

fn run_trial(
    circuit: &Circuit,
    cost: &CostFunction,
    optimizer: &OptimizerConfig,
    mode: ExpectationMode,
    init_seed: u64,
    trial_id: usize,
) -> Result<ConvergenceRecord> {
    let start = Instant::now();
    let initial_params = trial_initial_params(circuit.n_params(), init_seed, trial_id);
    let mut rng = trial_rng(init_seed, trial_id);
    // skip past the draws used for the initial point
    for _ in 0..circuit.n_params() {
        rng.gen_range(0.0..TAU);
    }
    let mut config = *optimizer;
    if let OptimizerKind::Spsa { ref mut seed, .. } = config.kind {
        *seed ^= rng.next_u64();
    }

    let mut estimator = Estimator::new(circuit, cost)?;
    let mut feasible = Vec::new();
    let mut failure = None;
    let result = config.minimize(
        |params| {
            let eval_mode = match mode {
                ExpectationMode::Exact => mode,
                ExpectationMode::Sampled { shots, seed } => ExpectationMode::Sampled {
                    shots,
                    seed: seed ^ rng.next_u64(),
                },
            };
            match estimator.estimate(params, eval_mode) {
                Ok(value) => {
                    feasible.push(cost.is_feasible(estimator.last_argmax()));
                    value
                }
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::NAN
                }
            }
        },
        &initial_params,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let result = result?;

    let probabilities = estimator.distribution(&result.x_best)?;
    let answer_basis = super::argmax_basis(probabilities);
    let answer_probability = probabilities[answer_basis];
    Ok(ConvergenceRecord {
        trial_id,
        initial_params,
        history: result.history,
        feasible,
        best_value: result.f_best,
        best_params: result.x_best,
        answer_basis,
        answer_probability,
        answer: cost.decode(answer_basis),
        elapsed: start.elapsed(),
    })
}
