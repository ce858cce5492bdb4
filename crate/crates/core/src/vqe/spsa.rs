use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_dimension, OptimizeResult, OptimizerConfig, OptimizerKind, Tracker};
use crate::error::Result;

const ALPHA: f64 = 0.602;
const GAMMA: f64 = 0.101;

/// Simultaneous-perturbation stochastic approximation.
///
/// Each iteration spends two evaluations at `x ± c_k Δ` with a Rademacher `Δ` and
/// steps `x -= a_k ĝ`. When the budget allows, the final iterate is evaluated once so
/// it can be reported.
pub fn spsa<F>(objective: F, x0: &[f64], config: &OptimizerConfig) -> Result<OptimizeResult>
where
    F: FnMut(&[f64]) -> f64,
{
    config.validate()?;
    check_dimension(x0)?;
    let OptimizerKind::Spsa {
        a,
        c,
        stability,
        seed,
    } = config.kind
    else {
        return super::nelder_mead(objective, x0, config);
    };
    let mut tracker = Tracker::new(objective, config.max_evals);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = x0.to_vec();
    let n = x.len();
    let mut k = 0usize;
    while config.max_evals - tracker.history.len() >= 3 {
        let ak = a / (k as f64 + 1.0 + stability).powf(ALPHA);
        let ck = c / (k as f64 + 1.0).powf(GAMMA);
        let delta: Vec<f64> = (0..n)
            .map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 })
            .collect();
        let plus: Vec<f64> = x.iter().zip(&delta).map(|(xi, d)| xi + ck * d).collect();
        let minus: Vec<f64> = x.iter().zip(&delta).map(|(xi, d)| xi - ck * d).collect();
        let diff = tracker.eval(&plus)? - tracker.eval(&minus)?;
        for (xi, d) in x.iter_mut().zip(&delta) {
            *xi -= ak * diff / (2.0 * ck * d);
        }
        k += 1;
    }
    if !tracker.exhausted() {
        tracker.eval(&x)?;
    }
    Ok(tracker.finish())
}
