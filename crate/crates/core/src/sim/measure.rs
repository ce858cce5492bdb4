use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::StateVector;
use crate::error::{Error, Result};

/// Marginal distribution of the leading `n_main` qubits, summing out the rest.
///
/// The result has `2^n_main` entries indexed by the main-register basis label.
pub fn main_register_probabilities(state: &StateVector, n_main: usize) -> Result<Vec<f64>> {
    if n_main == 0 || n_main > state.n_qubits() {
        return Err(Error::MainRegister {
            n_main,
            n_qubits: state.n_qubits(),
        });
    }
    let shift = state.n_qubits() - n_main;
    let block = 1usize << shift;
    Ok(state
        .amplitudes()
        .chunks_exact(block)
        .map(|chunk| chunk.iter().map(|a| a.norm_sqr()).sum())
        .collect())
}

/// Draws `shots` basis indices from `probabilities`, deterministically for a seed.
pub fn sample(probabilities: &[f64], shots: usize, seed: u64) -> Result<Vec<usize>> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let total: f64 = probabilities.iter().sum();
    if (total - 1.0).abs() > 1e-8 || probabilities.iter().any(|p| *p < 0.0 || !p.is_finite()) {
        return Err(Error::Unnormalized(total));
    }
    let dist = WeightedIndex::new(probabilities)
        .map_err(|e| Error::InvalidArgument(format!("bad distribution: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..shots).map(|_| dist.sample(&mut rng)).collect())
}
