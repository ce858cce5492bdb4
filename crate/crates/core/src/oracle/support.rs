use std::f64::consts::{FRAC_PI_2, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sim::{main_register_probabilities, Circuit, StateVector};

/// Empirical support of an ansatz over its main register.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportReport {
    pub n_main: usize,
    /// Bases seen with probability above `epsilon` at some probe, ascending.
    pub basis_set: Vec<usize>,
    /// Bases at or below `epsilon` at every probe, ascending.
    pub always_zero: Vec<usize>,
    /// Random draws, not counting the two fixed probes.
    pub draws: usize,
    pub epsilon: f64,
    /// Largest probability any `always_zero` basis reached.
    pub max_excluded_probability: f64,
}

impl SupportReport {
    pub fn len(&self) -> usize {
        self.basis_set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis_set.is_empty()
    }

    pub fn contains(&self, z: usize) -> bool {
        self.basis_set.binary_search(&z).is_ok()
    }
}

/// Estimates which main-register bases the circuit can populate.
///
/// Probes the all-zero vector, the all-`π/2` vector and `draws` vectors uniform in
/// `[0, 2π)`. A basis belongs to the support if its marginal probability exceeds
/// `epsilon` at any probe. This is a sampling procedure: a basis reachable only on a
/// measure-zero parameter set can be missed.
pub fn support(
    circuit: &Circuit,
    n_main: usize,
    draws: usize,
    seed: u64,
    epsilon: f64,
) -> Result<SupportReport> {
    if n_main == 0 || n_main > circuit.total_qubits() {
        return Err(Error::MainRegister {
            n_main,
            n_qubits: circuit.total_qubits(),
        });
    }
    let n_params = circuit.n_params();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probes = [vec![0.0; n_params], vec![FRAC_PI_2; n_params]]
        .into_iter()
        .chain((0..draws).map(|_| (0..n_params).map(|_| rng.gen_range(0.0..TAU)).collect()));

    let mut peak = vec![0.0f64; 1 << n_main];
    let mut state = StateVector::new(circuit.total_qubits())?;
    for params in probes {
        circuit.run_into(&params, &mut state)?;
        let p = main_register_probabilities(&state, n_main)?;
        for (m, pz) in peak.iter_mut().zip(p) {
            *m = m.max(pz);
        }
    }
    let (basis_set, always_zero): (Vec<usize>, Vec<usize>) =
        (0..peak.len()).partition(|&z| peak[z] > epsilon);
    let max_excluded_probability = always_zero.iter().map(|&z| peak[z]).fold(0.0, f64::max);
    Ok(SupportReport {
        n_main,
        basis_set,
        always_zero,
        draws,
        epsilon,
        max_excluded_probability,
    })
}
