use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::CostFunction;
use crate::sim::{main_register_probabilities, sample, Circuit, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ExpectationMode {
    /// `Σ_z p(z) cost(z)` over the exact main-register distribution.
    Exact,
    /// Mean cost over `shots` draws from the main-register distribution.
    Sampled { shots: usize, seed: u64 },
}

impl ExpectationMode {
    pub fn validate(&self) -> Result<()> {
        match self {
            ExpectationMode::Sampled { shots: 0, .. } => Err(Error::ZeroShots),
            _ => Ok(()),
        }
    }
}

/// Evaluates `<ψ(θ)|H|ψ(θ)>` for one circuit and one diagonal cost, reusing the
/// statevector allocation and a precomputed cost table across calls.
pub struct Estimator<'a> {
    circuit: &'a Circuit,
    table: Vec<f64>,
    state: StateVector,
    probabilities: Vec<f64>,
}

impl<'a> Estimator<'a> {
    pub fn new(circuit: &'a Circuit, cost: &CostFunction) -> Result<Self> {
        if cost.n_bits() != circuit.n_qubits() {
            return Err(Error::DimensionMismatch {
                cost_bits: cost.n_bits(),
                circuit_bits: circuit.n_qubits(),
            });
        }
        Ok(Self {
            circuit,
            table: cost.table()?,
            state: StateVector::new(circuit.total_qubits())?,
            probabilities: Vec::new(),
        })
    }

    pub fn circuit(&self) -> &Circuit {
        self.circuit
    }

    /// Main-register distribution at `params`.
    pub fn distribution(&mut self, params: &[f64]) -> Result<&[f64]> {
        self.circuit.run_into(params, &mut self.state)?;
        self.probabilities = main_register_probabilities(&self.state, self.circuit.n_qubits())?;
        Ok(&self.probabilities)
    }

    pub fn estimate(&mut self, params: &[f64], mode: ExpectationMode) -> Result<f64> {
        mode.validate()?;
        self.distribution(params)?;
        match mode {
            ExpectationMode::Exact => Ok(self
                .probabilities
                .iter()
                .zip(&self.table)
                .map(|(p, c)| p * c)
                .sum()),
            ExpectationMode::Sampled { shots, seed } => {
                let draws = sample(&self.probabilities, shots, seed)?;
                Ok(draws.iter().map(|&z| self.table[z]).sum::<f64>() / shots as f64)
            }
        }
    }

    /// Most probable basis of the last computed distribution; ties go to the lower
    /// index.
    pub fn last_argmax(&self) -> usize {
        argmax_basis(&self.probabilities)
    }
}

/// Index of the largest probability, lowest index on ties.
pub fn argmax_basis(probabilities: &[f64]) -> usize {
    let mut best = 0;
    for (z, &p) in probabilities.iter().enumerate() {
        if p > probabilities[best] {
            best = z;
        }
    }
    best
}

/// One-shot expectation value; see [`Estimator`] for repeated evaluation.
pub fn expectation(
    circuit: &Circuit,
    params: &[f64],
    cost: &CostFunction,
    mode: ExpectationMode,
) -> Result<f64> {
    Estimator::new(circuit, cost)?.estimate(params, mode)
}
