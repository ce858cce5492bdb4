use serde::{Deserialize, Serialize};

use super::{qubit_mask, GateOp, StateVector};
use crate::error::{Error, Result};

/// A parameterized circuit: an ordered gate list over a main register followed by
/// ancillas, with a shared parameter table of `n_params` angles.
///
/// Ancillas occupy the trailing (least significant) qubit positions and are excluded
/// from cost evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Circuit {
    n_qubits: usize,
    n_ancillas: usize,
    ops: Vec<GateOp>,
    n_params: usize,
}

impl Circuit {
    /// Circuits of any width can be built and inspected; only simulation is bound by
    /// [`MAX_QUBITS`](super::MAX_QUBITS).
    pub fn new(n_qubits: usize, n_ancillas: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::QubitCount(0));
        }
        Ok(Self {
            n_qubits,
            n_ancillas,
            ops: Vec::new(),
            n_params: 0,
        })
    }

    /// Main-register width.
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_ancillas(&self) -> usize {
        self.n_ancillas
    }

    pub fn total_qubits(&self) -> usize {
        self.n_qubits + self.n_ancillas
    }

    /// Index of the `k`-th ancilla qubit.
    pub fn ancilla(&self, k: usize) -> usize {
        self.n_qubits + k
    }

    pub fn n_params(&self) -> usize {
        self.n_params
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    /// Allocates a fresh entry in the parameter table and returns its index.
    pub fn new_param(&mut self) -> usize {
        self.n_params += 1;
        self.n_params - 1
    }

    pub fn push(&mut self, gate: GateOp) -> Result<()> {
        gate.validate(self.total_qubits())?;
        if let Some(p) = gate.angle() {
            if p.index >= self.n_params {
                return Err(Error::ParamOutOfRange {
                    index: p.index,
                    n_params: self.n_params,
                });
            }
        }
        self.ops.push(gate);
        Ok(())
    }

    /// Simulates the circuit from `|0...0>` with the given parameter vector.
    pub fn run(&self, params: &[f64]) -> Result<StateVector> {
        let mut state = StateVector::new(self.total_qubits())?;
        self.run_into(params, &mut state)?;
        Ok(state)
    }

    /// Like [`Circuit::run`], but reuses `state`'s allocation. Any previous contents
    /// are discarded.
    pub fn run_into(&self, params: &[f64], state: &mut StateVector) -> Result<()> {
        if params.len() != self.n_params {
            return Err(Error::ParamCount {
                expected: self.n_params,
                got: params.len(),
            });
        }
        if state.n_qubits() != self.total_qubits() {
            return Err(Error::QubitCount(state.n_qubits()));
        }
        // While the state is still a computational basis state, permutation gates
        // just move the index around.
        let n = self.total_qubits();
        let mut index = 0usize;
        let mut sign = 1.0;
        let mut start = self.ops.len();
        for (k, op) in self.ops.iter().enumerate() {
            match *op {
                GateOp::X(q) => index ^= qubit_mask(n, q),
                GateOp::Cz(a, b) => {
                    let both = qubit_mask(n, a) | qubit_mask(n, b);
                    if index & both == both {
                        sign = -sign;
                    }
                }
                GateOp::Cnot { control, target } => {
                    if index & qubit_mask(n, control) != 0 {
                        index ^= qubit_mask(n, target);
                    }
                }
                GateOp::Cswap {
                    control,
                    targets: (t1, t2),
                } => {
                    let (m1, m2) = (qubit_mask(n, t1), qubit_mask(n, t2));
                    if index & qubit_mask(n, control) != 0 && (index & m1 == 0) != (index & m2 == 0)
                    {
                        index ^= m1 | m2;
                    }
                }
                GateOp::Ry(..) => {
                    start = k;
                    break;
                }
            }
        }
        state.reset_to_basis(index);
        if sign < 0.0 {
            state.apply_global_sign();
        }
        for op in &self.ops[start..] {
            let angle = match op.angle() {
                Some(p) => p.bind(params)?,
                None => 0.0,
            };
            state.apply_unchecked(op, angle);
        }
        Ok(())
    }
}
