use crate::error::{Error, Result};
use crate::sim::{Circuit, GateOp, ParamExpr};

/// Hardware-efficient Ry ansatz: `depth + 1` rotation layers with a fresh parameter
/// per qubit per layer, separated by `depth` linear CNOT ladders `q_k -> q_{k+1}`.
pub fn build_ry_baseline(n_qubits: usize, depth: usize) -> Result<Circuit> {
    if n_qubits == 0 {
        return Err(Error::QubitCount(0));
    }
    let mut circuit = Circuit::new(n_qubits, 0)?;
    for layer in 0..=depth {
        if layer > 0 {
            for q in 0..n_qubits - 1 {
                circuit.push(GateOp::cnot(q, q + 1))?;
            }
        }
        for q in 0..n_qubits {
            let theta = ParamExpr::new(circuit.new_param());
            circuit.push(GateOp::ry(q, theta))?;
        }
    }
    Ok(circuit)
}
