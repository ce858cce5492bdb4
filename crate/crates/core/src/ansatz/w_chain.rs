use std::ops::Range;

use crate::error::{Error, Result};
use crate::sim::{Circuit, GateOp, ParamExpr};

/// Appends a parameterized W-state preparation over `qubits` to `circuit`.
///
/// The emitted sequence is `X` on the first qubit, then for each later qubit `k` the
/// block `Ry(θ_k) · CZ(q_{k-1}, q_k) · Ry(-θ_k)`, then the CNOT ladder
/// `CNOT(q_k -> q_{k-1})` for ascending `k`. Before the ladder the amplitude sits on
/// `|1...10...0>` prefixes; the ladder turns each prefix into its one-hot basis.
///
/// The one-hot basis with the 1 in slot `k` ends up with amplitude
/// `(∏_{j<k} -sin θ_j) · cos θ_k`, where the last slot reads `cos θ_m = 1`.
///
/// Returns the range of parameter indices the chain allocated (`m - 1` of them).
pub fn append_w_chain(circuit: &mut Circuit, qubits: &[usize]) -> Result<Range<usize>> {
    let Some(&first) = qubits.first() else {
        return Err(Error::InvalidArgument(
            "W-chain needs at least one qubit".into(),
        ));
    };
    for (i, q) in qubits.iter().enumerate() {
        if qubits[..i].contains(q) {
            return Err(Error::DuplicateQubit(*q));
        }
    }
    let start = circuit.n_params();
    circuit.push(GateOp::x(first))?;
    for pair in qubits.windows(2) {
        let theta = ParamExpr::new(circuit.new_param());
        circuit.push(GateOp::ry(pair[1], theta))?;
        circuit.push(GateOp::cz(pair[0], pair[1]))?;
        circuit.push(GateOp::ry(pair[1], theta.negated()))?;
    }
    for pair in qubits.windows(2) {
        circuit.push(GateOp::cnot(pair[1], pair[0]))?;
    }
    Ok(start..circuit.n_params())
}

/// Standalone W-chain on qubits `0..m`.
pub fn build_w_chain(m: usize) -> Result<Circuit> {
    let mut circuit = Circuit::new(m, 0)?;
    let qubits: Vec<usize> = (0..m).collect();
    append_w_chain(&mut circuit, &qubits)?;
    Ok(circuit)
}
