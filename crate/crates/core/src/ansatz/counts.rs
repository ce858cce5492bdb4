use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::sim::{Circuit, GateKind};

/// Resource counts in the form used for comparing ansätze.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateCounts {
    /// Distinct parameter-table entries referenced by Ry gates.
    pub params: usize,
    /// X and Ry gates.
    pub one_qubit: usize,
    /// CZ and CNOT gates.
    pub two_qubit: usize,
    pub cswap: usize,
}

pub fn gate_counts(circuit: &Circuit) -> GateCounts {
    let mut counts = GateCounts::default();
    let mut params = BTreeSet::new();
    for op in circuit.ops() {
        match op.kind() {
            GateKind::X | GateKind::Ry => counts.one_qubit += 1,
            GateKind::Cz | GateKind::Cnot => counts.two_qubit += 1,
            GateKind::Cswap => counts.cswap += 1,
        }
        if let Some(p) = op.angle() {
            params.insert(p.index);
        }
    }
    counts.params = params.len();
    counts
}
