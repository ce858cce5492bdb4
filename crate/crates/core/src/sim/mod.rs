//! Dense statevector simulation.
//!
//! Amplitudes are stored as `Complex64` in a flat array of length `2^n`. Qubit `q`
//! (0-indexed, `q = 0` is `q_1` in ket notation) corresponds to bit `n - 1 - q` of the
//! basis index, so `|q_1 q_2 ... q_n>` reads left to right as a binary number.
//!
//! Gates are applied in place by iterating over the amplitude pairs (or swap partners)
//! they couple, so one gate costs `O(2^n)` and no operator matrices are ever formed.

mod circuit;
mod gate;
mod measure;
mod state;

pub use circuit::Circuit;
pub use gate::{GateKind, GateOp, ParamExpr};
pub use measure::{main_register_probabilities, sample};
pub use state::StateVector;

/// Largest register the simulator will allocate: `2^26` amplitudes is 1 GiB.
pub const MAX_QUBITS: usize = 26;

/// Bit mask of qubit `q` inside an `n`-qubit basis index.
#[inline]
pub(crate) fn qubit_mask(n_qubits: usize, q: usize) -> usize {
    1 << (n_qubits - 1 - q)
}
