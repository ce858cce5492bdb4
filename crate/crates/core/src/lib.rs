//! Constraint-restricted variational circuits for combinatorial optimization.
//!
//! The crate is organized around five pieces:
//!
//! - [`sim`]: a dense statevector simulator for the X / Ry / CZ / CNOT / CSWAP gate set.
//! - [`ansatz`]: circuit builders whose output support is restricted to (a superset of)
//!   the feasible answers of a problem, plus the hardware-efficient Ry baseline.
//! - [`problems`]: graphs, spanning trees and penalty-encoded diagonal cost functions for
//!   the traveling salesman problem and minimum vertex cover.
//! - [`vqe`]: expectation estimation, Nelder-Mead and SPSA, and the trial driver.
//! - [`oracle`]: brute-force ground truth used to check everything above.
//!
//! Basis states use the ket convention `|q_1 q_2 ... q_n>` with `q_1` as the most
//! significant bit of the basis index. Qubits are 0-indexed in the API, so qubit `0`
//! is `q_1`.

pub mod ansatz;
pub mod error;
pub mod oracle;
pub mod problems;
pub mod sim;
pub mod vqe;

pub use error::{Error, Result};
