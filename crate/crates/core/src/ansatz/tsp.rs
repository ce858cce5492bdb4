use std::f64::consts::PI;

use super::w_chain::append_w_chain;
use crate::error::{Error, Result};
use crate::sim::{Circuit, GateOp, ParamExpr};

/// Qubit holding `x_{vertex, position}` in an `n_cities^2` register.
///
/// Qubits are grouped by tour position: row `position` owns the `n_cities`
/// consecutive qubits `position * n_cities .. (position + 1) * n_cities`.
pub fn tsp_qubit(n_cities: usize, vertex: usize, position: usize) -> usize {
    position * n_cities + vertex
}

fn check_cities(n_cities: usize) -> Result<()> {
    if n_cities < 2 {
        return Err(Error::InvalidArgument(format!(
            "TSP needs at least 2 cities, got {n_cities}"
        )));
    }
    Ok(())
}

/// One independent W-chain per tour position, so every position holds exactly one
/// vertex. Column constraints (each vertex visited once) are left to the penalty.
pub fn build_tsp_proposed1(n_cities: usize) -> Result<Circuit> {
    check_cities(n_cities)?;
    let mut circuit = Circuit::new(n_cities * n_cities, 0)?;
    for position in 0..n_cities {
        let row: Vec<usize> = (0..n_cities)
            .map(|v| tsp_qubit(n_cities, v, position))
            .collect();
        append_w_chain(&mut circuit, &row)?;
    }
    Ok(circuit)
}

/// Row pairs `(r, r')`, `r < r'`, in lexicographic order. Pair `k` owns ancilla `k`
/// and parameter `k` of the Proposed 4 circuit.
pub fn transposition_pairs(n_cities: usize) -> Vec<(usize, usize)> {
    (0..n_cities)
        .flat_map(|r| (r + 1..n_cities).map(move |s| (r, s)))
        .collect()
}

/// Permutation-only ansatz.
///
/// Starts from the identity tour and then, for every row pair in
/// [`transposition_pairs`] order, rotates a fresh ancilla with `Ry(θ)` and uses it as
/// the control of CSWAPs exchanging the two rows column by column. Row swaps map
/// permutation matrices to permutation matrices, so the main register never leaves
/// the feasible set. Ancillas are left entangled.
pub fn build_tsp_proposed4(n_cities: usize) -> Result<Circuit> {
    check_cities(n_cities)?;
    let pairs = transposition_pairs(n_cities);
    let mut circuit = Circuit::new(n_cities * n_cities, pairs.len())?;
    for r in 0..n_cities {
        circuit.push(GateOp::x(tsp_qubit(n_cities, r, r)))?;
    }
    for (k, &(r, s)) in pairs.iter().enumerate() {
        let ancilla = circuit.ancilla(k);
        let theta = ParamExpr::new(circuit.new_param());
        circuit.push(GateOp::ry(ancilla, theta))?;
        for v in 0..n_cities {
            circuit.push(GateOp::cswap(
                ancilla,
                tsp_qubit(n_cities, v, r),
                tsp_qubit(n_cities, v, s),
            ))?;
        }
    }
    Ok(circuit)
}

/// Parameters that make Proposed 4 output `tour` with probability 1.
///
/// `tour[p]` is the (0-indexed) vertex visited at position `p`. Selection sort from
/// the identity: for each position `r`, the pair `(r, k)` that brings `tour[r]` into
/// place gets `θ = π` (ancilla flipped to `|1>`); every other pair gets `θ = 0`.
pub fn proposed4_params_for(tour: &[usize]) -> Result<Vec<f64>> {
    let n = tour.len();
    check_cities(n)?;
    let mut seen = vec![false; n];
    for &v in tour {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!(
                "{tour:?} is not a permutation of 0..{n}"
            )));
        }
    }
    let pairs = transposition_pairs(n);
    let mut params = vec![0.0; pairs.len()];
    let mut current: Vec<usize> = (0..n).collect();
    for (r, &want) in tour.iter().enumerate() {
        let k = (r..n).find(|&k| current[k] == want).expect("permutation");
        if k != r {
            current.swap(r, k);
            let slot = pairs.iter().position(|&p| p == (r, k)).expect("pair");
            params[slot] = PI;
        }
    }
    Ok(params)
}
