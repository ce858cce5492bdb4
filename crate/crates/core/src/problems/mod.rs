//! Problem instances and their diagonal cost Hamiltonians.
//!
//! Vertices are 0-indexed throughout the library. The text graph format is
//! 1-indexed; [`Graph::parse`] and [`Graph::to_text`] convert at the boundary.

mod cost;
mod graph;

pub use cost::{
    decode_tsp, default_mvc_penalty, default_tsp_penalty, encode_tsp, mvc_cost, tsp_cost, Answer,
    CostFunction, ProblemKind,
};
pub use graph::{complete_graph, spanning_tree, Graph, SpanningTree, WeightSource};

/// Value of qubit `q` (0 = most significant) in an `n_bits`-wide basis index.
#[inline]
pub fn bit(z: usize, n_bits: usize, q: usize) -> bool {
    (z >> (n_bits - 1 - q)) & 1 == 1
}
