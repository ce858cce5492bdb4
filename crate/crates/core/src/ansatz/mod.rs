//! Parameterized circuit builders.
//!
//! Every builder here except the Ry baseline restricts the set of basis states that
//! can carry amplitude: a W-chain only produces one-hot bitstrings, Proposed 1 only
//! produces one one-hot row per tour position, Proposed 4 only produces permutation
//! matrices, and the vertex cover ansatz only produces covers of a spanning tree.

mod baseline;
mod counts;
mod mvc;
mod tsp;
mod w_chain;

use serde::{Deserialize, Serialize};

pub use baseline::build_ry_baseline;
pub use counts::{gate_counts, GateCounts};
pub use mvc::build_mvc_ansatz;
pub use tsp::{
    build_tsp_proposed1, build_tsp_proposed4, proposed4_params_for, transposition_pairs, tsp_qubit,
};
pub use w_chain::{append_w_chain, build_w_chain};

use crate::error::{Error, Result};
use crate::problems::{spanning_tree, Graph};
use crate::sim::Circuit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnsatzKind {
    Proposed1,
    Proposed4,
    MvcTree,
    RyBaseline { depth: usize },
}

impl AnsatzKind {
    /// Circuit for a TSP instance with `n_cities` cities (`n_cities^2` main qubits).
    pub fn build_tsp(self, n_cities: usize) -> Result<Circuit> {
        match self {
            AnsatzKind::Proposed1 => build_tsp_proposed1(n_cities),
            AnsatzKind::Proposed4 => build_tsp_proposed4(n_cities),
            AnsatzKind::RyBaseline { depth } => build_ry_baseline(n_cities * n_cities, depth),
            AnsatzKind::MvcTree => Err(Error::InvalidArgument(
                "the spanning-tree ansatz applies to vertex cover only".into(),
            )),
        }
    }

    /// Circuit for a vertex cover instance; the tree ansatz uses the BFS spanning tree.
    pub fn build_mvc(self, graph: &Graph) -> Result<Circuit> {
        match self {
            AnsatzKind::MvcTree => build_mvc_ansatz(graph, &spanning_tree(graph)?),
            AnsatzKind::RyBaseline { depth } => build_ry_baseline(graph.n_vertices(), depth),
            AnsatzKind::Proposed1 | AnsatzKind::Proposed4 => Err(Error::InvalidArgument(
                "Proposed 1 and Proposed 4 apply to the TSP only".into(),
            )),
        }
    }

    pub fn label(&self) -> String {
        match self {
            AnsatzKind::Proposed1 => "proposed1".into(),
            AnsatzKind::Proposed4 => "proposed4".into(),
            AnsatzKind::MvcTree => "mvc_tree".into(),
            AnsatzKind::RyBaseline { depth } => format!("ry_d{depth}"),
        }
    }
}
