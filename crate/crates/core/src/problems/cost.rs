use serde::{Deserialize, Serialize};

use super::{bit, Graph};
use crate::error::{Error, Result};
use crate::sim::MAX_QUBITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    Tsp,
    Mvc,
}

/// Decoded meaning of a bitstring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    /// Vertex visited at each position, 0-indexed.
    Tour(Vec<usize>),
    /// Selected vertices in ascending order, 0-indexed.
    Cover(Vec<usize>),
    Infeasible,
}

#[derive(Debug, Clone, PartialEq)]
enum Encoding {
    Tsp {
        n_cities: usize,
        /// Row-major `n_cities x n_cities`; missing edges hold the penalty weight.
        distance: Vec<f64>,
    },
    Mvc {
        edges: Vec<(usize, usize)>,
    },
}

/// Diagonal cost Hamiltonian: bare objective plus penalty for constraint violations.
///
/// Bitstrings are basis indices with qubit 0 as the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct CostFunction {
    n_bits: usize,
    penalty: f64,
    encoding: Encoding,
}

/// `1 + Σ w`: one squared-constraint violation outweighs any tour.
pub fn default_tsp_penalty(graph: &Graph) -> f64 {
    1.0 + graph.total_weight()
}

/// Uncovering an edge costs 2 while selecting one more vertex costs 1, so the
/// minimum always lies on a cover.
pub fn default_mvc_penalty() -> f64 {
    2.0
}

/// TSP cost over `N^2` bits; bit `(position, vertex)` is qubit `position * N + vertex`.
///
/// `evaluate(x) = Σ_{u≠v} W(u,v) Σ_p x[u,p] x[v,p+1] + A Σ_p (Σ_v x[v,p] − 1)²
/// + A Σ_v (Σ_p x[v,p] − 1)²`, positions wrapping around. Vertex pairs without an
/// edge get weight `A`.
pub fn tsp_cost(graph: &Graph, penalty: f64) -> Result<CostFunction> {
    let n = graph.n_vertices();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "TSP needs at least 2 cities, got {n}"
        )));
    }
    if !(penalty.is_finite() && penalty > graph.total_weight()) {
        return Err(Error::InvalidArgument(format!(
            "TSP penalty {penalty} must exceed the total edge weight {}",
            graph.total_weight()
        )));
    }
    let mut distance = vec![0.0; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                distance[u * n + v] = graph.weight(u, v).unwrap_or(penalty);
            }
        }
    }
    Ok(CostFunction {
        n_bits: n * n,
        penalty,
        encoding: Encoding::Tsp {
            n_cities: n,
            distance,
        },
    })
}

/// Vertex cover cost over `N` bits: `Σ_i x_i + A · #{(u,v) ∈ E : x_u = x_v = 0}`.
pub fn mvc_cost(graph: &Graph, penalty: f64) -> Result<CostFunction> {
    if !(penalty.is_finite() && penalty > 1.0) {
        return Err(Error::InvalidArgument(format!(
            "vertex cover penalty {penalty} must exceed 1"
        )));
    }
    Ok(CostFunction {
        n_bits: graph.n_vertices(),
        penalty,
        encoding: Encoding::Mvc {
            edges: graph.edges().map(|(u, v, _)| (u, v)).collect(),
        },
    })
}

/// Tour encoded as a permutation matrix: position `p` holds vertex `tour[p]`.
pub fn encode_tsp(tour: &[usize]) -> usize {
    let n = tour.len();
    tour.iter()
        .enumerate()
        .fold(0, |z, (p, &v)| z | 1 << (n * n - 1 - (p * n + v)))
}

/// Inverse of [`encode_tsp`]; `None` unless the bitstring is a permutation matrix.
pub fn decode_tsp(z: usize, n_cities: usize) -> Option<Vec<usize>> {
    let n_bits = n_cities * n_cities;
    let mut tour = Vec::with_capacity(n_cities);
    let mut used = vec![false; n_cities];
    for p in 0..n_cities {
        let mut row = (0..n_cities).filter(|&v| bit(z, n_bits, p * n_cities + v));
        match (row.next(), row.next()) {
            (Some(v), None) if !used[v] => {
                used[v] = true;
                tour.push(v);
            }
            _ => return None,
        }
    }
    Some(tour)
}

impl CostFunction {
    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn penalty(&self) -> f64 {
        self.penalty
    }

    pub fn kind(&self) -> ProblemKind {
        match self.encoding {
            Encoding::Tsp { .. } => ProblemKind::Tsp,
            Encoding::Mvc { .. } => ProblemKind::Mvc,
        }
    }

    /// Objective plus penalty.
    pub fn evaluate(&self, z: usize) -> f64 {
        self.objective(z) + self.penalty * self.violation(z)
    }

    /// Bare objective: tour length term or cover size.
    pub fn objective(&self, z: usize) -> f64 {
        let n_bits = self.n_bits;
        match &self.encoding {
            Encoding::Tsp { n_cities, distance } => {
                let n = *n_cities;
                let mut total = 0.0;
                for p in 0..n {
                    let next = (p + 1) % n;
                    for u in (0..n).filter(|&u| bit(z, n_bits, p * n + u)) {
                        for v in (0..n).filter(|&v| v != u && bit(z, n_bits, next * n + v)) {
                            total += distance[u * n + v];
                        }
                    }
                }
                total
            }
            Encoding::Mvc { .. } => z.count_ones() as f64,
        }
    }

    /// Penalty multiplier: sum of squared one-hot residuals (TSP) or number of
    /// uncovered edges (vertex cover).
    pub fn violation(&self, z: usize) -> f64 {
        let n_bits = self.n_bits;
        match &self.encoding {
            Encoding::Tsp { n_cities, .. } => {
                let n = *n_cities;
                let mut residual = 0i64;
                for p in 0..n {
                    let s = (0..n).filter(|&v| bit(z, n_bits, p * n + v)).count() as i64;
                    residual += (s - 1).pow(2);
                }
                for v in 0..n {
                    let s = (0..n).filter(|&p| bit(z, n_bits, p * n + v)).count() as i64;
                    residual += (s - 1).pow(2);
                }
                residual as f64
            }
            Encoding::Mvc { edges } => edges
                .iter()
                .filter(|&&(u, v)| !bit(z, n_bits, u) && !bit(z, n_bits, v))
                .count() as f64,
        }
    }

    pub fn is_feasible(&self, z: usize) -> bool {
        self.violation(z) == 0.0
    }

    pub fn decode(&self, z: usize) -> Answer {
        match &self.encoding {
            Encoding::Tsp { n_cities, .. } => {
                decode_tsp(z, *n_cities).map_or(Answer::Infeasible, Answer::Tour)
            }
            Encoding::Mvc { .. } if self.is_feasible(z) => Answer::Cover(
                (0..self.n_bits)
                    .filter(|&q| bit(z, self.n_bits, q))
                    .collect(),
            ),
            Encoding::Mvc { .. } => Answer::Infeasible,
        }
    }

    /// `evaluate` for every bitstring, indexed by bitstring.
    pub fn table(&self) -> Result<Vec<f64>> {
        if self.n_bits > MAX_QUBITS {
            return Err(Error::SizeCeiling {
                size: self.n_bits,
                ceiling: MAX_QUBITS,
            });
        }
        Ok((0..1usize << self.n_bits)
            .map(|z| self.evaluate(z))
            .collect())
    }
}
