use serde::{Deserialize, Serialize};

use super::{BRUTE_FORCE_MAX_BITS, MAX_COVER_VERTICES, MAX_TOUR_CITIES};
use crate::error::{Error, Result};
use crate::problems::{encode_tsp, CostFunction, Graph, ProblemKind};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BruteForceMin {
    pub value: f64,
    /// Every bitstring within `1e-9` (relative) of the minimum, ascending.
    pub argmin: Vec<usize>,
}

/// Exhaustive minimum of `cost` over all `2^n_bits` bitstrings.
pub fn brute_force_min(cost: &CostFunction) -> Result<BruteForceMin> {
    brute_force_min_by(cost.n_bits(), |z| cost.evaluate(z))
}

/// [`brute_force_min`] for an arbitrary function of an `n_bits`-wide bitstring.
pub fn brute_force_min_by(n_bits: usize, f: impl Fn(usize) -> f64) -> Result<BruteForceMin> {
    if n_bits > BRUTE_FORCE_MAX_BITS {
        return Err(Error::SizeCeiling {
            size: n_bits,
            ceiling: BRUTE_FORCE_MAX_BITS,
        });
    }
    let values: Vec<f64> = (0..1usize << n_bits).map(f).collect();
    let value = values.iter().copied().fold(f64::INFINITY, f64::min);
    let tol = 1e-9 * value.abs().max(1.0);
    let argmin = (0..values.len())
        .filter(|&z| values[z] - value <= tol)
        .collect();
    Ok(BruteForceMin { value, argmin })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibleAnswer {
    pub bitstring: usize,
    /// Tour length or cover size, computed from the graph directly.
    pub objective: f64,
}

/// Every feasible answer of the problem on `graph`, with its bare objective.
///
/// Tours are all `N!` vertex orders (each undirected cycle appears `2N` times, once
/// per starting position and direction). Covers are all vertex subsets touching every
/// edge.
pub fn enumerate_feasible(kind: ProblemKind, graph: &Graph) -> Result<Vec<FeasibleAnswer>> {
    let n = graph.n_vertices();
    match kind {
        ProblemKind::Tsp => {
            if n > MAX_TOUR_CITIES {
                return Err(Error::SizeCeiling {
                    size: n,
                    ceiling: MAX_TOUR_CITIES,
                });
            }
            let mut out = Vec::new();
            let mut tour: Vec<usize> = Vec::with_capacity(n);
            permutations(n, &mut tour, &mut vec![false; n], &mut |tour| {
                let length = (0..n)
                    .map(|p| {
                        let (u, v) = (tour[p], tour[(p + 1) % n]);
                        // a 2-city tour traverses its single edge twice
                        graph.weight(u, v).unwrap_or(f64::INFINITY)
                    })
                    .sum();
                out.push(FeasibleAnswer {
                    bitstring: encode_tsp(tour),
                    objective: length,
                });
            });
            Ok(out)
        }
        ProblemKind::Mvc => {
            if n > MAX_COVER_VERTICES {
                return Err(Error::SizeCeiling {
                    size: n,
                    ceiling: MAX_COVER_VERTICES,
                });
            }
            let selected = |z: usize, v: usize| (z >> (n - 1 - v)) & 1 == 1;
            Ok((0..1usize << n)
                .filter(|&z| {
                    graph
                        .edges()
                        .all(|(u, v, _)| selected(z, u) || selected(z, v))
                })
                .map(|z| FeasibleAnswer {
                    bitstring: z,
                    objective: z.count_ones() as f64,
                })
                .collect())
        }
    }
}

fn permutations(
    n: usize,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]),
) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            prefix.push(v);
            permutations(n, prefix, used, visit);
            prefix.pop();
            used[v] = false;
        }
    }
}
