//! Independent reference implementations shared by the integration tests. Nothing
//! here calls into the simulator's gate kernels or the library's cost code.
#![allow(dead_code)]

use std::f64::consts::TAU;

use cvqe::problems::Graph;
use cvqe::sim::GateOp;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn angles(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.0..TAU)).collect()
}

/// Normalized random state with independent Gaussian-ish components.
pub fn random_state(rng: &mut ChaCha8Rng, n_qubits: usize) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..1usize << n_qubits)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|a| *a /= norm);
    v
}

/// Local matrix of a gate, rows/columns indexed by the gate's qubits read most
/// significant first (control first).
pub fn local_matrix(gate: &GateOp, angle: f64) -> Vec<Vec<Complex64>> {
    let r = |x: f64| Complex64::new(x, 0.0);
    let perm = |p: &[usize]| {
        let d = p.len();
        let mut m = vec![vec![ZERO; d]; d];
        for (col, &row) in p.iter().enumerate() {
            m[row][col] = r(1.0);
        }
        m
    };
    match gate {
        GateOp::X(_) => perm(&[1, 0]),
        GateOp::Ry(..) => {
            let (s, c) = (angle / 2.0).sin_cos();
            vec![vec![r(c), r(-s)], vec![r(s), r(c)]]
        }
        GateOp::Cz(..) => {
            let mut m = perm(&[0, 1, 2, 3]);
            m[3][3] = r(-1.0);
            m
        }
        GateOp::Cnot { .. } => perm(&[0, 1, 3, 2]),
        GateOp::Cswap { .. } => perm(&[0, 1, 2, 3, 4, 6, 5, 7]),
    }
}

fn gate_qubits(gate: &GateOp) -> Vec<usize> {
    match *gate {
        GateOp::X(q) | GateOp::Ry(q, _) => vec![q],
        GateOp::Cz(a, b) => vec![a, b],
        GateOp::Cnot { control, target } => vec![control, target],
        GateOp::Cswap { control, targets } => vec![control, targets.0, targets.1],
    }
}

/// Applies a gate by summing matrix columns over every basis state: slow and obvious.
pub fn reference_apply(state: &[Complex64], gate: &GateOp, angle: f64) -> Vec<Complex64> {
    let n = state.len().trailing_zeros() as usize;
    let qubits = gate_qubits(gate);
    let k = qubits.len();
    let m = local_matrix(gate, angle);
    let local_of = |b: usize| {
        qubits
            .iter()
            .fold(0usize, |acc, &q| (acc << 1) | ((b >> (n - 1 - q)) & 1))
    };
    let with_local = |b: usize, l: usize| {
        let mut out = b;
        for (i, &q) in qubits.iter().enumerate() {
            let bit = (l >> (k - 1 - i)) & 1;
            let mask = 1 << (n - 1 - q);
            out = if bit == 1 { out | mask } else { out & !mask };
        }
        out
    };
    let mut out = vec![ZERO; state.len()];
    for (b, &amp) in state.iter().enumerate() {
        let col = local_of(b);
        for row in 0..(1 << k) {
            out[with_local(b, row)] += m[row][col] * amp;
        }
    }
    out
}

/// Whether `z` (q_1 most significant, `n` bits) has bit `q` set.
pub fn bit(z: usize, n: usize, q: usize) -> bool {
    (z >> (n - 1 - q)) & 1 == 1
}

/// Every row block of `n` bits holds exactly one 1.
pub fn one_hot_rows(z: usize, n: usize) -> bool {
    (0..n).all(|p| (0..n).filter(|&v| bit(z, n * n, p * n + v)).count() == 1)
}

/// Permutation matrix check: one-hot rows and one-hot columns.
pub fn is_permutation_matrix(z: usize, n: usize) -> bool {
    one_hot_rows(z, n) && (0..n).all(|v| (0..n).filter(|&p| bit(z, n * n, p * n + v)).count() == 1)
}

/// Basis index of the tour visiting `tour[p]` at position `p`.
pub fn tour_basis(tour: &[usize]) -> usize {
    let n = tour.len();
    tour.iter()
        .enumerate()
        .fold(0, |z, (p, &v)| z | 1 << (n * n - 1 - (p * n + v)))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Closed tour length with weights looked up directly on the graph.
pub fn tour_length(graph: &Graph, tour: &[usize]) -> f64 {
    (0..tour.len())
        .map(|p| {
            graph
                .weight(tour[p], tour[(p + 1) % tour.len()])
                .expect("complete graph")
        })
        .sum()
}

/// Cover check on an explicit edge list.
pub fn is_cover(z: usize, n: usize, edges: &[(usize, usize)]) -> bool {
    edges.iter().all(|&(u, v)| bit(z, n, u) || bit(z, n, v))
}

pub fn edge_list(graph: &Graph) -> Vec<(usize, usize)> {
    graph.edges().map(|(u, v, _)| (u, v)).collect()
}

pub fn unit_graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
    Graph::new(n, &e).unwrap()
}

/// Small connected graphs: paths, cycles, stars, complete graphs, the 4-cycle with a
/// tail, and seeded random connected graphs up to 10 vertices.
pub fn graph_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=10 {
        let path: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        out.push(unit_graph(n, &path));
        let star: Vec<_> = (1..n).map(|i| (0, i)).collect();
        out.push(unit_graph(n, &star));
        if n >= 3 {
            let mut cycle = path.clone();
            cycle.push((0, n - 1));
            out.push(unit_graph(n, &cycle));
        }
    }
    for n in 3..=6 {
        let complete: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        out.push(unit_graph(n, &complete));
    }
    out.push(unit_graph(
        6,
        &[(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5)],
    ));
    let mut r = rng(99);
    for n in 4..=10 {
        for _ in 0..3 {
            // random tree plus a few chords keeps the graph connected
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
            for _ in 0..r.gen_range(0..n) {
                let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
                if u != v
                    && !edges.contains(&(u.min(v), u.max(v)))
                    && !edges.contains(&(u.max(v), u.min(v)))
                {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            out.push(unit_graph(n, &edges));
        }
    }
    out
}

/// Penalized TSP cost written straight from its definition: directed wraparound pair
/// sum (absent edges weigh `a`) plus squared row and column violations.
pub fn reference_tsp_cost(graph: &Graph, a: f64, z: usize) -> f64 {
    let n = graph.n_vertices();
    let x = |v: usize, p: usize| bit(z, n * n, p * n + v) as u8 as f64;
    let mut total = 0.0;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let w = graph.weight(u, v).unwrap_or(a);
            total += w * (0..n).map(|p| x(u, p) * x(v, (p + 1) % n)).sum::<f64>();
        }
    }
    for p in 0..n {
        total += a * ((0..n).map(|v| x(v, p)).sum::<f64>() - 1.0).powi(2);
    }
    for v in 0..n {
        total += a * ((0..n).map(|p| x(v, p)).sum::<f64>() - 1.0).powi(2);
    }
    total
}

pub fn reference_cover_cost(graph: &Graph, a: f64, z: usize) -> f64 {
    let n = graph.n_vertices();
    let open = edge_list(graph)
        .iter()
        .filter(|&&(u, v)| !bit(z, n, u) && !bit(z, n, v))
        .count();
    z.count_ones() as f64 + a * open as f64
}
