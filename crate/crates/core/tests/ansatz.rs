mod common;

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_4, PI};

use common::{
    angles, is_cover, is_permutation_matrix, one_hot_rows, permutations, rng, tour_basis,
};
use cvqe::ansatz::{
    build_mvc_ansatz, build_ry_baseline, build_tsp_proposed1, build_tsp_proposed4, build_w_chain,
    gate_counts, proposed4_params_for, AnsatzKind, GateCounts,
};
use cvqe::problems::spanning_tree;
use cvqe::sim::main_register_probabilities;

/// Amplitude on the one-hot basis with the 1 in slot `k`: (∏_{j<k} −sin θ_j)·cos θ_k,
/// with the last slot's cosine read as 1.
fn w_amplitude(theta: &[f64], k: usize) -> f64 {
    let lead: f64 = theta[..k].iter().map(|t| -t.sin()).product();
    lead * theta.get(k).map_or(1.0, |t| t.cos())
}

#[test]
fn w_chain_amplitude_law() {
    let mut r = rng(1);
    for m in 2..=6 {
        let circuit = build_w_chain(m).unwrap();
        assert_eq!(circuit.n_params(), m - 1);
        for _ in 0..100 {
            let theta = angles(&mut r, m - 1);
            let state = circuit.run(&theta).unwrap();
            for z in 0..1usize << m {
                let a = state.amplitude(z);
                if z.count_ones() == 1 {
                    let k = m - 1 - z.trailing_zeros() as usize;
                    assert!((a.re - w_amplitude(&theta, k)).abs() < 1e-12 && a.im.abs() < 1e-12);
                } else {
                    assert!(a.norm() < 1e-14, "m={m} z={z:b}");
                }
            }
        }
    }
}

#[test]
fn w_chain_intermediate_state_before_cnot_layer() {
    let circuit = build_w_chain(3).unwrap();
    let mut truncated = cvqe::sim::Circuit::new(3, 0).unwrap();
    for _ in 0..circuit.n_params() {
        truncated.new_param();
    }
    for op in circuit
        .ops()
        .iter()
        .filter(|op| !matches!(op, cvqe::sim::GateOp::Cnot { .. }))
    {
        truncated.push(*op).unwrap();
    }
    let (t1, t2) = (0.7, 2.1);
    let s = truncated.run(&[t1, t2]).unwrap();
    assert!((s.amplitude(0b100).re - t1.cos()).abs() < 1e-12);
    assert!((s.amplitude(0b110).re + t1.sin() * t2.cos()).abs() < 1e-12);
    assert!((s.amplitude(0b111).re - t1.sin() * t2.sin()).abs() < 1e-12);
}

#[test]
fn w_chain_uniform_point() {
    let circuit = build_w_chain(3).unwrap();
    let theta = [(1.0 / 3f64.sqrt()).acos(), FRAC_PI_4];
    let s = circuit.run(&theta).unwrap();
    for z in [0b100, 0b010, 0b001] {
        assert!((s.probability(z) - 1.0 / 3.0).abs() < 1e-12);
    }
}

fn support_of(circuit: &cvqe::sim::Circuit, draws: usize, seed: u64) -> BTreeSet<usize> {
    let mut r = rng(seed);
    let mut seen = BTreeSet::new();
    for _ in 0..draws {
        let s = circuit.run(&angles(&mut r, circuit.n_params())).unwrap();
        let p = main_register_probabilities(&s, circuit.n_qubits()).unwrap();
        seen.extend((0..p.len()).filter(|&z| p[z] > 1e-9));
    }
    seen
}

#[test]
fn proposed1_support_is_one_hot_rows() {
    for n in 2..=3 {
        let circuit = build_tsp_proposed1(n).unwrap();
        assert_eq!(circuit.n_params(), n * (n - 1));
        let mut r = rng(2);
        for _ in 0..50 {
            let s = circuit.run(&angles(&mut r, circuit.n_params())).unwrap();
            for z in 0..s.dim() {
                if !one_hot_rows(z, n) {
                    assert!(s.amplitude(z).norm() < 1e-14);
                }
            }
        }
        let expected: BTreeSet<usize> = (0..1usize << (n * n))
            .filter(|&z| one_hot_rows(z, n))
            .collect();
        assert_eq!(expected.len(), n.pow(n as u32));
        assert_eq!(support_of(&circuit, 200, 3), expected);
    }
    // all-zero angles select each row's leading one-hot: |10 10>
    let s = build_tsp_proposed1(2).unwrap().run(&[0.0, 0.0]).unwrap();
    assert_eq!(s.probability(0b1010), 1.0);
}

#[test]
fn proposed4_subspace_law() {
    for n in 2..=4 {
        let circuit = build_tsp_proposed4(n).unwrap();
        assert_eq!(circuit.n_params(), n * (n - 1) / 2);
        assert_eq!(circuit.n_ancillas(), n * (n - 1) / 2);
        let perms: BTreeSet<usize> = permutations(n).iter().map(|t| tour_basis(t)).collect();
        assert!(perms.iter().all(|&z| is_permutation_matrix(z, n)));
        let draws = if n == 4 { 30 } else { 200 };
        assert_eq!(support_of(&circuit, draws, 5), perms, "N={n}");

        let identity: Vec<usize> = (0..n).collect();
        let s = circuit.run(&vec![0.0; circuit.n_params()]).unwrap();
        let p = main_register_probabilities(&s, n * n).unwrap();
        assert!((p[tour_basis(&identity)] - 1.0).abs() < 1e-12);
    }
}

#[test]
fn proposed4_concentrates_on_every_permutation() {
    for n in 2..=4 {
        let circuit = build_tsp_proposed4(n).unwrap();
        for tour in permutations(n) {
            let params = proposed4_params_for(&tour).unwrap();
            assert!(params.iter().all(|&t| t == 0.0 || t == PI));
            let s = circuit.run(&params).unwrap();
            let p = main_register_probabilities(&s, n * n).unwrap();
            assert!((p[tour_basis(&tour)] - 1.0).abs() < 1e-12, "{tour:?}");
        }
    }
    // σ = (2,1,4,3) in 1-indexed notation
    let circuit = build_tsp_proposed4(4).unwrap();
    let sigma = [1, 0, 3, 2];
    let s = circuit.run(&proposed4_params_for(&sigma).unwrap()).unwrap();
    let p = main_register_probabilities(&s, 16).unwrap();
    assert!((p[tour_basis(&sigma)] - 1.0).abs() < 1e-12);
}

#[test]
fn mvc_support_is_tree_covers() {
    for graph in common::graph_corpus() {
        let n = graph.n_vertices();
        let tree = spanning_tree(&graph).unwrap();
        let circuit = build_mvc_ansatz(&graph, &tree).unwrap();
        let tree_edges = tree.edges().to_vec();
        let graph_edges = common::edge_list(&graph);
        let tree_covers: BTreeSet<usize> = (0..1usize << n)
            .filter(|&z| is_cover(z, n, &tree_edges))
            .collect();
        let support = support_of(&circuit, 60, n as u64);
        assert_eq!(support, tree_covers, "{}", graph.to_text());
        assert!((0..1usize << n)
            .filter(|&z| is_cover(z, n, &graph_edges))
            .all(|z| support.contains(&z)));
        assert!(support.len() < 1 << n);
    }
}

#[test]
fn mvc_single_edge_state() {
    let graph = common::unit_graph(2, &[(0, 1)]);
    let circuit = build_mvc_ansatz(&graph, &spanning_tree(&graph).unwrap()).unwrap();
    let mut r = rng(6);
    for _ in 0..100 {
        let t = angles(&mut r, 2);
        let s = circuit.run(&t).unwrap();
        let h = t[0] / 2.0;
        assert!(s.amplitude(0b00).norm() < 1e-14);
        assert!((s.amplitude(0b01).re - h.cos()).abs() < 1e-12);
        assert!((s.amplitude(0b10).re + h.sin() * t[1].sin()).abs() < 1e-12);
        assert!((s.amplitude(0b11).re - h.sin() * t[1].cos()).abs() < 1e-12);
    }
}

#[test]
fn path_support_is_its_five_covers() {
    let graph = common::unit_graph(3, &[(0, 1), (1, 2)]);
    let circuit = build_mvc_ansatz(&graph, &spanning_tree(&graph).unwrap()).unwrap();
    let expected: BTreeSet<usize> = [0b010, 0b011, 0b101, 0b110, 0b111].into();
    assert_eq!(support_of(&circuit, 200, 7), expected);
}

/// Closed forms, recomputed here rather than taken from the oracle module.
fn expect_counts(counts: GateCounts, params: usize, one: usize, two: usize) {
    assert_eq!(
        (
            counts.params,
            counts.one_qubit,
            counts.two_qubit,
            counts.cswap
        ),
        (params, one, two, 0)
    );
}

#[test]
fn count_formulas() {
    for big_n in 2..=8usize {
        let n = big_n * big_n;
        expect_counts(
            gate_counts(&build_tsp_proposed1(big_n).unwrap()),
            n - big_n,
            2 * n - big_n,
            2 * n - 2 * big_n,
        );
        for d in 0..=3 {
            expect_counts(
                gate_counts(&build_ry_baseline(n, d).unwrap()),
                (d + 1) * n,
                (d + 1) * n,
                d * (n - 1),
            );
            expect_counts(
                gate_counts(&build_ry_baseline(big_n, d).unwrap()),
                (d + 1) * big_n,
                (d + 1) * big_n,
                d * (big_n - 1),
            );
        }
        let p4 = gate_counts(&build_tsp_proposed4(big_n).unwrap());
        assert_eq!(p4.params, (n - big_n) / 2);
        assert_eq!(p4.cswap, big_n * big_n * (big_n - 1) / 2);
        let complete =
            cvqe::problems::complete_graph(big_n, cvqe::problems::WeightSource::Seeded(1)).unwrap();
        let tree = spanning_tree(&complete).unwrap();
        expect_counts(
            gate_counts(&build_mvc_ansatz(&complete, &tree).unwrap()),
            big_n,
            3 * big_n - 2,
            big_n - 1,
        );
    }
    assert_eq!(
        gate_counts(&cvqe::sim::Circuit::new(1, 0).unwrap()),
        GateCounts::default()
    );
    // wide circuits can be counted but not simulated
    let wide = build_tsp_proposed1(8).unwrap();
    assert!(matches!(
        wide.run(&vec![0.0; 56]),
        Err(cvqe::Error::QubitCount(64))
    ));
}

#[test]
fn ry_baseline_spreads_over_all_bases() {
    let circuit = build_ry_baseline(2, 1).unwrap();
    let s = circuit.run(&[0.4, 1.1, 2.3, 0.9]).unwrap();
    assert!((0..4).all(|z| s.probability(z) > 1e-3));
    let zero = build_ry_baseline(5, 0).unwrap().run(&[0.0; 5]).unwrap();
    assert_eq!(zero.probability(0), 1.0);
    let kind = AnsatzKind::RyBaseline { depth: 3 };
    assert_eq!(kind.build_tsp(4).unwrap().n_params(), 64);
}
