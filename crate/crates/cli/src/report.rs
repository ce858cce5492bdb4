use std::collections::BTreeSet;
use std::path::PathBuf;

use cvqe::ansatz::AnsatzKind;
use cvqe::oracle::{enumerate_feasible, support, CountReport};
use cvqe::problems::{spanning_tree, ProblemKind};
use serde::{Deserialize, Serialize};

use crate::config::GraphSource;
use crate::experiment::write_json;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportConfig {
    pub problem: ProblemKind,
    pub ansatz: AnsatzKind,
    pub graph: GraphSource,
    pub draws: usize,
    pub seed: u64,
    pub epsilon: f64,
    pub json: Option<PathBuf>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SupportSummary {
    pub config: SupportConfig,
    pub n_main: usize,
    pub proposed: usize,
    pub all: usize,
    pub feasible: usize,
    pub feasible_subset_of_proposed: bool,
    pub proposed_subset_of_all: bool,
    pub proposed_equals_feasible: bool,
    /// Vertex cover only: support equals the covers of the BFS spanning tree.
    pub equals_tree_covers: Option<bool>,
    pub max_excluded_probability: f64,
}

pub fn run_support(config: &SupportConfig) -> anyhow::Result<SupportSummary> {
    anyhow::ensure!(config.epsilon > 0.0, "--epsilon must be positive");
    let graph = config.graph.load()?;
    let circuit = match config.problem {
        ProblemKind::Tsp => config.ansatz.build_tsp(graph.n_vertices())?,
        ProblemKind::Mvc => config.ansatz.build_mvc(&graph)?,
    };
    let n_main = circuit.n_qubits();
    let report = support(&circuit, n_main, config.draws, config.seed, config.epsilon)?;
    let proposed: BTreeSet<usize> = report.basis_set.iter().copied().collect();
    let feasible: BTreeSet<usize> = enumerate_feasible(config.problem, &graph)?
        .into_iter()
        .map(|f| f.bitstring)
        .collect();
    let equals_tree_covers = match config.problem {
        ProblemKind::Mvc => {
            let tree = spanning_tree(&graph)?.to_graph(graph.n_vertices())?;
            let covers: BTreeSet<usize> = enumerate_feasible(ProblemKind::Mvc, &tree)?
                .into_iter()
                .map(|f| f.bitstring)
                .collect();
            Some(covers == proposed)
        }
        ProblemKind::Tsp => None,
    };
    let all = 1usize << n_main;
    let summary = SupportSummary {
        config: config.clone(),
        n_main,
        proposed: proposed.len(),
        all,
        feasible: feasible.len(),
        feasible_subset_of_proposed: feasible.is_subset(&proposed),
        proposed_subset_of_all: proposed.iter().all(|&z| z < all),
        proposed_equals_feasible: proposed == feasible,
        equals_tree_covers,
        max_excluded_probability: report.max_excluded_probability,
    };
    if let Some(path) = &config.json {
        write_json(path, &summary)?;
    }
    Ok(summary)
}

pub fn print_support(s: &SupportSummary) {
    println!("ansatz            {}", s.config.ansatz.label());
    println!("|S_proposed|      {}", s.proposed);
    println!("|S_all|           {}", s.all);
    println!("|S_feasible|      {}", s.feasible);
    println!("S_feasible ⊆ S_proposed  {}", s.feasible_subset_of_proposed);
    println!("S_proposed ⊆ S_all       {}", s.proposed_subset_of_all);
    println!("S_proposed = S_feasible  {}", s.proposed_equals_feasible);
    if let Some(tree) = s.equals_tree_covers {
        println!("S_proposed = covers(T)   {tree}");
    }
    println!(
        "max excluded probability {:.3e}",
        s.max_excluded_probability
    );
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GateCountSummary {
    pub sizes: Vec<usize>,
    pub depths: Vec<usize>,
    pub report: CountReport,
    pub all_pass: bool,
}

pub fn run_gatecount(
    sizes: &[usize],
    depths: &[usize],
    json: Option<&PathBuf>,
) -> anyhow::Result<GateCountSummary> {
    anyhow::ensure!(sizes.iter().all(|&n| n >= 2), "sizes must be at least 2");
    let report = CountReport::generate(sizes.iter().copied(), depths)?;
    let summary = GateCountSummary {
        sizes: sizes.to_vec(),
        depths: depths.to_vec(),
        all_pass: report.all_pass(),
        report,
    };
    if let Some(path) = json {
        write_json(path, &summary)?;
    }
    Ok(summary)
}

pub fn print_gatecount(s: &GateCountSummary) {
    println!(
        "{:<10} {:>4} {:>6}  {:>21}  {:>21}  verdict",
        "ansatz", "N", "qubits", "builder (p,1q,2q,cs)", "table (p,1q,2q,cs)"
    );
    for row in &s.report.rows {
        let fmt = |c: &cvqe::ansatz::GateCounts| {
            format!(
                "({}, {}, {}, {})",
                c.params, c.one_qubit, c.two_qubit, c.cswap
            )
        };
        let verdict = match (row.check.asserted, row.check.mismatches.is_empty()) {
            (true, true) => "pass".to_string(),
            (true, false) => format!("FAIL {}", row.check.mismatches.join(",")),
            (false, true) => "info: matches".to_string(),
            (false, false) => format!("info: differs in {}", row.check.mismatches.join(",")),
        };
        println!(
            "{:<10} {:>4} {:>6}  {:>21}  {:>21}  {}",
            row.ansatz.label(),
            row.problem_size,
            row.n_qubits,
            fmt(&row.actual),
            fmt(&row.expected.counts),
            verdict
        );
    }
    println!("all asserted rows pass: {}", s.all_pass);
}

/// Resolves the graph for a support run: TSP uses a seeded complete graph (weights do
/// not affect the support), vertex cover uses `--graph`.
pub fn support_graph(problem: ProblemKind, cities: usize, graph: &str, seed: u64) -> GraphSource {
    match problem {
        ProblemKind::Tsp => GraphSource::SeededComplete {
            vertices: cities,
            seed,
        },
        ProblemKind::Mvc => GraphSource::from_arg(graph),
    }
}
