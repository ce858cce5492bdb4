use std::fs::File;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use cvqe::oracle::{brute_force_min, enumerate_feasible};
use cvqe::problems::{
    default_mvc_penalty, default_tsp_penalty, mvc_cost, tsp_cost, Answer, CostFunction, Graph,
    ProblemKind,
};
use cvqe::vqe::{run_vqe, ConvergenceRecord};
use serde::{Deserialize, Serialize};

use crate::config::ExperimentConfig;

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphEcho {
    pub vertices: usize,
    /// `(u, v, weight)`, 1-indexed.
    pub edges: Vec<(usize, usize, f64)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleEcho {
    /// Brute-force minimum of the penalized cost.
    pub minimum: f64,
    /// Optimal tours (1-indexed vertex order) or covers (1-indexed vertex sets).
    pub optimal_answers: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub evaluations: usize,
    pub initial_expectation: f64,
    pub best_expectation: f64,
    pub best_params: Vec<f64>,
    pub initial_params: Vec<f64>,
    /// 1-indexed tour or cover; `null` when the most probable basis is infeasible.
    pub answer: Option<Vec<usize>>,
    pub answer_probability: f64,
    pub feasible: bool,
    /// The decoded answer attains the brute-force optimum.
    pub optimal: bool,
    pub elapsed_seconds: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub config: ExperimentConfig,
    pub penalty: f64,
    pub n_qubits: usize,
    pub n_ancillas: usize,
    pub n_params: usize,
    pub graph: GraphEcho,
    pub oracle: OracleEcho,
    pub trials: Vec<TrialSummary>,
    pub feasible_trials: usize,
    pub optimal_trials: usize,
}

#[derive(Serialize)]
struct CsvRow {
    trial: usize,
    evaluation: usize,
    expectation: f64,
    best_so_far: f64,
    feasible: bool,
}

fn one_indexed(answer: &Answer) -> Option<Vec<usize>> {
    match answer {
        Answer::Tour(v) | Answer::Cover(v) => Some(v.iter().map(|x| x + 1).collect()),
        Answer::Infeasible => None,
    }
}

fn build_cost(config: &ExperimentConfig, graph: &Graph) -> anyhow::Result<CostFunction> {
    Ok(match config.problem {
        ProblemKind::Tsp => tsp_cost(
            graph,
            config.penalty.unwrap_or_else(|| default_tsp_penalty(graph)),
        )?,
        ProblemKind::Mvc => mvc_cost(graph, config.penalty.unwrap_or_else(default_mvc_penalty))?,
    })
}

pub fn run_experiment(config: &ExperimentConfig) -> anyhow::Result<ExperimentSummary> {
    config.validate()?;
    let graph = config.graph.load()?;
    let cost = build_cost(config, &graph)?;
    let circuit = match config.problem {
        ProblemKind::Tsp => config.ansatz.build_tsp(graph.n_vertices())?,
        ProblemKind::Mvc => config.ansatz.build_mvc(&graph)?,
    };
    let optimum = brute_force_min(&cost).context("oracle minimum")?;
    let feasible = enumerate_feasible(config.problem, &graph).context("oracle enumeration")?;
    let best_objective = feasible
        .iter()
        .map(|f| f.objective)
        .fold(f64::INFINITY, f64::min);
    let is_optimal = |z: usize| {
        (cost.objective(z) - best_objective).abs() <= 1e-9 * best_objective.abs().max(1.0)
    };
    let optimal_answers = feasible
        .iter()
        .filter(|f| is_optimal(f.bitstring))
        .filter_map(|f| one_indexed(&cost.decode(f.bitstring)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()?;
    let records: Vec<ConvergenceRecord> = pool.install(|| {
        run_vqe(
            &circuit,
            &cost,
            &config.optimizer,
            config.mode.resolve(config.seed),
            config.trials,
            config.seed,
        )
    })?;

    let trials: Vec<TrialSummary> = records
        .iter()
        .map(|r| {
            let feasible = cost.is_feasible(r.answer_basis);
            TrialSummary {
                trial: r.trial_id,
                evaluations: r.history.len(),
                initial_expectation: r.history[0].value,
                best_expectation: r.best_value,
                best_params: r.best_params.clone(),
                initial_params: r.initial_params.clone(),
                answer: one_indexed(&r.answer),
                answer_probability: r.answer_probability,
                feasible,
                optimal: feasible && is_optimal(r.answer_basis),
                elapsed_seconds: r.elapsed.as_secs_f64(),
            }
        })
        .collect();

    write_csv(&config.csv, &records)?;
    let summary = ExperimentSummary {
        config: config.clone(),
        penalty: cost.penalty(),
        n_qubits: circuit.n_qubits(),
        n_ancillas: circuit.n_ancillas(),
        n_params: circuit.n_params(),
        graph: GraphEcho {
            vertices: graph.n_vertices(),
            edges: graph.edges().map(|(u, v, w)| (u + 1, v + 1, w)).collect(),
        },
        oracle: OracleEcho {
            minimum: optimum.value,
            optimal_answers,
        },
        feasible_trials: trials.iter().filter(|t| t.feasible).count(),
        optimal_trials: trials.iter().filter(|t| t.optimal).count(),
        trials,
    };
    write_json(&config.json, &summary)?;
    Ok(summary)
}

/// Convergence history, one row per objective evaluation, trials in id order.
pub fn write_csv(path: &Path, records: &[ConvergenceRecord]) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_path(path)
        .with_context(|| format!("cannot create {}", path.display()))?;
    for record in records {
        let best = record.best_so_far();
        for ((eval, feasible), best) in record.history.iter().zip(&record.feasible).zip(best) {
            writer.serialize(CsvRow {
                trial: record.trial_id,
                evaluation: eval.index,
                expectation: eval.value,
                best_so_far: best,
                feasible: *feasible,
            })?;
        }
    }
    writer.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut file =
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    serde_json::to_writer_pretty(&mut file, value)?;
    writeln!(file)?;
    Ok(())
}
