mod config;
mod experiment;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use cvqe::problems::ProblemKind;
use cvqe::vqe::OptimizerConfig;

use config::{AnsatzArg, ExperimentConfig, GraphSource, ModeArg, OptimizerArg};
use experiment::{run_experiment, ExperimentSummary};
use report::{print_gatecount, print_support, run_gatecount, run_support, SupportConfig};

/// Variational solver for travelling salesman and minimum vertex cover with
/// constraint-preserving ansätze, on an exact statevector simulator.
#[derive(Parser)]
#[command(name = "cvqe", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Travelling salesman on a complete graph.
    Tsp(TspArgs),
    /// Minimum vertex cover.
    Mvc(MvcArgs),
    /// Estimate the support of an ansatz and compare with the feasible set.
    Support(SupportArgs),
    /// Compare builder gate counts with the closed-form table.
    Gatecount(GatecountArgs),
    /// Re-run the experiment recorded in a summary JSON.
    Replay(ReplayArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value = "nelder-mead")]
    optimizer: OptimizerArg,
    /// `exact` or `shots:K`.
    #[arg(long, default_value = "exact")]
    mode: ModeArg,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Objective-evaluation budget per trial.
    #[arg(long, default_value_t = 2000)]
    max_evals: usize,
    /// Nelder-Mead stop tolerance on the simplex value spread.
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Constraint penalty weight; defaults to 1 + total weight (TSP) or 2 (cover).
    #[arg(long)]
    penalty: Option<f64>,
    /// Layers for the Ry baseline.
    #[arg(long, default_value_t = 1)]
    depth: usize,
    #[arg(long, default_value = "convergence.csv")]
    csv: PathBuf,
    #[arg(long, default_value = "summary.json")]
    json: PathBuf,
}

#[derive(Args)]
struct TspArgs {
    #[arg(long, default_value_t = 4)]
    cities: usize,
    /// Weighted graph file; a seeded random complete graph when omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Seed for the random edge weights; defaults to --seed.
    #[arg(long)]
    graph_seed: Option<u64>,
    #[arg(long, value_enum, default_value = "proposed1")]
    ansatz: AnsatzArg,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct MvcArgs {
    /// `builtin6` or a graph file.
    #[arg(long, default_value = "builtin6")]
    graph: String,
    #[arg(long, value_enum, default_value = "proposed")]
    ansatz: AnsatzArg,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct SupportArgs {
    #[arg(long, value_enum)]
    problem: ProblemArg,
    #[arg(long, value_enum)]
    ansatz: AnsatzArg,
    #[arg(long, default_value_t = 1)]
    depth: usize,
    #[arg(long, default_value_t = 4)]
    cities: usize,
    /// Vertex cover graph: `builtin6` or a file.
    #[arg(long, default_value = "builtin6")]
    graph: String,
    #[arg(long, default_value_t = 1000)]
    draws: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    epsilon: f64,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ProblemArg {
    Tsp,
    Mvc,
}

#[derive(Args)]
struct GatecountArgs {
    /// Problem sizes (cities for TSP, vertices for cover).
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,7,8")]
    sizes: Vec<usize>,
    /// Ry baseline depths.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    depths: Vec<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ReplayArgs {
    /// Summary JSON from a previous run.
    #[arg(long)]
    config: PathBuf,
    /// Override the CSV destination.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Override the summary destination.
    #[arg(long)]
    json: Option<PathBuf>,
}

/// Context marker for bad input; such errors exit with code 2.
#[derive(Debug, thiserror::Error)]
#[error("invalid input")]
struct InputError;

fn input<T>(r: anyhow::Result<T>) -> anyhow::Result<T> {
    r.context(InputError)
}

impl RunArgs {
    fn optimizer(&self) -> OptimizerConfig {
        match self.optimizer {
            OptimizerArg::NelderMead => OptimizerConfig {
                tolerance: self.tolerance,
                ..OptimizerConfig::nelder_mead(self.max_evals)
            },
            OptimizerArg::Spsa => OptimizerConfig::spsa(self.max_evals, self.seed),
        }
    }

    fn config(
        &self,
        problem: ProblemKind,
        graph: GraphSource,
        ansatz: AnsatzArg,
    ) -> anyhow::Result<ExperimentConfig> {
        let config = ExperimentConfig {
            problem,
            graph,
            ansatz: ansatz.resolve(problem, self.depth)?,
            optimizer: self.optimizer(),
            mode: self.mode,
            penalty: self.penalty,
            trials: self.trials,
            seed: self.seed,
            threads: self.threads,
            csv: self.csv.clone(),
            json: self.json.clone(),
        };
        config.validate()?;
        Ok(config)
    }
}

fn check_file(path: &Path) -> anyhow::Result<()> {
    anyhow::ensure!(path.is_file(), "graph file {} not found", path.display());
    Ok(())
}

/// Loads the graph up front so that malformed input is reported as a usage error.
fn preload(config: &ExperimentConfig) -> anyhow::Result<()> {
    if let GraphSource::File(path) = &config.graph {
        check_file(path)?;
    }
    config.graph.load().map(drop)
}

fn report_experiment(summary: &ExperimentSummary) {
    println!(
        "{} {}: {} qubits (+{} ancillas), {} parameters, penalty {}",
        match summary.config.problem {
            ProblemKind::Tsp => "tsp",
            ProblemKind::Mvc => "mvc",
        },
        summary.config.ansatz.label(),
        summary.n_qubits,
        summary.n_ancillas,
        summary.n_params,
        summary.penalty,
    );
    println!("oracle minimum {:.6}", summary.oracle.minimum);
    for t in &summary.trials {
        let answer = match &t.answer {
            Some(a) => format!("{a:?}"),
            None => "infeasible".to_string(),
        };
        println!(
            "trial {:>3}  evals {:>5}  best {:>12.6}  answer {} (p={:.3}){}",
            t.trial,
            t.evaluations,
            t.best_expectation,
            answer,
            t.answer_probability,
            if t.optimal { "  optimal" } else { "" }
        );
    }
    println!(
        "feasible {}/{}  optimal {}/{}",
        summary.feasible_trials,
        summary.trials.len(),
        summary.optimal_trials,
        summary.trials.len()
    );
}

fn experiment(config: ExperimentConfig) -> anyhow::Result<()> {
    input(preload(&config))?;
    let summary = run_experiment(&config)?;
    report_experiment(&summary);
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Tsp(args) => {
            let graph = match &args.graph {
                Some(path) => GraphSource::File(path.clone()),
                None => GraphSource::SeededComplete {
                    vertices: args.cities,
                    seed: args.graph_seed.unwrap_or(args.run.seed),
                },
            };
            let config = input(args.run.config(ProblemKind::Tsp, graph, args.ansatz))?;
            experiment(config)
        }
        Command::Mvc(args) => {
            let graph = GraphSource::from_arg(&args.graph);
            let config = input(args.run.config(ProblemKind::Mvc, graph, args.ansatz))?;
            experiment(config)
        }
        Command::Support(args) => {
            let problem = match args.problem {
                ProblemArg::Tsp => ProblemKind::Tsp,
                ProblemArg::Mvc => ProblemKind::Mvc,
            };
            let config = SupportConfig {
                problem,
                ansatz: input(args.ansatz.resolve(problem, args.depth))?,
                graph: report::support_graph(problem, args.cities, &args.graph, args.seed),
                draws: args.draws,
                seed: args.seed,
                epsilon: args.epsilon,
                json: args.json,
            };
            if let GraphSource::File(path) = &config.graph {
                input(check_file(path))?;
            }
            let summary = run_support(&config)?;
            print_support(&summary);
            Ok(())
        }
        Command::Gatecount(args) => {
            let summary = input(run_gatecount(&args.sizes, &args.depths, args.json.as_ref()))?;
            print_gatecount(&summary);
            anyhow::ensure!(summary.all_pass, "gate counts disagree with the table");
            Ok(())
        }
        Command::Replay(args) => {
            let text = input(
                std::fs::read_to_string(&args.config)
                    .with_context(|| format!("cannot read {}", args.config.display())),
            )?;
            let value: serde_json::Value = input(serde_json::from_str(&text).map_err(Into::into))?;
            let mut config: ExperimentConfig = input(
                serde_json::from_value(value["config"].clone())
                    .context("summary has no valid `config` block"),
            )?;
            if let Some(csv) = args.csv {
                config.csv = csv;
            }
            if let Some(json) = args.json {
                config.json = json;
            }
            input(config.validate())?;
            experiment(config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
