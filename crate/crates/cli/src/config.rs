use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use cvqe::ansatz::AnsatzKind;
use cvqe::problems::{complete_graph, Graph, ProblemKind, WeightSource};
use cvqe::vqe::{ExpectationMode, OptimizerConfig};
use serde::{Deserialize, Serialize};

/// `exact` or `shots:K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeArg {
    Exact,
    Shots(usize),
}

impl FromStr for ModeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "exact" {
            return Ok(ModeArg::Exact);
        }
        match s.strip_prefix("shots:").map(str::parse::<usize>) {
            Some(Ok(k)) if k >= 1 => Ok(ModeArg::Shots(k)),
            _ => Err(format!(
                "expected `exact` or `shots:K` with K >= 1, got {s:?}"
            )),
        }
    }
}

impl fmt::Display for ModeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModeArg::Exact => f.write_str("exact"),
            ModeArg::Shots(k) => write!(f, "shots:{k}"),
        }
    }
}

impl ModeArg {
    pub fn resolve(self, seed: u64) -> ExpectationMode {
        match self {
            ModeArg::Exact => ExpectationMode::Exact,
            ModeArg::Shots(shots) => ExpectationMode::Sampled { shots, seed },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OptimizerArg {
    NelderMead,
    Spsa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum AnsatzArg {
    /// TSP: one W-chain per tour position.
    Proposed1,
    /// TSP: permutation-only circuit with ancilla-controlled row swaps.
    Proposed4,
    /// Vertex cover: spanning-tree circuit.
    #[value(alias = "mvc")]
    Proposed,
    /// Hardware-efficient Ry baseline (needs --depth).
    Ry,
}

impl AnsatzArg {
    pub fn resolve(self, problem: ProblemKind, depth: usize) -> anyhow::Result<AnsatzKind> {
        Ok(match (self, problem) {
            (AnsatzArg::Ry, _) => AnsatzKind::RyBaseline { depth },
            (AnsatzArg::Proposed1, ProblemKind::Tsp) => AnsatzKind::Proposed1,
            (AnsatzArg::Proposed4, ProblemKind::Tsp) => AnsatzKind::Proposed4,
            (AnsatzArg::Proposed, ProblemKind::Mvc) => AnsatzKind::MvcTree,
            (a, p) => anyhow::bail!("ansatz {a:?} is not defined for {p:?}"),
        })
    }
}

/// Where the problem graph comes from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSource {
    /// Complete graph with weights drawn uniformly from [1, 10].
    SeededComplete {
        vertices: usize,
        seed: u64,
    },
    /// Built-in 6-vertex graph with one cycle.
    Builtin6,
    File(PathBuf),
}

impl GraphSource {
    pub fn load(&self) -> anyhow::Result<Graph> {
        Ok(match self {
            GraphSource::SeededComplete { vertices, seed } => {
                complete_graph(*vertices, WeightSource::Seeded(*seed))?
            }
            GraphSource::Builtin6 => Graph::builtin_cycle6(),
            GraphSource::File(path) => Graph::from_file(path)?,
        })
    }

    /// `builtin6` or a path.
    pub fn from_arg(arg: &str) -> Self {
        if arg == "builtin6" {
            GraphSource::Builtin6
        } else {
            GraphSource::File(PathBuf::from(arg))
        }
    }
}

/// Fully resolved settings of one `tsp` or `mvc` run. Written verbatim into the
/// summary so a run can be replayed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub problem: ProblemKind,
    pub graph: GraphSource,
    pub ansatz: AnsatzKind,
    pub optimizer: OptimizerConfig,
    pub mode: ModeArg,
    pub penalty: Option<f64>,
    pub trials: usize,
    /// Master seed: per-trial initial parameters and shot seeds derive from it.
    pub seed: u64,
    pub threads: usize,
    pub csv: PathBuf,
    pub json: PathBuf,
}

impl ExperimentConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        anyhow::ensure!(self.trials >= 1, "--trials must be at least 1");
        anyhow::ensure!(self.threads >= 1, "--threads must be at least 1");
        if let Some(a) = self.penalty {
            anyhow::ensure!(a.is_finite() && a > 0.0, "--penalty must be positive");
        }
        self.optimizer.validate()?;
        Ok(())
    }
}
