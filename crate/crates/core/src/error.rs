use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count {0} outside supported range 1..={max}", max = crate::sim::MAX_QUBITS)]
    QubitCount(usize),
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },
    #[error("gate uses qubit {0} more than once")]
    DuplicateQubit(usize),
    #[error("{kind} gate expects {expected} qubit(s), got {got}")]
    GateArity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{0} gate angle mismatch: Ry takes exactly one angle, other gates none")]
    AngleMismatch(&'static str),
    #[error("parameter index {index} out of range for {n_params} parameters")]
    ParamOutOfRange { index: usize, n_params: usize },
    #[error("expected {expected} parameters, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("main register of {n_main} qubits does not fit in a {n_qubits}-qubit state")]
    MainRegister { n_main: usize, n_qubits: usize },
    #[error("probabilities sum to {0}, not 1")]
    Unnormalized(f64),
    #[error("shot count must be at least 1")]
    ZeroShots,
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("spanning tree does not match graph: {0}")]
    TreeMismatch(String),
    #[error("problem size {size} exceeds the ceiling of {ceiling}")]
    SizeCeiling { size: usize, ceiling: usize },
    #[error("cost function acts on {cost_bits} bits but circuit main register has {circuit_bits}")]
    DimensionMismatch {
        cost_bits: usize,
        circuit_bits: usize,
    },
    #[error("objective returned non-finite value {value} at evaluation {evaluation}")]
    NonFinite { value: f64, evaluation: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
