use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reference to an entry of a circuit's shared parameter table.
///
/// Binding against an angle vector `theta` yields `sign * scale * theta[index]`.
/// Several gates may hold the same index; they always bind from the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamExpr {
    pub index: usize,
    pub negated: bool,
    pub halved: bool,
}

impl ParamExpr {
    pub fn new(index: usize) -> Self {
        Self {
            index,
            negated: false,
            halved: false,
        }
    }

    /// Same parameter with the opposite sign.
    pub fn negated(self) -> Self {
        Self {
            negated: !self.negated,
            ..self
        }
    }

    /// Same parameter scaled by 1/2.
    pub fn halved(self) -> Self {
        Self {
            halved: true,
            ..self
        }
    }

    pub fn sign(&self) -> f64 {
        if self.negated {
            -1.0
        } else {
            1.0
        }
    }

    pub fn scale(&self) -> f64 {
        if self.halved {
            0.5
        } else {
            1.0
        }
    }

    pub fn bind(&self, params: &[f64]) -> Result<f64> {
        params
            .get(self.index)
            .map(|theta| self.sign() * self.scale() * theta)
            .ok_or(Error::ParamOutOfRange {
                index: self.index,
                n_params: params.len(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateKind {
    X,
    Ry,
    Cz,
    Cnot,
    Cswap,
}

impl GateKind {
    pub fn name(self) -> &'static str {
        match self {
            GateKind::X => "X",
            GateKind::Ry => "Ry",
            GateKind::Cz => "CZ",
            GateKind::Cnot => "CNOT",
            GateKind::Cswap => "CSWAP",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            GateKind::X | GateKind::Ry => 1,
            GateKind::Cz | GateKind::Cnot => 2,
            GateKind::Cswap => 3,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One gate of a circuit. Qubit indices are 0-based; controls come first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateOp {
    X(usize),
    Ry(usize, ParamExpr),
    /// Symmetric in its two qubits.
    Cz(usize, usize),
    Cnot {
        control: usize,
        target: usize,
    },
    Cswap {
        control: usize,
        targets: (usize, usize),
    },
}

impl GateOp {
    pub fn x(q: usize) -> Self {
        GateOp::X(q)
    }

    pub fn ry(q: usize, angle: ParamExpr) -> Self {
        GateOp::Ry(q, angle)
    }

    pub fn cz(a: usize, b: usize) -> Self {
        GateOp::Cz(a, b)
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        GateOp::Cnot { control, target }
    }

    pub fn cswap(control: usize, t1: usize, t2: usize) -> Self {
        GateOp::Cswap {
            control,
            targets: (t1, t2),
        }
    }

    pub fn kind(&self) -> GateKind {
        match self {
            GateOp::X(_) => GateKind::X,
            GateOp::Ry(..) => GateKind::Ry,
            GateOp::Cz(..) => GateKind::Cz,
            GateOp::Cnot { .. } => GateKind::Cnot,
            GateOp::Cswap { .. } => GateKind::Cswap,
        }
    }

    /// Qubits in gate order (controls first).
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            GateOp::X(q) | GateOp::Ry(q, _) => vec![q],
            GateOp::Cz(a, b) => vec![a, b],
            GateOp::Cnot { control, target } => vec![control, target],
            GateOp::Cswap {
                control,
                targets: (t1, t2),
            } => vec![control, t1, t2],
        }
    }

    pub fn angle(&self) -> Option<ParamExpr> {
        match *self {
            GateOp::Ry(_, p) => Some(p),
            _ => None,
        }
    }

    /// Checks distinctness and range against a register of `n_qubits`.
    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        let qubits = self.qubits();
        for (i, &q) in qubits.iter().enumerate() {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange { index: q, n_qubits });
            }
            if qubits[..i].contains(&q) {
                return Err(Error::DuplicateQubit(q));
            }
        }
        Ok(())
    }
}

impl fmt::Display for GateOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateOp::Ry(q, p) => write!(
                f,
                "Ry(q{}, {}{}θ{})",
                q,
                if p.negated { "-" } else { "" },
                if p.halved { "½" } else { "" },
                p.index
            ),
            other => {
                let qs: Vec<String> = other.qubits().iter().map(|q| format!("q{q}")).collect();
                write!(f, "{}({})", other.kind(), qs.join(", "))
            }
        }
    }
}
