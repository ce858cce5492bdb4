use num_complex::Complex64;

use super::{qubit_mask, GateKind, GateOp, MAX_QUBITS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// The all-zeros state `|0...0>` on `n_qubits` qubits.
    pub fn new(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    /// The computational basis state with the given index.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount(n_qubits));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Wraps explicit amplitudes; the array must have length `2^n` and unit norm.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "amplitude array length {dim} is not a power of two >= 2"
            )));
        }
        let n_qubits = dim.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::QubitCount(n_qubits));
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::Unnormalized(norm));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.amplitudes[index].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Overwrites the state with the basis state `index`, reusing the allocation.
    pub(crate) fn reset_to_basis(&mut self, index: usize) {
        self.amplitudes.fill(Complex64::new(0.0, 0.0));
        self.amplitudes[index] = Complex64::new(1.0, 0.0);
    }

    pub(crate) fn apply_global_sign(&mut self) {
        self.amplitudes.iter_mut().for_each(|a| *a = -*a);
    }

    /// Applies one gate. `angle` is the bound rotation angle in radians and must be
    /// present exactly when the gate is an Ry.
    pub fn apply_gate(&mut self, gate: &GateOp, angle: Option<f64>) -> Result<()> {
        gate.validate(self.n_qubits)?;
        match (gate.kind(), angle) {
            (GateKind::Ry, None)
            | (GateKind::X | GateKind::Cz | GateKind::Cnot | GateKind::Cswap, Some(_)) => {
                return Err(Error::AngleMismatch(gate.kind().name()))
            }
            _ => {}
        }
        self.apply_unchecked(gate, angle.unwrap_or(0.0));
        Ok(())
    }

    /// Gate application without validation; callers guarantee the gate fits.
    pub(crate) fn apply_unchecked(&mut self, gate: &GateOp, angle: f64) {
        let n = self.n_qubits;
        match *gate {
            GateOp::X(q) => {
                let mask = qubit_mask(n, q);
                for_each_pair(&mut self.amplitudes, mask, std::mem::swap);
            }
            GateOp::Ry(q, _) => {
                let (s, c) = (0.5 * angle).sin_cos();
                let mask = qubit_mask(n, q);
                for_each_pair(&mut self.amplitudes, mask, |a, b| {
                    let (a0, b0) = (*a, *b);
                    *a = a0 * c - b0 * s;
                    *b = a0 * s + b0 * c;
                });
            }
            GateOp::Cz(q1, q2) => {
                let (m1, m2) = (qubit_mask(n, q1), qubit_mask(n, q2));
                let both = m1 | m2;
                for i in indices_with_zeros(self.dim(), &mut [m1, m2]) {
                    let amp = &mut self.amplitudes[i | both];
                    *amp = -*amp;
                }
            }
            GateOp::Cnot { control, target } => {
                let (mc, mt) = (qubit_mask(n, control), qubit_mask(n, target));
                for i in indices_with_zeros(self.dim(), &mut [mc, mt]) {
                    self.amplitudes.swap(i | mc, i | mc | mt);
                }
            }
            GateOp::Cswap {
                control,
                targets: (t1, t2),
            } => {
                let (mc, m1, m2) = (qubit_mask(n, control), qubit_mask(n, t1), qubit_mask(n, t2));
                for i in indices_with_zeros(self.dim(), &mut [mc, m1, m2]) {
                    self.amplitudes.swap(i | mc | m1, i | mc | m2);
                }
            }
        }
    }
}

/// Calls `f` on every amplitude pair `(i, i | mask)` with the masked bit clear in `i`.
#[inline]
fn for_each_pair<F>(amplitudes: &mut [Complex64], mask: usize, mut f: F)
where
    F: FnMut(&mut Complex64, &mut Complex64),
{
    for block in amplitudes.chunks_exact_mut(mask << 1) {
        let (lo, hi) = block.split_at_mut(mask);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            f(a, b);
        }
    }
}

/// Iterates the indices below `dim` whose bits under every mask are zero.
fn indices_with_zeros(dim: usize, masks: &mut [usize]) -> impl Iterator<Item = usize> {
    masks.sort_unstable();
    let sorted: Vec<usize> = masks.to_vec();
    let count = dim >> sorted.len();
    (0..count).map(move |mut x| {
        for &m in &sorted {
            let low = x & (m - 1);
            x = ((x ^ low) << 1) | low;
        }
        x
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::ParamExpr;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn new_state_is_all_zeros_basis() {
        let s = StateVector::new(1).unwrap();
        assert_eq!(s.amplitudes(), &[c(1.0), c(0.0)]);
        let s = StateVector::new(3).unwrap();
        assert_eq!(s.amplitude(0), c(1.0));
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
        let s = StateVector::new(16).unwrap();
        assert_eq!(s.dim(), 65536);
        assert!(s.amplitudes()[1..].iter().all(|a| a.norm_sqr() == 0.0));
    }

    #[test]
    fn new_state_rejects_out_of_range_sizes() {
        assert_eq!(StateVector::new(0), Err(Error::QubitCount(0)));
        assert_eq!(
            StateVector::new(MAX_QUBITS + 1),
            Err(Error::QubitCount(MAX_QUBITS + 1))
        );
    }

    #[test]
    fn x_on_first_qubit_sets_most_significant_bit() {
        let mut s = StateVector::new(3).unwrap();
        s.apply_gate(&GateOp::x(0), None).unwrap();
        // |100> is index 4
        assert_eq!(s.amplitude(0b100), c(1.0));
    }

    #[test]
    fn zero_rotation_is_identity() {
        let amps: Vec<Complex64> = [0.5, -0.5, 0.5, 0.5].iter().map(|&v| c(v)).collect();
        let mut s = StateVector::from_amplitudes(amps.clone()).unwrap();
        s.apply_gate(&GateOp::ry(1, ParamExpr::new(0)), Some(0.0))
            .unwrap();
        assert_eq!(s.amplitudes(), amps.as_slice());
    }

    #[test]
    fn cswap_swaps_targets_only_under_control() {
        let mut s = StateVector::basis(3, 0b110).unwrap();
        s.apply_gate(&GateOp::cswap(0, 1, 2), None).unwrap();
        assert_eq!(s.amplitude(0b101), c(1.0));

        let mut s = StateVector::basis(3, 0b010).unwrap();
        s.apply_gate(&GateOp::cswap(0, 1, 2), None).unwrap();
        assert_eq!(s.amplitude(0b010), c(1.0));
    }

    #[test]
    fn angle_must_match_gate_kind() {
        let mut s = StateVector::new(2).unwrap();
        assert_eq!(
            s.apply_gate(&GateOp::ry(0, ParamExpr::new(0)), None),
            Err(Error::AngleMismatch("Ry"))
        );
        assert_eq!(
            s.apply_gate(&GateOp::x(0), Some(1.0)),
            Err(Error::AngleMismatch("X"))
        );
        assert_eq!(
            s.apply_gate(&GateOp::x(2), None),
            Err(Error::QubitOutOfRange {
                index: 2,
                n_qubits: 2
            })
        );
    }

    #[test]
    fn zero_insertion_enumerates_matching_indices() {
        let got: Vec<usize> = indices_with_zeros(16, &mut [0b0100, 0b0001]).collect();
        let want: Vec<usize> = (0..16).filter(|i| i & 0b0101 == 0).collect();
        assert_eq!(got, want);
    }
}
