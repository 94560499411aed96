//! Dense pure-state vector over 2^n basis states.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::kernel;
use super::{Gate, MixedState, Pauli, STATE_TOL};
use crate::{Error, Result};

/// Largest subsystem for which a reduced density matrix is materialized.
pub const REDUCED_DENSITY_BOUND: usize = 14;

#[derive(Debug, Clone)]
pub struct PureState {
    n_qubits: usize,
    amps: Vec<Complex64>,
    /// Set while the vector is intentionally unnormalized (after a projection).
    pub norm_deferred: bool,
}

impl PureState {
    /// Computational basis state |0...0>.
    pub fn zero(n_qubits: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        PureState {
            n_qubits,
            amps,
            norm_deferred: false,
        }
    }

    pub fn from_amplitudes(n_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << n_qubits {
            return Err(Error::DimensionMismatch {
                expected: 1 << n_qubits,
                got: amps.len(),
            });
        }
        let state = PureState {
            n_qubits,
            amps,
            norm_deferred: false,
        };
        if (state.norm_sq() - 1.0).abs() > STATE_TOL {
            return Err(Error::NonPhysicalState(format!(
                "squared norm {} deviates from 1",
                state.norm_sq()
            )));
        }
        Ok(state)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let n2 = self.norm_sq();
        if n2 < 1e-28 {
            return Err(Error::ProjectionImpossible { prob: n2 });
        }
        let s = 1.0 / n2.sqrt();
        for a in &mut self.amps {
            *a *= s;
        }
        self.norm_deferred = false;
        Ok(())
    }

    pub fn apply_gate(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.apply_gate_unchecked(gate);
        Ok(())
    }

    /// Gate application without index validation; callers validate circuits once.
    #[inline]
    pub fn apply_gate_unchecked(&mut self, gate: Gate) {
        let n = self.n_qubits;
        match gate {
            Gate::H { qubit } => kernel::apply_h(&mut self.amps, n, qubit),
            Gate::Rz { qubit, theta } => kernel::apply_rz(&mut self.amps, n, qubit, theta),
            Gate::Cnot { control, target } => kernel::apply_cnot(&mut self.amps, n, control, target),
        }
    }

    pub fn apply_pauli(&mut self, qubit: usize, p: Pauli) {
        kernel::apply_pauli(&mut self.amps, self.n_qubits, qubit, p);
    }

    /// Contract a dense unitary matrix onto `targets`.
    pub fn apply_dense(&mut self, u: &DMatrix<Complex64>, targets: &[usize]) -> Result<()> {
        validate_targets(self.n_qubits, targets)?;
        if u.nrows() != 1 << targets.len() {
            return Err(Error::DimensionMismatch {
                expected: 1 << targets.len(),
                got: u.nrows(),
            });
        }
        kernel::apply_dense(&mut self.amps, self.n_qubits, u, targets);
        Ok(())
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// 2-norm distance | |self> - |other> |.
    pub fn distance(&self, other: &PureState) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// 2-norm distance minimized over a global phase.
    pub fn distance_up_to_phase(&self, other: &PureState) -> f64 {
        let ov = self.inner(other).norm();
        (self.norm_sq() + other.norm_sq() - 2.0 * ov).max(0.0).sqrt()
    }

    /// Project each `(q1, q2)` pair onto (|00> + |11>)/sqrt(2), in place.
    /// Returns <psi| Pi |psi>; the state is left unnormalized (norm-deferred).
    pub fn project_epr_pairs(&mut self, pairs: &[(usize, usize)]) -> Result<f64> {
        let n = self.n_qubits;
        let mut seen = vec![false; n];
        for &(a, b) in pairs {
            for q in [a, b] {
                if q >= n {
                    return Err(Error::IndexOutOfRange {
                        index: q,
                        n_qubits: n,
                    });
                }
                if seen[q] {
                    return Err(Error::invalid(format!("qubit {q} appears in two pairs")));
                }
                seen[q] = true;
            }
        }
        for &(a, b) in pairs {
            kernel::project_epr_pair(&mut self.amps, n, a, b);
        }
        self.norm_deferred = true;
        Ok(self.norm_sq())
    }

    /// Probability that every listed qubit reads 0 in the Z basis.
    pub fn prob_all_zero(&self, qubits: &[usize]) -> f64 {
        let mask: usize = qubits.iter().map(|&q| kernel::bit(self.n_qubits, q)).fold(0, |a, b| a | b);
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Partial trace over the complement of `subset`. `subset[0]` becomes the
    /// most significant qubit of the reduced system.
    pub fn reduced_density(&self, subset: &[usize]) -> Result<MixedState> {
        validate_targets(self.n_qubits, subset)?;
        if subset.len() > REDUCED_DENSITY_BOUND {
            return Err(Error::SizeBound {
                n_qubits: subset.len(),
                bound: REDUCED_DENSITY_BOUND,
            });
        }
        let (k, sub_offsets, comp_masks) = kernel::subset_tables(self.n_qubits, subset);
        let dim = 1usize << k;
        let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        for b in 0..(1usize << comp_masks.len()) {
            let base = kernel::scatter(b, &comp_masks);
            for (a, off) in sub_offsets.iter().enumerate() {
                v[a] = self.amps[base | off];
            }
            for c in 0..dim {
                let vc = v[c].conj();
                if vc == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for r in 0..dim {
                    m[(r, c)] += v[r] * vc;
                }
            }
        }
        MixedState::from_matrix(k, m)
    }

    /// Tr[rho_subset^2] by direct amplitude contraction; independent of
    /// `reduced_density` in that no density matrix object is built.
    pub fn reduced_purity(&self, subset: &[usize]) -> Result<f64> {
        validate_targets(self.n_qubits, subset)?;
        let (k, sub_offsets, comp_masks) = kernel::subset_tables(self.n_qubits, subset);
        let dim = 1usize << k;
        let mut gram = vec![Complex64::new(0.0, 0.0); dim * dim];
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        for b in 0..(1usize << comp_masks.len()) {
            let base = kernel::scatter(b, &comp_masks);
            for (a, off) in sub_offsets.iter().enumerate() {
                v[a] = self.amps[base | off];
            }
            for r in 0..dim {
                let vr = v[r];
                for c in 0..dim {
                    gram[r * dim + c] += vr * v[c].conj();
                }
            }
        }
        Ok(gram.iter().map(|z| z.norm_sqr()).sum())
    }
}

pub(crate) fn validate_targets(n: usize, targets: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &t in targets {
        if t >= n {
            return Err(Error::IndexOutOfRange {
                index: t,
                n_qubits: n,
            });
        }
        if seen[t] {
            return Err(Error::invalid(format!("duplicate target qubit {t}")));
        }
        seen[t] = true;
    }
    Ok(())
}
