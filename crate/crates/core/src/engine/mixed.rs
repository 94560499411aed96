//! Dense density matrices with unitary and decohering channel steps.
//!
//! A `2^n x 2^n` density matrix is stored column-major and viewed, through its
//! flat buffer, as a `2n`-qubit amplitude vector: column-index qubit `q` sits
//! at virtual qubit `q`, row-index qubit `q` at virtual qubit `n + q`. Every
//! pure-state kernel is reused on that buffer, with the conjugated gate on the
//! column side, so `rho -> G rho G^dagger` needs no dedicated kernels.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::kernel;
use super::state::validate_targets;
use super::{Gate, Pauli, PureState, STATE_TOL};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct MixedState {
    n_qubits: usize,
    mat: DMatrix<Complex64>,
}

impl MixedState {
    pub fn from_pure(state: &PureState) -> Self {
        let d = 1usize << state.n_qubits();
        let amps = state.amplitudes();
        let mat = DMatrix::from_fn(d, d, |r, c| amps[r] * amps[c].conj());
        MixedState {
            n_qubits: state.n_qubits(),
            mat,
        }
    }

    /// Maximally mixed state `I / 2^n`.
    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let d = 1usize << n_qubits;
        let mat = DMatrix::from_diagonal_element(d, d, Complex64::new(1.0 / d as f64, 0.0));
        MixedState { n_qubits, mat }
    }

    /// Validates shape, Hermiticity and unit trace (positivity is checked
    /// where the spectrum is actually needed, in `eigenvalues`).
    pub fn from_matrix(n_qubits: usize, mat: DMatrix<Complex64>) -> Result<Self> {
        let d = 1usize << n_qubits;
        if mat.nrows() != d || mat.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: mat.nrows().max(mat.ncols()),
            });
        }
        for r in 0..d {
            for c in r..d {
                if (mat[(r, c)] - mat[(c, r)].conj()).norm() > STATE_TOL {
                    return Err(Error::NonPhysicalState(format!(
                        "matrix is not Hermitian at ({r}, {c})"
                    )));
                }
            }
        }
        let tr: Complex64 = mat.diagonal().iter().sum();
        if (tr - Complex64::new(1.0, 0.0)).norm() > STATE_TOL {
            return Err(Error::NonPhysicalState(format!(
                "trace {tr} deviates from 1"
            )));
        }
        Ok(MixedState { n_qubits, mat })
    }

    fn new_unchecked(n_qubits: usize, mat: DMatrix<Complex64>) -> Self {
        MixedState { n_qubits, mat }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn trace(&self) -> f64 {
        self.mat.diagonal().iter().map(|z| z.re).sum()
    }

    /// Tr[rho^2]; for a Hermitian matrix this is the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let tr = self.trace();
        if tr < 1e-28 {
            return Err(Error::ProjectionImpossible { prob: tr });
        }
        self.mat.iter_mut().for_each(|z| *z /= tr);
        Ok(())
    }

    pub fn apply_gate(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.apply_gate_unchecked(gate);
        Ok(())
    }

    pub fn apply_gate_unchecked(&mut self, gate: Gate) {
        let n = self.n_qubits;
        let nn = 2 * n;
        let s = self.mat.as_mut_slice();
        match gate {
            Gate::H { qubit } => {
                kernel::apply_h(s, nn, n + qubit);
                kernel::apply_h(s, nn, qubit);
            }
            Gate::Rz { qubit, theta } => {
                kernel::apply_rz(s, nn, n + qubit, theta);
                kernel::apply_rz(s, nn, qubit, -theta);
            }
            Gate::Cnot { control, target } => {
                kernel::apply_cnot(s, nn, n + control, n + target);
                kernel::apply_cnot(s, nn, control, target);
            }
        }
    }

    /// `rho -> P rho P` for a single-qubit Pauli `P`.
    pub fn apply_pauli(&mut self, qubit: usize, p: Pauli) {
        let n = self.n_qubits;
        let nn = 2 * n;
        let s = self.mat.as_mut_slice();
        kernel::apply_pauli(s, nn, n + qubit, p);
        kernel::apply_pauli(s, nn, qubit, p);
        if p == Pauli::Y {
            // the column side needs conj(Y) = -Y
            self.mat.iter_mut().for_each(|z| *z = -*z);
        }
    }

    /// Conjugate by a dense unitary acting on `targets`.
    pub fn apply_dense(&mut self, u: &DMatrix<Complex64>, targets: &[usize]) -> Result<()> {
        validate_targets(self.n_qubits, targets)?;
        if u.nrows() != 1 << targets.len() {
            return Err(Error::DimensionMismatch {
                expected: 1 << targets.len(),
                got: u.nrows(),
            });
        }
        let n = self.n_qubits;
        let nn = 2 * n;
        let row_targets: Vec<usize> = targets.iter().map(|&t| n + t).collect();
        let u_conj = u.map(|z| z.conj());
        let s = self.mat.as_mut_slice();
        kernel::apply_dense(s, nn, u, &row_targets);
        kernel::apply_dense(s, nn, &u_conj, targets);
        Ok(())
    }

    /// Partial trace keeping `keep` (keep[0] becomes the most significant
    /// qubit of the result). Preserves the trace, normalized or not.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<MixedState> {
        validate_targets(self.n_qubits, keep)?;
        let (k, offs, comp) = kernel::subset_tables(self.n_qubits, keep);
        let dim = 1usize << k;
        let mut out = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        for b in 0..(1usize << comp.len()) {
            let base = kernel::scatter(b, &comp);
            for c in 0..dim {
                let col = offs[c] | base;
                for r in 0..dim {
                    out[(r, c)] += self.mat[(offs[r] | base, col)];
                }
            }
        }
        Ok(MixedState::new_unchecked(k, out))
    }

    /// Whole-subregister depolarization:
    /// `rho -> (1-p) rho + p (I/2^k) (x) Tr_targets[rho]`.
    pub fn depolarize(&mut self, targets: &[usize], p: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        validate_targets(self.n_qubits, targets)?;
        if p == 0.0 {
            return Ok(());
        }
        let complement: Vec<usize> = (0..self.n_qubits).filter(|q| !targets.contains(q)).collect();
        let sigma = self.partial_trace(&complement)?;
        let (k, offs, comp) = kernel::subset_tables(self.n_qubits, targets);
        let w = p / (1usize << k) as f64;
        self.mat.iter_mut().for_each(|z| *z *= 1.0 - p);
        let cdim = 1usize << comp.len();
        for br in 0..cdim {
            let rb = kernel::scatter(br, &comp);
            for bc in 0..cdim {
                let cb = kernel::scatter(bc, &comp);
                let v = sigma.mat[(br, bc)] * w;
                for off in &offs {
                    self.mat[(off | rb, off | cb)] += v;
                }
            }
        }
        Ok(())
    }

    /// Noisy CNOT: with probability `1-p` the CNOT acts, otherwise the gate's
    /// qubit pair is replaced by the maximally mixed two-qubit state.
    pub fn noisy_cnot(&mut self, control: usize, target: usize, p: f64) -> Result<()> {
        self.apply_gate(Gate::Cnot { control, target })?;
        self.depolarize(&[control, target], p)
    }

    /// Project each `(q1, q2)` pair onto (|00> + |11>)/sqrt(2), in place.
    /// Returns Tr[Pi rho]; the state is left unnormalized.
    pub fn project_epr_pairs(&mut self, pairs: &[(usize, usize)]) -> Result<f64> {
        let flat: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        validate_targets(self.n_qubits, &flat)?;
        let n = self.n_qubits;
        let nn = 2 * n;
        let s = self.mat.as_mut_slice();
        for &(a, b) in pairs {
            kernel::project_epr_pair(s, nn, n + a, n + b);
            kernel::project_epr_pair(s, nn, a, b);
        }
        Ok(self.trace())
    }

    /// Tr[Pi rho] for the product of EPR-pair projectors, without mutation.
    pub fn epr_expectation(&self, pairs: &[(usize, usize)]) -> Result<f64> {
        self.clone().project_epr_pairs(pairs)
    }

    /// Real spectrum, sorted ascending; errors when an eigenvalue is negative
    /// beyond tolerance.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let eig = self.mat.clone().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if let Some(&lo) = vals.first() {
            if lo < -STATE_TOL {
                return Err(Error::NonPhysicalState(format!(
                    "negative eigenvalue {lo}"
                )));
            }
        }
        Ok(vals)
    }

    /// Von Neumann entropy in bits.
    pub fn von_neumann_entropy(&self) -> Result<f64> {
        Ok(self
            .eigenvalues()?
            .into_iter()
            .filter(|&l| l > 0.0)
            .map(|l| -l * l.log2())
            .sum())
    }

    /// Second Renyi entropy `-log2 Tr[rho^2]` in bits.
    pub fn renyi2_entropy(&self) -> f64 {
        -self.purity().log2()
    }

    pub fn apply_channel_step(&mut self, step: &ChannelStep) -> Result<()> {
        match step {
            ChannelStep::Unitary(gate) => self.apply_gate(*gate),
            ChannelStep::Dense { u, targets } => self.apply_dense(u, targets),
            ChannelStep::Depolarize { targets, p } => self.depolarize(targets, *p),
            ChannelStep::NoisyCnot { control, target, p } => {
                self.noisy_cnot(*control, *target, *p)
            }
        }
    }
}

/// One step of a quantum channel acting on a `MixedState`.
#[derive(Debug, Clone)]
pub enum ChannelStep {
    Unitary(Gate),
    Dense {
        u: DMatrix<Complex64>,
        targets: Vec<usize>,
    },
    Depolarize {
        targets: Vec<usize>,
        p: f64,
    },
    NoisyCnot {
        control: usize,
        target: usize,
        p: f64,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::RngStream;
    use rand::Rng;

    fn bell() -> PureState {
        let mut s = PureState::zero(2);
        s.apply_gate(Gate::H { qubit: 0 }).unwrap();
        s.apply_gate(Gate::Cnot {
            control: 0,
            target: 1,
        })
        .unwrap();
        s
    }

    fn random_state(n: usize, seed: u64) -> PureState {
        let mut rng = RngStream::new(seed, 0).rng();
        let amps: Vec<Complex64> = (0..1usize << n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        PureState::from_amplitudes(n, amps.into_iter().map(|a| a / norm).collect()).unwrap()
    }

    #[test]
    fn pure_density_has_unit_purity_and_zero_entropy() {
        let rho = MixedState::from_pure(&bell());
        assert!((rho.trace() - 1.0).abs() < 1e-14);
        assert!((rho.purity() - 1.0).abs() < 1e-13);
        assert!(rho.von_neumann_entropy().unwrap().abs() < 1e-10);
    }

    #[test]
    fn bell_partial_trace_is_maximally_mixed() {
        let rho = MixedState::from_pure(&bell()).partial_trace(&[0]).unwrap();
        assert!((rho.matrix()[(0, 0)].re - 0.5).abs() < 1e-14);
        assert!((rho.von_neumann_entropy().unwrap() - 1.0).abs() < 1e-12);
        assert!((rho.renyi2_entropy() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gates_on_density_match_pure_evolution() {
        let mut rng = RngStream::new(21, 0).rng();
        let n = 4;
        let mut psi = random_state(n, 5);
        let mut rho = MixedState::from_pure(&psi);
        for _ in 0..60 {
            let g = match rng.gen_range(0..3) {
                0 => Gate::H {
                    qubit: rng.gen_range(0..n),
                },
                1 => Gate::Rz {
                    qubit: rng.gen_range(0..n),
                    theta: rng.gen_range(-3.0..3.0),
                },
                _ => {
                    let c = rng.gen_range(0..n);
                    let mut t = rng.gen_range(0..n);
                    while t == c {
                        t = rng.gen_range(0..n);
                    }
                    Gate::Cnot { control: c, target: t }
                }
            };
            psi.apply_gate(g).unwrap();
            rho.apply_gate(g).unwrap();
        }
        let want = MixedState::from_pure(&psi);
        let diff: f64 = rho
            .matrix()
            .iter()
            .zip(want.matrix().iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-12, "diff {diff}");
    }

    #[test]
    fn depolarize_matches_pauli_twirl_oracle() {
        // (I/2) (x) Tr_q[rho] = (1/4) sum_{P in {I,X,Y,Z}} P rho P
        let psi = random_state(3, 9);
        let p = 0.37;
        let q = 1;
        let mut got = MixedState::from_pure(&psi);
        got.depolarize(&[q], p).unwrap();
        let base = MixedState::from_pure(&psi);
        let mut want = DMatrix::from_element(8, 8, Complex64::new(0.0, 0.0));
        want += base.matrix() * Complex64::new(1.0 - p, 0.0);
        for pauli in [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z] {
            let mut t = base.clone();
            t.apply_pauli(q, pauli);
            want += t.matrix() * Complex64::new(p / 4.0, 0.0);
        }
        let diff: f64 = got
            .matrix()
            .iter()
            .zip(want.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-13, "diff {diff}");
    }

    #[test]
    fn depolarize_full_strength_erases_register() {
        let psi = random_state(2, 3);
        let mut rho = MixedState::from_pure(&psi);
        rho.depolarize(&[0, 1], 1.0).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let want = if r == c { 0.25 } else { 0.0 };
                assert!((rho.matrix()[(r, c)] - Complex64::new(want, 0.0)).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn noisy_cnot_preserves_trace_and_reduces_purity() {
        let psi = random_state(3, 17);
        let mut rho = MixedState::from_pure(&psi);
        rho.noisy_cnot(0, 2, 0.3).unwrap();
        assert!((rho.trace() - 1.0).abs() < 1e-12);
        assert!(rho.purity() < 1.0 - 1e-6);

        let mut clean = MixedState::from_pure(&psi);
        clean.noisy_cnot(0, 2, 0.0).unwrap();
        let mut gated = MixedState::from_pure(&psi);
        gated
            .apply_gate(Gate::Cnot {
                control: 0,
                target: 2,
            })
            .unwrap();
        let diff: f64 = clean
            .matrix()
            .iter()
            .zip(gated.matrix().iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-14);
    }

    #[test]
    fn epr_projection_expectation_matches_pure_state() {
        let mut psi = random_state(4, 29);
        let rho = MixedState::from_pure(&psi);
        let p_mixed = rho.epr_expectation(&[(0, 2)]).unwrap();
        let p_pure = psi.project_epr_pairs(&[(0, 2)]).unwrap();
        assert!((p_mixed - p_pure).abs() < 1e-13);
    }

    #[test]
    fn maximally_mixed_entropies() {
        let rho = MixedState::maximally_mixed(2);
        assert!((rho.von_neumann_entropy().unwrap() - 2.0).abs() < 1e-12);
        assert!((rho.renyi2_entropy() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn dense_application_matches_gate_kernels() {
        // CNOT as a dense matrix on (control, target) = (1, 0)
        let mut u = DMatrix::from_element(4, 4, Complex64::new(0.0, 0.0));
        for (r, c) in [(0, 0), (1, 1), (3, 2), (2, 3)] {
            u[(r, c)] = Complex64::new(1.0, 0.0);
        }
        let psi = random_state(3, 41);
        let mut a = MixedState::from_pure(&psi);
        a.apply_dense(&u, &[1, 0]).unwrap();
        let mut b = MixedState::from_pure(&psi);
        b.apply_gate(Gate::Cnot {
            control: 1,
            target: 0,
        })
        .unwrap();
        let diff: f64 = a
            .matrix()
            .iter()
            .zip(b.matrix().iter())
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-13);
    }
}
