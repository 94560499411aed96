//! Dense unitaries: Haar-random sampling and exact Hamiltonian evolution.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};

use super::{PauliHamiltonian, PureState, RngStream, STATE_TOL};
use crate::{Error, Result};

/// Largest system for which exact (dense-diagonalization) evolution is built.
pub const EXACT_EVOLVER_BOUND: usize = 12;

/// A validated dense unitary on `n_qubits` qubits.
#[derive(Debug, Clone)]
pub struct DenseUnitary {
    n_qubits: usize,
    mat: DMatrix<Complex64>,
}

impl DenseUnitary {
    pub fn new(n_qubits: usize, mat: DMatrix<Complex64>) -> Result<Self> {
        let d = 1usize << n_qubits;
        if mat.nrows() != d || mat.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: mat.nrows().max(mat.ncols()),
            });
        }
        let gram = mat.adjoint() * &mat;
        for r in 0..d {
            for c in 0..d {
                let want = if r == c {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                if (gram[(r, c)] - want).norm() > STATE_TOL * d as f64 {
                    return Err(Error::NonPhysicalState(format!(
                        "matrix is not unitary: (U^dag U)[{r},{c}] = {}",
                        gram[(r, c)]
                    )));
                }
            }
        }
        Ok(DenseUnitary { n_qubits, mat })
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

    /// Entry-wise complex conjugate U*.
    pub fn conjugate(&self) -> DenseUnitary {
        DenseUnitary {
            n_qubits: self.n_qubits,
            mat: self.mat.map(|z| z.conj()),
        }
    }

    /// Inverse U^dagger.
    pub fn adjoint(&self) -> DenseUnitary {
        DenseUnitary {
            n_qubits: self.n_qubits,
            mat: self.mat.adjoint(),
        }
    }
}

/// Haar-distributed unitary via the QR decomposition of a complex Ginibre
/// matrix, with the R-diagonal phases folded back in so the distribution is
/// exactly invariant.
pub fn sample_haar_unitary(n_qubits: usize, stream: RngStream) -> DenseUnitary {
    let d = 1usize << n_qubits;
    let mut rng = stream.rng();
    let g = DMatrix::from_fn(d, d, |_, _| {
        let re: f64 = StandardNormal.sample(&mut rng);
        let im: f64 = StandardNormal.sample(&mut rng);
        Complex64::new(re, im)
    });
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    DenseUnitary {
        n_qubits,
        mat: q,
    }
}

/// Haar-distributed pure state: a normalized complex Gaussian vector.
pub fn sample_haar_state(n_qubits: usize, stream: RngStream) -> PureState {
    let mut rng = stream.rng();
    let mut amps: Vec<Complex64> = (0..1usize << n_qubits)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    PureState::from_amplitudes(n_qubits, amps).expect("normalized by construction")
}

/// Eigendecomposition of a Hermitian Pauli-sum Hamiltonian, reused to build
/// `exp(-i H t)` for many times `t`.
#[derive(Debug, Clone)]
pub struct ExactEvolver {
    n_qubits: usize,
    eigvals: DVector<f64>,
    eigvecs: DMatrix<Complex64>,
}

impl ExactEvolver {
    pub fn new(h: &PauliHamiltonian) -> Result<Self> {
        if h.n_qubits > EXACT_EVOLVER_BOUND {
            return Err(Error::SizeBound {
                n_qubits: h.n_qubits,
                bound: EXACT_EVOLVER_BOUND,
            });
        }
        let eig = h.dense().symmetric_eigen();
        Ok(ExactEvolver {
            n_qubits: h.n_qubits,
            eigvals: eig.eigenvalues,
            eigvecs: eig.eigenvectors,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigvals
    }

    /// `exp(-i H t)`.
    pub fn unitary(&self, t: f64) -> DenseUnitary {
        let d = self.eigvals.len();
        let mut m = self.eigvecs.clone();
        for j in 0..d {
            let phase = Complex64::from_polar(1.0, -self.eigvals[j] * t);
            for i in 0..d {
                m[(i, j)] *= phase;
            }
        }
        DenseUnitary {
            n_qubits: self.n_qubits,
            mat: m * self.eigvecs.adjoint(),
        }
    }
}

/// One-shot `exp(-i H t)`.
pub fn exact_unitary(h: &PauliHamiltonian, t: f64) -> Result<DenseUnitary> {
    Ok(ExactEvolver::new(h)?.unitary(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::PauliString;
    use std::str::FromStr;

    #[test]
    fn haar_sample_is_unitary_and_reproducible() {
        let u1 = sample_haar_unitary(3, RngStream::new(5, 2));
        let u2 = sample_haar_unitary(3, RngStream::new(5, 2));
        assert_eq!(u1.matrix(), u2.matrix());
        let u3 = sample_haar_unitary(3, RngStream::new(5, 3));
        assert_ne!(u1.matrix(), u3.matrix());
        DenseUnitary::new(3, u1.matrix().clone()).unwrap();
    }

    #[test]
    fn haar_second_moment() {
        // E |U_ij|^2 = 1/d for every entry
        let n_samples = 400;
        let d = 4;
        let mut acc = vec![0.0f64; d * d];
        for s in 0..n_samples {
            let u = sample_haar_unitary(2, RngStream::new(77, s));
            for (k, z) in u.matrix().iter().enumerate() {
                acc[k] += z.norm_sqr();
            }
        }
        for a in acc {
            let mean = a / n_samples as f64;
            assert!((mean - 0.25).abs() < 0.05, "mean {mean}");
        }
    }

    #[test]
    fn exact_evolution_of_x_field() {
        // H = X: exp(-i X t) = cos t I - i sin t X
        let mut h = PauliHamiltonian::new(1);
        h.add(1.0, PauliString::from_str("X").unwrap());
        let t = 0.7;
        let u = exact_unitary(&h, t).unwrap();
        let m = u.matrix();
        assert!((m[(0, 0)] - Complex64::new(t.cos(), 0.0)).norm() < 1e-12);
        assert!((m[(0, 1)] - Complex64::new(0.0, -t.sin())).norm() < 1e-12);
        assert!((m[(1, 0)] - Complex64::new(0.0, -t.sin())).norm() < 1e-12);
        assert!((m[(1, 1)] - Complex64::new(t.cos(), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn evolver_composes_in_time() {
        let mut h = PauliHamiltonian::new(2);
        h.add(-1.0, PauliString::from_str("ZZ").unwrap());
        h.add(-1.05, PauliString::from_str("XI").unwrap());
        h.add(0.5, PauliString::from_str("IZ").unwrap());
        let ev = ExactEvolver::new(&h).unwrap();
        let a = ev.unitary(0.3).matrix() * ev.unitary(0.5).matrix();
        let b = ev.unitary(0.8);
        let diff: f64 = a
            .iter()
            .zip(b.matrix().iter())
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(diff < 1e-12);
    }
}
