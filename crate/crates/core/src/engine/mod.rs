//! Numerical core: dense pure/mixed state representations, gate kernels,
//! reduced-state quantities, Haar sampling, and exact Hamiltonian evolution.
//!
//! Index convention used everywhere in this crate: qubit 0 is the most
//! significant bit of a basis-state label, so on `n` qubits the basis state
//! `|b_0 b_1 ... b_{n-1}>` has index `sum_q b_q << (n-1-q)`.

pub mod kernel;
pub mod mixed;
pub mod pauli;
pub mod rng;
pub mod state;
pub mod unitary;

pub use mixed::{ChannelStep, MixedState};
pub use pauli::{Pauli, PauliHamiltonian, PauliString};
pub use rng::RngStream;
pub use state::PureState;
pub use unitary::{exact_unitary, sample_haar_state, sample_haar_unitary, DenseUnitary, ExactEvolver};

/// Tolerance for normalization / Hermiticity checks on dense states.
pub const STATE_TOL: f64 = 1e-10;

/// Elementary gate alphabet: every circuit in this crate is expressed with
/// Hadamard, Z-rotation `exp(-i theta Z / 2)` and CNOT only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H { qubit: usize },
    Rz { qubit: usize, theta: f64 },
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub fn is_cnot(&self) -> bool {
        matches!(self, Gate::Cnot { .. })
    }

    /// Largest qubit index the gate touches.
    pub fn max_qubit(&self) -> usize {
        match *self {
            Gate::H { qubit } | Gate::Rz { qubit, .. } => qubit,
            Gate::Cnot { control, target } => control.max(target),
        }
    }

    /// Entry-wise complex conjugate of the gate matrix. H and CNOT are real;
    /// conjugating Rz negates the angle.
    pub fn conjugate(&self) -> Gate {
        match *self {
            Gate::Rz { qubit, theta } => Gate::Rz {
                qubit,
                theta: -theta,
            },
            g => g,
        }
    }

    /// Inverse gate.
    pub fn inverse(&self) -> Gate {
        // H and CNOT are involutions
        self.conjugate()
    }

    /// Gate with every qubit index sent through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Gate {
        match *self {
            Gate::H { qubit } => Gate::H { qubit: map(qubit) },
            Gate::Rz { qubit, theta } => Gate::Rz {
                qubit: map(qubit),
                theta,
            },
            Gate::Cnot { control, target } => Gate::Cnot {
                control: map(control),
                target: map(target),
            },
        }
    }

    pub(crate) fn validate(&self, n_qubits: usize) -> crate::Result<()> {
        if let Gate::Cnot { control, target } = *self {
            if control == target {
                return Err(crate::Error::invalid(format!(
                    "CNOT control and target coincide at qubit {control}"
                )));
            }
        }
        let m = self.max_qubit();
        if m >= n_qubits {
            return Err(crate::Error::IndexOutOfRange {
                index: m,
                n_qubits,
            });
        }
        Ok(())
    }
}
