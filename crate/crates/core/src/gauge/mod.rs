//! SU(2) Kogut-Susskind gauge theory on a two-leg ladder: gauge-invariant
//! basis enumeration, exact Wigner 3j symbols, vertex transition
//! coefficients, electric/magnetic matrix elements, the dual-spin map, and
//! the closed-form spin Hamiltonian of the spin-1/2 truncation.

pub mod basis;
pub mod halfint;
pub mod hamiltonian;
pub mod lambda;
pub mod wigner;

pub use basis::{dual_spin_inverse, dual_spin_map, enumerate_physical_basis, LadderBasisState};
pub use halfint::{triangle_ok, HalfInt};
pub use hamiltonian::{
    electric_matrix, magnetic_matrix, plaquette_action, ym_ising_closed_form, SparseHamiltonian,
};
pub use lambda::lambda_coeff;
pub use wigner::{wigner_3j, SqrtRational};
