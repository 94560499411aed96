//! Simulation toolkit for diagnosing information scrambling of Hamiltonian
//! dynamics through an EPR-teleportation experiment, with and without
//! decoherence, plus the derivation of the Yang-Mills-Ising spin chain from
//! truncated SU(2) lattice gauge theory on a two-leg ladder.

pub mod circuits;
pub mod engine;
pub mod error;
pub mod gauge;
pub mod protocol;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
