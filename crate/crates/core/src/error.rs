use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    IndexOutOfRange { index: usize, n_qubits: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("system size {n_qubits} exceeds the dense feasibility bound {bound}")]
    SizeBound { n_qubits: usize, bound: usize },

    #[error("state is not physical: {0}")]
    NonPhysicalState(String),

    #[error("projection probability {prob:.3e} is numerically zero")]
    ProjectionImpossible { prob: f64 },

    #[error("error probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
