//! Result and noise-description types shared by the run variants.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::engine::RngStream;
use crate::{Error, Result};

/// Which gates the depolarizing noise touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseScope {
    /// Every CNOT in the protocol, including EPR preparation and measurement.
    AllCnots,
    /// Only the CNOTs of the two evolution circuits.
    EvolutionOnly,
    /// The whole evolution unitary as one depolarizing channel per register.
    WholeUnitary,
}

impl fmt::Display for NoiseScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NoiseScope::AllCnots => "all_cnots",
            NoiseScope::EvolutionOnly => "evolution_only",
            NoiseScope::WholeUnitary => "whole_unitary",
        };
        f.write_str(s)
    }
}

/// Depolarizing-noise description for a run.
#[derive(Debug, Clone)]
pub struct NoiseSpec {
    pub p: f64,
    pub scope: NoiseScope,
    pub n_traj: usize,
    pub rng: RngStream,
}

impl NoiseSpec {
    pub fn new(p: f64, scope: NoiseScope, n_traj: usize, rng: RngStream) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        Ok(NoiseSpec {
            p,
            scope,
            n_traj,
            rng,
        })
    }
}

/// Renyi-2 diagnostics of one exact-channel run, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub s2_r: f64,
    pub s2_bpd: f64,
    pub s2_rbpd: f64,
    /// `S2(R) + S2(B'D) - S2(RB'D)`.
    pub i2: f64,
    /// `2^i2 * p_epr`.
    pub delta: f64,
}

/// Outcome of one experiment run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HpResult {
    pub t: f64,
    pub p_epr: f64,
    pub f_epr: f64,
    /// Standard errors; zero for exact runs.
    pub p_err: f64,
    pub f_err: f64,
    /// Trajectory count; zero for exact runs.
    pub n_traj: usize,
    pub diagnostics: Option<Diagnostics>,
}

impl HpResult {
    pub(crate) fn exact(p_epr: f64, f_epr: f64) -> Self {
        HpResult {
            t: 0.0,
            p_epr,
            f_epr,
            p_err: 0.0,
            f_err: 0.0,
            n_traj: 0,
            diagnostics: None,
        }
    }

    pub fn with_time(mut self, t: f64) -> Self {
        self.t = t;
        self
    }
}
