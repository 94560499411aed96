//! Ideal and trajectory-sampled runs of the teleportation experiment.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::circuits::{build_epr_prep, epr_projector_overlap, Circuit};
use crate::engine::{DenseUnitary, Gate, Pauli, PureState};
use crate::{Error, Result};

use super::layout::ProtocolLayout;
use super::types::{HpResult, NoiseScope, NoiseSpec};

pub(crate) const PAULIS: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
/// Offset added to the caller's stream index for the bootstrap generator;
/// trajectory streams occupy `base..base + n_traj`.
pub(crate) const BOOTSTRAP_OFFSET: u64 = 1 << 31;
pub(crate) const BOOTSTRAP_RESAMPLES: usize = 200;

/// The system evolution, either as a gate sequence or a dense matrix.
#[derive(Debug, Clone)]
pub enum Evolution {
    Circuit(Circuit),
    Dense(DenseUnitary),
}

impl Evolution {
    pub fn n_qubits(&self) -> usize {
        match self {
            Evolution::Circuit(c) => c.n_qubits(),
            Evolution::Dense(d) => d.n_qubits(),
        }
    }

    pub(crate) fn as_circuit(&self) -> Result<&Circuit> {
        match self {
            Evolution::Circuit(c) => Ok(c),
            Evolution::Dense(_) => Err(Error::invalid(
                "per-CNOT noise needs a gate-level circuit, not a dense unitary",
            )),
        }
    }

    /// Apply the evolution (or its complex conjugate) to the listed qubits.
    pub(crate) fn apply_pure(
        &self,
        state: &mut PureState,
        map: &[usize],
        conjugated: bool,
    ) -> Result<()> {
        match self {
            Evolution::Circuit(c) => {
                let c = if conjugated { c.conjugate() } else { c.clone() };
                c.relabel(state.n_qubits(), map)?.run(state)
            }
            Evolution::Dense(d) => {
                let m = if conjugated {
                    d.conjugate().matrix().clone()
                } else {
                    d.matrix().clone()
                };
                state.apply_dense(&m, map)
            }
        }
    }
}

impl From<Circuit> for Evolution {
    fn from(c: Circuit) -> Self {
        Evolution::Circuit(c)
    }
}

impl From<DenseUnitary> for Evolution {
    fn from(d: DenseUnitary) -> Self {
        Evolution::Dense(d)
    }
}

fn check_system_size(layout: &ProtocolLayout, n: usize) -> Result<()> {
    if n != layout.n_sites() {
        return Err(Error::DimensionMismatch {
            expected: layout.n_sites(),
            got: n,
        });
    }
    Ok(())
}

/// Noiseless run: EPR preparation, `u` on AB and `u*` on A'B', projection of
/// (D, D'), then the EPR overlap of (R, R') in the projected state.
pub fn run_hp_ideal(layout: &ProtocolLayout, u: &Evolution) -> Result<HpResult> {
    check_system_size(layout, u.n_qubits())?;
    let total = layout.total_qubits();
    let mut st = PureState::zero(total);
    build_epr_prep(total, &layout.prep_pairs())?.run(&mut st)?;
    u.apply_pure(&mut st, &layout.ab_map(), false)?;
    u.apply_pure(&mut st, &layout.mirror_map(), true)?;
    let (p_epr, post) = epr_projector_overlap(&st, &layout.dd_pairs())?;
    let post = post.ok_or(Error::ProjectionImpossible { prob: p_epr })?;
    let (f_epr, _) = epr_projector_overlap(&post, &layout.rr_pairs())?;
    Ok(HpResult::exact(p_epr, f_epr))
}

/// `CNOT(a, b); H(a)` per pair; maps each EPR pair to `|00>`, so the EPR
/// projector becomes the all-zero projector on the listed qubits.
pub(crate) fn epr_measurement_circuit(
    n_qubits: usize,
    pairs: &[(usize, usize)],
) -> Result<Circuit> {
    Ok(build_epr_prep(n_qubits, pairs)?.inverse())
}

/// Run `gates` on `state`, replacing each CNOT with probability `p` by a
/// uniformly random two-qubit Pauli (identity included).
pub(crate) fn run_gates_noisy(
    state: &mut PureState,
    circuit: &Circuit,
    p: f64,
    rng: &mut ChaCha8Rng,
) {
    if p == 0.0 {
        for &g in circuit.gates() {
            state.apply_gate_unchecked(g);
        }
        return;
    }
    for &g in circuit.gates() {
        match g {
            Gate::Cnot { control, target } if rng.gen::<f64>() < p => {
                let idx = rng.gen_range(0..16usize);
                state.apply_pauli(control, PAULIS[idx / 4]);
                state.apply_pauli(target, PAULIS[idx % 4]);
            }
            _ => state.apply_gate_unchecked(g),
        }
    }
}

pub(crate) fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn std_dev(xs: &[f64]) -> f64 {
    let m = mean(xs);
    (xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / xs.len() as f64).sqrt()
}

/// Bootstrap standard errors of the mean of `ps` and of the ratio
/// `mean(pfs)/mean(ps)`.
pub(crate) fn bootstrap_errors(
    ps: &[f64],
    pfs: &[f64],
    rng: &mut ChaCha8Rng,
) -> (f64, f64) {
    let n = ps.len();
    let fallback = mean(pfs) / mean(ps);
    let mut bp = Vec::with_capacity(BOOTSTRAP_RESAMPLES);
    let mut bf = Vec::with_capacity(BOOTSTRAP_RESAMPLES);
    for _ in 0..BOOTSTRAP_RESAMPLES {
        let mut sp = 0.0;
        let mut spf = 0.0;
        for _ in 0..n {
            let i = rng.gen_range(0..n);
            sp += ps[i];
            spf += pfs[i];
        }
        bp.push(sp / n as f64);
        bf.push(if sp > 0.0 { spf / sp } else { fallback });
    }
    (std_dev(&bp), std_dev(&bf))
}

/// Trajectory-sampled noisy run. Each in-scope CNOT is executed faithfully
/// with probability `1 - p` and replaced by a random two-qubit Pauli with
/// probability `p`; per-trajectory expectation values are exact, so the only
/// statistical error is over noise realizations.
pub fn run_hp_trajectories(
    layout: &ProtocolLayout,
    u: &Circuit,
    noise: &NoiseSpec,
) -> Result<HpResult> {
    check_system_size(layout, u.n_qubits())?;
    if noise.scope == NoiseScope::WholeUnitary {
        return Err(Error::invalid(
            "whole-register noise has no trajectory form; use the exact channel run",
        ));
    }
    if noise.n_traj == 0 {
        return Err(Error::invalid("need at least one trajectory"));
    }
    let total = layout.total_qubits();
    let prep = build_epr_prep(total, &layout.prep_pairs())?;
    let fwd = u.relabel(total, &layout.ab_map())?;
    let bwd = u.conjugate().relabel(total, &layout.mirror_map())?;
    let meas_dd = epr_measurement_circuit(total, &layout.dd_pairs())?;
    let meas_rr = epr_measurement_circuit(total, &layout.rr_pairs())?;
    let dd_q: Vec<usize> = layout.dd_pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
    let ddrr_q: Vec<usize> = dd_q
        .iter()
        .copied()
        .chain(layout.rr_pairs().iter().flat_map(|&(a, b)| [a, b]))
        .collect();
    let p_aux = if noise.scope == NoiseScope::AllCnots {
        noise.p
    } else {
        0.0
    };

    let mut ps = Vec::with_capacity(noise.n_traj);
    let mut pfs = Vec::with_capacity(noise.n_traj);
    for k in 0..noise.n_traj {
        let mut rng = noise
            .rng
            .stream(noise.rng.stream_index.wrapping_add(k as u64))
            .rng();
        let mut st = PureState::zero(total);
        run_gates_noisy(&mut st, &prep, p_aux, &mut rng);
        run_gates_noisy(&mut st, &fwd, noise.p, &mut rng);
        run_gates_noisy(&mut st, &bwd, noise.p, &mut rng);
        run_gates_noisy(&mut st, &meas_dd, p_aux, &mut rng);
        run_gates_noisy(&mut st, &meas_rr, p_aux, &mut rng);
        ps.push(st.prob_all_zero(&dd_q));
        pfs.push(st.prob_all_zero(&ddrr_q));
    }

    let p_epr = mean(&ps);
    if p_epr < 1e-14 {
        return Err(Error::ProjectionImpossible { prob: p_epr });
    }
    let f_epr = mean(&pfs) / p_epr;
    let mut brng = noise
        .rng
        .stream(noise.rng.stream_index.wrapping_add(BOOTSTRAP_OFFSET))
        .rng();
    let (p_err, f_err) = bootstrap_errors(&ps, &pfs, &mut brng);
    Ok(HpResult {
        t: 0.0,
        p_epr,
        f_epr,
        p_err,
        f_err,
        n_traj: noise.n_traj,
        diagnostics: None,
    })
}
