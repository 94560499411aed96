//! Exact density-operator evolution of the noisy experiment.

use crate::circuits::{build_epr_prep, Circuit};
use crate::engine::{Gate, MixedState, PureState};
use crate::{Error, Result};

use super::layout::ProtocolLayout;
use super::run::{epr_measurement_circuit, Evolution};
use super::types::{Diagnostics, HpResult, NoiseScope, NoiseSpec};

/// Density matrices above this register size are impractical on one core.
pub const CHANNEL_QUBIT_BOUND: usize = 12;

/// Apply `circuit`, turning each CNOT into the averaged replacement channel
/// (CNOT with probability `1 - p`, uniform two-qubit Pauli otherwise, which
/// averages to a CNOT followed by two-qubit depolarization).
fn run_circuit_channel(rho: &mut MixedState, circuit: &Circuit, p: f64) -> Result<()> {
    for &g in circuit.gates() {
        match g {
            Gate::Cnot { control, target } if p > 0.0 => rho.noisy_cnot(control, target, p)?,
            _ => rho.apply_gate(g)?,
        }
    }
    Ok(())
}

/// Probability that every listed qubit reads 0 in the Z basis.
fn prob_all_zero(rho: &MixedState, qubits: &[usize]) -> f64 {
    let n = rho.n_qubits();
    let mask: usize = qubits.iter().map(|&q| 1usize << (n - 1 - q)).fold(0, |a, b| a | b);
    (0..rho.dim())
        .filter(|i| i & mask == 0)
        .map(|i| rho.matrix()[(i, i)].re)
        .sum()
}

fn apply_evolution_channel(
    rho: &mut MixedState,
    u: &Evolution,
    map: &[usize],
    conjugated: bool,
    noise: &NoiseSpec,
) -> Result<()> {
    match noise.scope {
        NoiseScope::WholeUnitary => {
            let m = match u {
                Evolution::Circuit(c) => {
                    let d = c.dense()?;
                    if conjugated {
                        d.conjugate().matrix().clone()
                    } else {
                        d.matrix().clone()
                    }
                }
                Evolution::Dense(d) => {
                    if conjugated {
                        d.conjugate().matrix().clone()
                    } else {
                        d.matrix().clone()
                    }
                }
            };
            rho.apply_dense(&m, map)?;
            rho.depolarize(map, noise.p)
        }
        NoiseScope::AllCnots | NoiseScope::EvolutionOnly => {
            let c = u.as_circuit()?;
            let c = if conjugated { c.conjugate() } else { c.clone() };
            run_circuit_channel(rho, &c.relabel(rho.n_qubits(), map)?, noise.p)
        }
    }
}

/// Renyi-2 diagnostics from the single-sided state on `[R | AB | B']` with
/// the same noise applied to its one copy of the evolution.
fn diagnostics(layout: &ProtocolLayout, u: &Evolution, noise: &NoiseSpec) -> Result<Diagnostics> {
    let n = layout.n_sites();
    let n_a = layout.n_a();
    let total = 2 * n;
    let ab = |s: usize| n_a + s;
    // B' register: one qubit per non-input site, in site order
    let mut bp = vec![usize::MAX; n];
    let mut next = n_a + n;
    for s in 0..n {
        if !layout.a_sites().contains(&s) {
            bp[s] = next;
            next += 1;
        }
    }
    let mut pairs: Vec<(usize, usize)> = layout
        .a_sites()
        .iter()
        .enumerate()
        .map(|(k, &a)| (k, ab(a)))
        .collect();
    pairs.extend((0..n).filter(|&s| bp[s] != usize::MAX).map(|s| (ab(s), bp[s])));
    let prep = build_epr_prep(total, &pairs)?;
    let mut rho = MixedState::from_pure(&PureState::zero(total));
    let prep_p = if noise.scope == NoiseScope::AllCnots {
        noise.p
    } else {
        0.0
    };
    run_circuit_channel(&mut rho, &prep, prep_p)?;
    let ab_map: Vec<usize> = (0..n).map(ab).collect();
    apply_evolution_channel(&mut rho, u, &ab_map, false, noise)?;

    let r: Vec<usize> = (0..n_a).collect();
    let mut bpd: Vec<usize> = (0..n).filter(|&s| bp[s] != usize::MAX).map(|s| bp[s]).collect();
    bpd.extend(layout.d_sites().iter().map(|&d| ab(d)));
    let rbpd: Vec<usize> = r.iter().copied().chain(bpd.iter().copied()).collect();

    let s2_r = rho.partial_trace(&r)?.renyi2_entropy();
    let s2_bpd = rho.partial_trace(&bpd)?.renyi2_entropy();
    let s2_rbpd = rho.partial_trace(&rbpd)?.renyi2_entropy();
    let i2 = s2_r + s2_bpd - s2_rbpd;
    Ok(Diagnostics {
        s2_r,
        s2_bpd,
        s2_rbpd,
        i2,
        delta: 0.0,
    })
}

/// Exact noisy run over the full density operator, with Renyi-2 diagnostics.
pub fn run_hp_channel_exact(
    layout: &ProtocolLayout,
    u: &Evolution,
    noise: &NoiseSpec,
) -> Result<HpResult> {
    if u.n_qubits() != layout.n_sites() {
        return Err(Error::DimensionMismatch {
            expected: layout.n_sites(),
            got: u.n_qubits(),
        });
    }
    let total = layout.total_qubits();
    if total > CHANNEL_QUBIT_BOUND {
        return Err(Error::SizeBound {
            n_qubits: total,
            bound: CHANNEL_QUBIT_BOUND,
        });
    }
    let prep_p = if noise.scope == NoiseScope::AllCnots {
        noise.p
    } else {
        0.0
    };
    let mut rho = MixedState::from_pure(&PureState::zero(total));
    run_circuit_channel(&mut rho, &build_epr_prep(total, &layout.prep_pairs())?, prep_p)?;
    apply_evolution_channel(&mut rho, u, &layout.ab_map(), false, noise)?;
    apply_evolution_channel(&mut rho, u, &layout.mirror_map(), true, noise)?;
    run_circuit_channel(
        &mut rho,
        &epr_measurement_circuit(total, &layout.dd_pairs())?,
        prep_p,
    )?;
    run_circuit_channel(
        &mut rho,
        &epr_measurement_circuit(total, &layout.rr_pairs())?,
        prep_p,
    )?;
    let dd_q: Vec<usize> = layout.dd_pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
    let ddrr_q: Vec<usize> = dd_q
        .iter()
        .copied()
        .chain(layout.rr_pairs().iter().flat_map(|&(a, b)| [a, b]))
        .collect();
    let p_epr = prob_all_zero(&rho, &dd_q);
    if p_epr < 1e-14 {
        return Err(Error::ProjectionImpossible { prob: p_epr });
    }
    let f_epr = prob_all_zero(&rho, &ddrr_q) / p_epr;

    let mut diag = diagnostics(layout, u, noise)?;
    diag.delta = diag.i2.exp2() * p_epr;
    Ok(HpResult {
        t: 0.0,
        p_epr,
        f_epr,
        p_err: 0.0,
        f_err: 0.0,
        n_traj: 0,
        diagnostics: Some(diag),
    })
}
