//! Concrete teleportation of a known input state through the protocol.

use num_complex::Complex64;

use crate::circuits::{build_epr_prep, epr_projector_overlap};
use crate::engine::PureState;
use crate::{Error, Result};

use super::layout::ProtocolLayout;
use super::run::Evolution;

/// Teleport `psi` (on the A wires, no reference register) through `u`;
/// returns the (D, D') projection probability and the fidelity
/// `<psi| rho_R' |psi>` of the decoded register.
pub fn run_state_teleportation(
    layout: &ProtocolLayout,
    u: &Evolution,
    psi: &PureState,
) -> Result<(f64, f64)> {
    let n = layout.n_sites();
    let n_a = layout.n_a();
    if u.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.n_qubits(),
        });
    }
    if psi.n_qubits() != n_a {
        return Err(Error::DimensionMismatch {
            expected: n_a,
            got: psi.n_qubits(),
        });
    }
    // registers [AB | A'B' | R']; no R register
    let total = 2 * n + n_a;
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|s| !layout.a_sites().contains(s))
        .map(|s| (s, n + s))
        .collect();
    pairs.extend(
        layout
            .a_sites()
            .iter()
            .enumerate()
            .map(|(k, &a)| (n + a, 2 * n + k)),
    );
    let mut st = PureState::zero(total);
    build_epr_prep(total, &pairs)?.run(&mut st)?;

    // place psi on the A wires (currently all |0>)
    let a_masks: Vec<usize> = layout
        .a_sites()
        .iter()
        .map(|&a| 1usize << (total - 1 - a))
        .collect();
    let a_mask: usize = a_masks.iter().fold(0, |acc, m| acc | m);
    let d_a = 1usize << n_a;
    let amps = st.amplitudes_mut();
    for idx in 0..amps.len() {
        if idx & a_mask != 0 || amps[idx] == Complex64::new(0.0, 0.0) {
            continue;
        }
        let base = amps[idx];
        for b in 1..d_a {
            let mut target = idx;
            for (j, &m) in a_masks.iter().enumerate() {
                if b & (1 << (n_a - 1 - j)) != 0 {
                    target |= m;
                }
            }
            amps[target] = psi.amplitudes()[b] * base;
        }
        amps[idx] = psi.amplitudes()[0] * base;
    }

    let fwd_map: Vec<usize> = (0..n).collect();
    let bwd_map: Vec<usize> = (n..2 * n).collect();
    u.apply_pure(&mut st, &fwd_map, false)?;
    u.apply_pure(&mut st, &bwd_map, true)?;

    let dd_pairs: Vec<(usize, usize)> = layout.d_sites().iter().map(|&d| (d, n + d)).collect();
    let (p, post) = epr_projector_overlap(&st, &dd_pairs)?;
    let post = post.ok_or(Error::ProjectionImpossible { prob: p })?;
    let rp: Vec<usize> = (2 * n..2 * n + n_a).collect();
    let rho = post.reduced_density(&rp)?;
    let mut f = Complex64::new(0.0, 0.0);
    for i in 0..d_a {
        for j in 0..d_a {
            f += psi.amplitudes()[i].conj() * rho.matrix()[(i, j)] * psi.amplitudes()[j];
        }
    }
    Ok((p, f.re))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::Circuit;
    use crate::engine::{sample_haar_state as random_state, sample_haar_unitary, RngStream};
    use crate::protocol::{make_layout, run_hp_ideal, Placement};

    #[test]
    fn identity_leaves_the_decoder_maximally_mixed() {
        let layout = make_layout(4, 1, 2, Placement::IsingDefault).unwrap();
        let u = Evolution::Circuit(Circuit::new(4, "identity"));
        for k in 0..5 {
            let psi = random_state(1, RngStream::new(21, k));
            let (p, f) = run_state_teleportation(&layout, &u, &psi).unwrap();
            assert!((p - 1.0).abs() < 1e-12);
            assert!((f - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn haar_input_average_ties_to_the_projection_probability() {
        let layout = make_layout(3, 1, 1, Placement::IsingDefault).unwrap();
        let u = Evolution::Dense(sample_haar_unitary(3, RngStream::new(5, 0)));
        let ideal = run_hp_ideal(&layout, &u).unwrap();
        let d_a = layout.d_a() as f64;
        let want = (ideal.p_epr + 1.0 / d_a) / (d_a + 1.0);
        let n = 400;
        let samples: Vec<f64> = (0..n)
            .map(|k| {
                let psi = random_state(1, RngStream::new(1234, k));
                let (p, f) = run_state_teleportation(&layout, &u, &psi).unwrap();
                p * f
            })
            .collect();
        let mean = samples.iter().sum::<f64>() / n as f64;
        let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64;
        let sigma = (var / n as f64).sqrt();
        let z = (mean - want).abs() / sigma;
        assert!(z < 4.0, "mean {mean} vs {want}, z = {z}");
    }

    #[test]
    fn wrong_input_size_rejected() {
        let layout = make_layout(4, 1, 2, Placement::IsingDefault).unwrap();
        let u = Evolution::Circuit(Circuit::new(4, "identity"));
        let psi = random_state(2, RngStream::new(0, 0));
        assert!(run_state_teleportation(&layout, &u, &psi).is_err());
    }
}
