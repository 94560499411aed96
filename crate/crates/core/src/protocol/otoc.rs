//! Monte-Carlo estimate of the Pauli-averaged out-of-time-ordered
//! correlator `Tr[O_A O_D(t) O_A O_D(t)] / d`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use std::collections::HashMap;

use crate::engine::{PauliString, RngStream};
use crate::{Error, Result};

use super::channel::CHANNEL_QUBIT_BOUND;
use super::layout::ProtocolLayout;
use super::run::{Evolution, PAULIS};

fn pauli_on_sites(n: usize, sites: &[usize], code: u32) -> PauliString {
    let mut s = PauliString::identity(n);
    for (j, &site) in sites.iter().enumerate() {
        s.0[site] = PAULIS[((code >> (2 * j)) & 3) as usize];
    }
    s
}

/// `P * m` for a Pauli string `P`: each row of `m` lands on a permuted row
/// with a phase.
fn pauli_times(p: &PauliString, m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let d = m.nrows();
    let mut out = DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
    for k in 0..d {
        let (phase, kp) = p.basis_action(k);
        for j in 0..d {
            out[(kp, j)] = phase * m[(k, j)];
        }
    }
    out
}

/// Sample `n_samples` uniform Pauli pairs on the A and D wires and average
/// the normalized OTOC of the evolution. Returns `(estimate, stderr)`.
pub fn averaged_otoc_mc(
    layout: &ProtocolLayout,
    u: &Evolution,
    n_samples: usize,
    rng: RngStream,
) -> Result<(f64, f64)> {
    let n = layout.n_sites();
    if u.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.n_qubits(),
        });
    }
    if n > CHANNEL_QUBIT_BOUND {
        return Err(Error::SizeBound {
            n_qubits: n,
            bound: CHANNEL_QUBIT_BOUND,
        });
    }
    if n_samples == 0 {
        return Err(Error::invalid("need at least one sample"));
    }
    let u_mat = match u {
        Evolution::Circuit(c) => c.dense()?.matrix().clone(),
        Evolution::Dense(d) => d.matrix().clone(),
    };
    let u_dag = u_mat.adjoint();
    let d = u_mat.nrows();

    let n_a_codes = 1u64 << (2 * layout.n_a());
    let n_d_codes = 1u64 << (2 * layout.n_d());
    let mut heisenberg: HashMap<u32, DMatrix<Complex64>> = HashMap::new();
    let mut values: HashMap<(u32, u32), f64> = HashMap::new();
    let mut rng = rng.rng();
    let mut samples = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let ca = rng.gen_range(0..n_a_codes) as u32;
        let cd = rng.gen_range(0..n_d_codes) as u32;
        let v = *values.entry((ca, cd)).or_insert_with(|| {
            let w = heisenberg.entry(cd).or_insert_with(|| {
                // O_D in the Heisenberg picture: U^dag O_D U
                &u_dag * pauli_times(&pauli_on_sites(n, layout.d_sites(), cd), &u_mat)
            });
            let x = pauli_times(&pauli_on_sites(n, layout.a_sites(), ca), w);
            let mut tr = Complex64::new(0.0, 0.0);
            for i in 0..d {
                for j in 0..d {
                    tr += x[(i, j)] * x[(j, i)];
                }
            }
            tr.re / d as f64
        });
        samples.push(v);
    }
    let mean = samples.iter().sum::<f64>() / n_samples as f64;
    let var = samples
        .iter()
        .map(|x| (x - mean) * (x - mean))
        .sum::<f64>()
        / (n_samples.max(2) - 1) as f64;
    Ok((mean, (var / n_samples as f64).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{build_trotter_ising, Circuit, IsingParams, TrotterSpec};
    use crate::protocol::{make_layout, run_hp_ideal, Placement};

    #[test]
    fn commuting_supports_give_exactly_one() {
        let layout = make_layout(4, 1, 2, Placement::IsingDefault).unwrap();
        let u = Evolution::Circuit(Circuit::new(4, "identity"));
        let (est, err) = averaged_otoc_mc(&layout, &u, 500, RngStream::new(17, 0)).unwrap();
        assert_eq!(est, 1.0);
        assert_eq!(err, 0.0);
    }

    #[test]
    fn estimate_tracks_the_projection_probability() {
        let layout = make_layout(4, 1, 2, Placement::IsingDefault).unwrap();
        let u = Evolution::Circuit(
            build_trotter_ising(
                &IsingParams::new(4, -1.05, 0.5).unwrap(),
                &TrotterSpec::new(2.0, 10).unwrap(),
            )
            .unwrap(),
        );
        let ideal = run_hp_ideal(&layout, &u).unwrap();
        let (est, err) = averaged_otoc_mc(&layout, &u, 1500, RngStream::new(3, 0)).unwrap();
        assert!((-1.0..=1.0).contains(&est));
        assert!(est >= -1e-12);
        let z = (est - ideal.p_epr).abs() / err;
        assert!(z < 4.0, "est {est} vs p_epr {}, z = {z}", ideal.p_epr);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let layout = make_layout(3, 1, 1, Placement::IsingDefault).unwrap();
        let u = Evolution::Circuit(
            build_trotter_ising(
                &IsingParams::new(3, 1.0, 0.0).unwrap(),
                &TrotterSpec::new(1.0, 5).unwrap(),
            )
            .unwrap(),
        );
        let a = averaged_otoc_mc(&layout, &u, 200, RngStream::new(8, 4)).unwrap();
        let b = averaged_otoc_mc(&layout, &u, 200, RngStream::new(8, 4)).unwrap();
        assert_eq!(a, b);
    }
}
