//! Mutual-information scrambling diagnostics of the ideal evolution.

use crate::circuits::build_epr_prep;
use crate::engine::PureState;
use crate::{Error, Result};

use super::layout::ProtocolLayout;
use super::run::Evolution;

/// Von Neumann and Renyi-2 mutual informations, in bits, of the state
/// representation of the evolution on `[R | AB | B']`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScramblingEntropies {
    /// Renyi-2 mutual information between R and B'D.
    pub i2_r_bpd: f64,
    pub i_r_bpd: f64,
    pub i_r_c: f64,
    pub i_r_d: f64,
    /// Tripartite information I(R,C) + I(R,D) - I(R,CD).
    pub i3_r_c_d: f64,
}

fn complement(total: usize, subset: &[usize]) -> Vec<usize> {
    (0..total).filter(|q| !subset.contains(q)).collect()
}

/// Entropy of `subset` in a pure state, evaluated on the smaller side of the
/// bipartition.
fn entropy(st: &PureState, subset: &[usize]) -> Result<f64> {
    let comp = complement(st.n_qubits(), subset);
    let side = if comp.len() < subset.len() { &comp } else { subset };
    st.reduced_density(side)?.von_neumann_entropy()
}

fn renyi2(st: &PureState, subset: &[usize]) -> Result<f64> {
    let comp = complement(st.n_qubits(), subset);
    let side = if comp.len() < subset.len() { &comp } else { subset };
    Ok(-st.reduced_purity(side)?.log2())
}

/// Mutual informations of the ideal evolved state: the input reference R,
/// the undetected output C, the detected output D, and the purifier B'.
pub fn scrambling_entropies(
    layout: &ProtocolLayout,
    u: &Evolution,
) -> Result<ScramblingEntropies> {
    let n = layout.n_sites();
    let n_a = layout.n_a();
    if u.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.n_qubits(),
        });
    }
    let total = 2 * n;
    let ab = |s: usize| n_a + s;
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
    let mut st = PureState::zero(total);
    build_epr_prep(total, &pairs)?.run(&mut st)?;
    let ab_map: Vec<usize> = (0..n).map(ab).collect();
    u.apply_pure(&mut st, &ab_map, false)?;

    let r: Vec<usize> = (0..n_a).collect();
    let d_wires: Vec<usize> = layout.d_sites().iter().map(|&s| ab(s)).collect();
    let c_wires: Vec<usize> = (0..n)
        .filter(|s| !layout.d_sites().contains(s))
        .map(ab)
        .collect();
    let bp_wires: Vec<usize> = (0..n).filter(|&s| bp[s] != usize::MAX).map(|s| bp[s]).collect();
    let bpd: Vec<usize> = bp_wires.iter().copied().chain(d_wires.iter().copied()).collect();
    let rd: Vec<usize> = r.iter().copied().chain(d_wires.iter().copied()).collect();
    let ab_wires = ab_map;

    let s_r = entropy(&st, &r)?;
    let s_c = entropy(&st, &c_wires)?;
    let s_d = entropy(&st, &d_wires)?;
    let s_bpd = entropy(&st, &bpd)?;
    let s_rd = entropy(&st, &rd)?;
    let s_ab = entropy(&st, &ab_wires)?;
    let s_bp = entropy(&st, &bp_wires)?;

    // purity of the global state makes S(R union C) = S(B'D) etc.
    let i_r_c = s_r + s_c - s_bpd;
    let i_r_bpd = s_r + s_bpd - s_c;
    let i_r_d = s_r + s_d - s_rd;
    let i_r_cd = s_r + s_ab - s_bp;
    let i3_r_c_d = i_r_c + i_r_d - i_r_cd;

    let rbpd: Vec<usize> = r.iter().copied().chain(bpd.iter().copied()).collect();
    let i2_r_bpd = renyi2(&st, &r)? + renyi2(&st, &bpd)? - renyi2(&st, &rbpd)?;

    Ok(ScramblingEntropies {
        i2_r_bpd,
        i_r_bpd,
        i_r_c,
        i_r_d,
        i3_r_c_d,
    })
}
