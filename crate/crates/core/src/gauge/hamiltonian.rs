//! Electric and magnetic matrix elements on the ladder basis, the plaquette
//! action of the spin-1/2 truncation, and the closed-form spin Hamiltonian.

use std::collections::BTreeMap;

use super::basis::{dual_spin_inverse, LadderBasisState};
use super::lambda::lambda_coeff;
use crate::engine::{Pauli, PauliHamiltonian, PauliString};
use crate::{Error, Result};

/// Real symmetric sparse matrix as `(row, col, value)` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseHamiltonian {
    dim: usize,
    entries: BTreeMap<(usize, usize), f64>,
}

impl SparseHamiltonian {
    pub fn new(dim: usize) -> Self {
        SparseHamiltonian {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add(&mut self, row: usize, col: usize, value: f64) {
        assert!(row < self.dim && col < self.dim, "entry out of range");
        if value != 0.0 {
            *self.entries.entry((row, col)).or_insert(0.0) += value;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0.0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in self.entries() {
            m[(r, c)] += v;
        }
        m
    }

    /// Largest deviation from symmetry.
    pub fn symmetry_error(&self) -> f64 {
        self.entries()
            .map(|(r, c, v)| (v - self.get(c, r)).abs())
            .fold(0.0, f64::max)
    }

    /// One `row col value` triple per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (r, c, v) in self.entries() {
            s.push_str(&format!("{r} {c} {v}\n"));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let mut dim = 0;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [r, c, v] = toks.as_slice() else {
                return Err(Error::invalid(format!("unparseable entry line '{line}'")));
            };
            let r: usize = r
                .parse()
                .map_err(|e| Error::invalid(format!("bad row: {e}")))?;
            let c: usize = c
                .parse()
                .map_err(|e| Error::invalid(format!("bad col: {e}")))?;
            let v: f64 = v
                .parse()
                .map_err(|e| Error::invalid(format!("bad value: {e}")))?;
            dim = dim.max(r + 1).max(c + 1);
            entries.insert((r, c), v);
        }
        Ok(SparseHamiltonian { dim, entries })
    }
}

/// Diagonal electric Hamiltonian: half the Casimir of every link spin.
pub fn electric_matrix(basis: &[LadderBasisState]) -> SparseHamiltonian {
    let mut m = SparseHamiltonian::new(basis.len());
    for (idx, st) in basis.iter().enumerate() {
        let mut e = 0.0;
        for j in st.j.iter().chain(&st.j_prime).chain(&st.j_dprime) {
            e += j.casimir() / 2.0;
        }
        m.add(idx, idx, e);
    }
    m
}

/// All plaquette transitions from `state` at plaquette `i`: for each of the
/// 16 sign patterns on `(j_i, j'_i, j''_i, j''_{i+1})`, the shifted state and
/// the product of the four vertex coefficients.
pub fn plaquette_transitions(
    state: &LadderBasisState,
    i: usize,
) -> Vec<(LadderBasisState, f64)> {
    let ii = i as isize;
    let mut out = Vec::new();
    for s_j in [1i8, -1] {
        for s_jp in [1i8, -1] {
            for s_d0 in [1i8, -1] {
                for s_d1 in [1i8, -1] {
                    let amp = lambda_coeff(
                        s_j,
                        s_d1,
                        state.j_at(ii),
                        state.j_dprime[i + 1],
                        state.j_at(ii + 1),
                    ) * lambda_coeff(
                        s_d1,
                        s_jp,
                        state.j_dprime[i + 1],
                        state.jp_at(ii),
                        state.jp_at(ii + 1),
                    ) * lambda_coeff(
                        s_jp,
                        s_d0,
                        state.jp_at(ii),
                        state.j_dprime[i],
                        state.jp_at(ii - 1),
                    ) * lambda_coeff(
                        s_d0,
                        s_j,
                        state.j_dprime[i],
                        state.j_at(ii),
                        state.j_at(ii - 1),
                    );
                    if amp == 0.0 {
                        continue;
                    }
                    let mut target = state.clone();
                    target.j[i] = target.j[i].shifted(s_j);
                    target.j_prime[i] = target.j_prime[i].shifted(s_jp);
                    target.j_dprime[i] = target.j_dprime[i].shifted(s_d0);
                    target.j_dprime[i + 1] = target.j_dprime[i + 1].shifted(s_d1);
                    out.push((target, amp));
                }
            }
        }
    }
    out
}

/// Magnetic Hamiltonian `-K sum_i tr U_square(i)` on the given basis.
/// Transitions leaving the basis (spin-cutoff violations) are dropped.
pub fn magnetic_matrix(basis: &[LadderBasisState], k: f64) -> SparseHamiltonian {
    let index: BTreeMap<&LadderBasisState, usize> =
        basis.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = SparseHamiltonian::new(basis.len());
    if k == 0.0 {
        return m;
    }
    let n = basis.first().map(|s| s.n_sites()).unwrap_or(0);
    for (col, st) in basis.iter().enumerate() {
        for i in 0..n {
            for (target, amp) in plaquette_transitions(st, i) {
                if let Some(&row) = index.get(&target) {
                    m.add(row, col, -k * amp);
                }
            }
        }
    }
    m
}

/// Action of a single plaquette operator on a dual-spin string: flips bit
/// `i`, with the amplitude given by the product of vertex coefficients.
pub fn plaquette_action(i: usize, bits: &[bool]) -> Result<(f64, Vec<bool>)> {
    if i >= bits.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            n_qubits: bits.len(),
        });
    }
    let state = dual_spin_inverse(bits);
    let mut flipped = bits.to_vec();
    flipped[i] = !flipped[i];
    let target = dual_spin_inverse(&flipped);
    let amp = plaquette_transitions(&state, i)
        .into_iter()
        .filter(|(t, _)| *t == target)
        .map(|(_, a)| a)
        .sum();
    Ok((amp, flipped))
}

/// Closed-form spin Hamiltonian of the spin-1/2 truncation on `n` dual
/// spins:
/// `sum_i (3/16)(3 - 2 Z_i - Z_{i-1} Z_i) - K sum_i (1/16) X_i (1 + 3 Z_{i-1})(1 + 3 Z_{i+1})`
/// with the boundary spins `Z_{-1} = Z_N = 1` substituted as constants.
pub fn ym_ising_closed_form(n_sites: usize, k: f64) -> Result<PauliHamiltonian> {
    if n_sites == 0 {
        return Err(Error::invalid("need at least 1 dual spin"));
    }
    let n = n_sites;
    let mut h = PauliHamiltonian::new(n);
    let z = |i: usize| PauliString::single(n, i, Pauli::Z);
    for i in 0..=n {
        h.add(9.0 / 16.0, PauliString::identity(n));
        if i < n {
            h.add(-3.0 / 8.0, z(i));
        } else {
            h.add(-3.0 / 8.0, PauliString::identity(n));
        }
        if i == 0 {
            h.add(-3.0 / 16.0, z(0));
        } else if i == n {
            h.add(-3.0 / 16.0, z(n - 1));
        } else {
            let mut v = vec![Pauli::I; n];
            v[i - 1] = Pauli::Z;
            v[i] = Pauli::Z;
            h.add(-3.0 / 16.0, PauliString(v));
        }
    }
    for i in 0..n {
        for (wl, left) in [(1.0, false), (3.0, true)] {
            for (wr, right) in [(1.0, false), (3.0, true)] {
                let mut v = vec![Pauli::I; n];
                v[i] = Pauli::X;
                if left && i > 0 {
                    v[i - 1] = Pauli::Z;
                }
                if right && i + 1 < n {
                    v[i + 1] = Pauli::Z;
                }
                h.add(-k * wl * wr / 16.0, PauliString(v));
            }
        }
    }
    Ok(h)
}
