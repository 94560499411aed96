//! Gauge-invariant basis states of the two-leg ladder and the dual-spin map
//! of the spin-1/2 truncation.

use super::halfint::{triangle_ok, HalfInt};
use crate::{Error, Result};

/// Link spins of a physical ladder state: `j` on the lower horizontal links,
/// `j_prime` on the upper ones (both length N), `j_dprime` on the vertical
/// links (length N+1). The boundary spins `j_{-1} = j'_{-1} = j_N = j'_N = 0`
/// are implicit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LadderBasisState {
    pub j: Vec<HalfInt>,
    pub j_prime: Vec<HalfInt>,
    pub j_dprime: Vec<HalfInt>,
}

impl LadderBasisState {
    pub fn n_sites(&self) -> usize {
        self.j.len()
    }

    /// Lower horizontal spin with the open-boundary convention for
    /// out-of-range indices.
    pub fn j_at(&self, i: isize) -> HalfInt {
        if i < 0 || i as usize >= self.j.len() {
            HalfInt::ZERO
        } else {
            self.j[i as usize]
        }
    }

    pub fn jp_at(&self, i: isize) -> HalfInt {
        if i < 0 || i as usize >= self.j_prime.len() {
            HalfInt::ZERO
        } else {
            self.j_prime[i as usize]
        }
    }

    /// Both vertex triangle conditions at every column.
    pub fn is_physical(&self) -> bool {
        let n = self.n_sites() as isize;
        if self.j_prime.len() != self.j.len() || self.j_dprime.len() != self.j.len() + 1 {
            return false;
        }
        (0..=n).all(|i| {
            let jd = self.j_dprime[i as usize];
            triangle_ok(self.j_at(i - 1), jd, self.j_at(i))
                && triangle_ok(self.jp_at(i - 1), self.jp_at(i), jd)
        })
    }
}

/// All physical states with every spin at most `j_max`, sorted
/// lexicographically by the `(j, j_prime, j_dprime)` tuple.
pub fn enumerate_physical_basis(n_sites: usize, j_max: HalfInt) -> Result<Vec<LadderBasisState>> {
    if n_sites == 0 {
        return Err(Error::invalid("ladder needs at least one plaquette"));
    }
    if j_max.is_negative() {
        return Err(Error::invalid("negative spin cutoff"));
    }
    let values: Vec<HalfInt> = (0..=j_max.twice()).map(HalfInt::from_twice).collect();
    let mut out = Vec::new();
    let mut state = LadderBasisState {
        j: Vec::new(),
        j_prime: Vec::new(),
        j_dprime: Vec::new(),
    };
    fn extend(
        col: usize,
        n: usize,
        values: &[HalfInt],
        state: &mut LadderBasisState,
        out: &mut Vec<LadderBasisState>,
    ) {
        let prev_j = if col == 0 {
            HalfInt::ZERO
        } else {
            state.j[col - 1]
        };
        let prev_jp = if col == 0 {
            HalfInt::ZERO
        } else {
            state.j_prime[col - 1]
        };
        let boundary = [HalfInt::ZERO];
        let (j_opts, jp_opts): (&[HalfInt], &[HalfInt]) = if col == n {
            (&boundary, &boundary)
        } else {
            (values, values)
        };
        for &ji in j_opts {
            for &jpi in jp_opts {
                for &jd in values {
                    if !triangle_ok(prev_j, jd, ji) || !triangle_ok(prev_jp, jpi, jd) {
                        continue;
                    }
                    if col < n {
                        state.j.push(ji);
                        state.j_prime.push(jpi);
                    }
                    state.j_dprime.push(jd);
                    if col == n {
                        out.push(state.clone());
                    } else {
                        extend(col + 1, n, values, state, out);
                    }
                    if col < n {
                        state.j.pop();
                        state.j_prime.pop();
                    }
                    state.j_dprime.pop();
                }
            }
        }
    }
    extend(0, n_sites, &values, &mut state, &mut out);
    out.sort();
    Ok(out)
}

/// Dual-spin string of a spin-1/2 state: bit `i` is true (spin down) when
/// `j_i = 1/2`. Errors when the state is not a valid spin-1/2 loop state.
pub fn dual_spin_map(state: &LadderBasisState) -> Result<Vec<bool>> {
    let n = state.n_sites();
    let mut bits = Vec::with_capacity(n);
    for i in 0..n {
        if state.j[i].twice() > 1 || state.j_prime[i] != state.j[i] {
            return Err(Error::invalid(format!(
                "site {i} is not a spin-1/2 loop configuration"
            )));
        }
        bits.push(state.j[i] == HalfInt::HALF);
    }
    for i in 0..=n {
        let left = i > 0 && bits[i - 1];
        let right = i < n && bits[i];
        let want = if left != right {
            HalfInt::HALF
        } else {
            HalfInt::ZERO
        };
        if state.j_dprime[i] != want {
            return Err(Error::invalid(format!(
                "vertical spin {i} inconsistent with a loop configuration"
            )));
        }
    }
    Ok(bits)
}

/// Inverse of `dual_spin_map`.
pub fn dual_spin_inverse(bits: &[bool]) -> LadderBasisState {
    let n = bits.len();
    let j: Vec<HalfInt> = bits
        .iter()
        .map(|&b| if b { HalfInt::HALF } else { HalfInt::ZERO })
        .collect();
    let j_dprime: Vec<HalfInt> = (0..=n)
        .map(|i| {
            let left = i > 0 && bits[i - 1];
            let right = i < n && bits[i];
            if left != right {
                HalfInt::HALF
            } else {
                HalfInt::ZERO
            }
        })
        .collect();
    LadderBasisState {
        j_prime: j.clone(),
        j,
        j_dprime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_ladders() {
        assert_eq!(
            enumerate_physical_basis(1, HalfInt::HALF).unwrap().len(),
            2
        );
        assert_eq!(
            enumerate_physical_basis(2, HalfInt::HALF).unwrap().len(),
            4
        );
        assert_eq!(enumerate_physical_basis(3, HalfInt::ZERO).unwrap().len(), 1);
        for n in 1..=6 {
            assert_eq!(
                enumerate_physical_basis(n, HalfInt::HALF).unwrap().len(),
                1 << n,
                "n={n}"
            );
        }
    }

    #[test]
    fn all_enumerated_states_are_physical() {
        for st in enumerate_physical_basis(3, HalfInt::ONE).unwrap() {
            assert!(st.is_physical());
        }
    }

    #[test]
    fn vacuum_maps_to_all_up() {
        let basis = enumerate_physical_basis(3, HalfInt::HALF).unwrap();
        let vacuum = &basis[0]; // lexicographically first = all spins 0
        assert!(vacuum.j.iter().all(|j| *j == HalfInt::ZERO));
        assert_eq!(dual_spin_map(vacuum).unwrap(), vec![false; 3]);
    }

    #[test]
    fn single_plaquette_loop_maps_to_down() {
        let basis = enumerate_physical_basis(1, HalfInt::HALF).unwrap();
        let loop_state = &basis[1];
        assert_eq!(loop_state.j[0], HalfInt::HALF);
        assert_eq!(dual_spin_map(loop_state).unwrap(), vec![true]);
    }

    #[test]
    fn dual_map_round_trips_exhaustively() {
        for n in 1..=6usize {
            let basis = enumerate_physical_basis(n, HalfInt::HALF).unwrap();
            for (idx, st) in basis.iter().enumerate() {
                let bits = dual_spin_map(st).unwrap();
                assert_eq!(&dual_spin_inverse(&bits), st);
                // lexicographic basis order equals dual bit-string order
                let as_int: usize = bits
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (b as usize) << (n - 1 - i))
                    .sum();
                assert_eq!(as_int, idx);
            }
        }
    }

    #[test]
    fn dual_map_rejects_higher_spin() {
        let basis = enumerate_physical_basis(1, HalfInt::ONE).unwrap();
        let heavy = basis.iter().find(|s| s.j[0] == HalfInt::ONE).unwrap();
        assert!(dual_spin_map(heavy).is_err());
    }
}
