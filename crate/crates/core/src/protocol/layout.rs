//! Qubit bookkeeping for the teleportation experiment.
//!
//! The global register order is `[R | AB | A'B' | R']`, with `A'B'` the
//! site-wise mirror of `AB`; the input wires A and output wires D are index
//! lists into the N-site system and may overlap as sets.

use crate::{Error, Result};

/// Where the input (A) and output (D) wires sit in the system register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Placement {
    /// A = first `N_A` sites, D = last `N_D` sites.
    IsingDefault,
    /// Interior placement away from both open boundaries:
    /// A starts at site 1, D ends at site N-2.
    YmDefault,
    /// Explicit site lists, echoed back verbatim.
    Explicit {
        a_sites: Vec<usize>,
        d_sites: Vec<usize>,
    },
}

/// Register maps for one experiment geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProtocolLayout {
    n_sites: usize,
    n_a: usize,
    n_d: usize,
    a_sites: Vec<usize>,
    d_sites: Vec<usize>,
    placement_label: String,
}

impl ProtocolLayout {
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_d(&self) -> usize {
        self.n_d
    }

    pub fn a_sites(&self) -> &[usize] {
        &self.a_sites
    }

    pub fn d_sites(&self) -> &[usize] {
        &self.d_sites
    }

    pub fn placement_label(&self) -> &str {
        &self.placement_label
    }

    /// `2N + 2N_A`: R, AB, A'B', R'.
    pub fn total_qubits(&self) -> usize {
        2 * self.n_sites + 2 * self.n_a
    }

    pub fn d_a(&self) -> usize {
        1 << self.n_a
    }

    pub fn d_b(&self) -> usize {
        1 << (self.n_sites - self.n_a)
    }

    pub fn d_c(&self) -> usize {
        1 << (self.n_sites - self.n_d)
    }

    pub fn d_d(&self) -> usize {
        1 << self.n_d
    }

    /// Global index of the k-th R qubit.
    pub fn r_qubit(&self, k: usize) -> usize {
        k
    }

    /// Global index of system site `s` in the AB register.
    pub fn ab_qubit(&self, s: usize) -> usize {
        self.n_a + s
    }

    /// Global index of the mirror of site `s` in the A'B' register.
    pub fn mirror_qubit(&self, s: usize) -> usize {
        self.n_a + self.n_sites + s
    }

    /// Global index of the k-th R' qubit.
    pub fn rp_qubit(&self, k: usize) -> usize {
        self.n_a + 2 * self.n_sites + k
    }

    /// Relabel map sending system site `s` to its AB register qubit.
    pub fn ab_map(&self) -> Vec<usize> {
        (0..self.n_sites).map(|s| self.ab_qubit(s)).collect()
    }

    /// Relabel map sending system site `s` to its A'B' mirror qubit.
    pub fn mirror_map(&self) -> Vec<usize> {
        (0..self.n_sites).map(|s| self.mirror_qubit(s)).collect()
    }

    pub fn ab_qubits(&self) -> Vec<usize> {
        self.ab_map()
    }

    pub fn mirror_qubits(&self) -> Vec<usize> {
        self.mirror_map()
    }

    /// EPR pairs of the initial state: R-A, B-B', A'-R'.
    pub fn prep_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (k, &a) in self.a_sites.iter().enumerate() {
            pairs.push((self.r_qubit(k), self.ab_qubit(a)));
        }
        for s in 0..self.n_sites {
            if !self.a_sites.contains(&s) {
                pairs.push((self.ab_qubit(s), self.mirror_qubit(s)));
            }
        }
        for (k, &a) in self.a_sites.iter().enumerate() {
            pairs.push((self.mirror_qubit(a), self.rp_qubit(k)));
        }
        pairs
    }

    /// The (D, D') measurement pairs.
    pub fn dd_pairs(&self) -> Vec<(usize, usize)> {
        self.d_sites
            .iter()
            .map(|&d| (self.ab_qubit(d), self.mirror_qubit(d)))
            .collect()
    }

    /// The (R, R') decoding pairs.
    pub fn rr_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n_a)
            .map(|k| (self.r_qubit(k), self.rp_qubit(k)))
            .collect()
    }
}

fn check_sites(label: &str, sites: &[usize], n: usize) -> Result<()> {
    if sites.is_empty() {
        return Err(Error::invalid(format!("{label} site list is empty")));
    }
    let mut seen = vec![false; n];
    for &s in sites {
        if s >= n {
            return Err(Error::IndexOutOfRange {
                index: s,
                n_qubits: n,
            });
        }
        if seen[s] {
            return Err(Error::invalid(format!("{label} site {s} repeated")));
        }
        seen[s] = true;
    }
    Ok(())
}

/// Build a layout for `n` system sites with `n_a` input and `n_d` output
/// wires placed per `placement`.
pub fn make_layout(
    n: usize,
    n_a: usize,
    n_d: usize,
    placement: Placement,
) -> Result<ProtocolLayout> {
    if n_a == 0 || n_d == 0 || n_a > n || n_d > n {
        return Err(Error::invalid(format!(
            "need 1 <= N_A, N_D <= N; got N={n}, N_A={n_a}, N_D={n_d}"
        )));
    }
    let (a_sites, d_sites, placement_label) = match placement {
        Placement::IsingDefault => (
            (0..n_a).collect::<Vec<_>>(),
            (n - n_d..n).collect::<Vec<_>>(),
            "ising_default".to_string(),
        ),
        Placement::YmDefault => {
            if 1 + n_a > n || n < n_d + 1 {
                return Err(Error::invalid(format!(
                    "interior placement needs N_A + 1 <= N and N_D + 1 <= N; got N={n}"
                )));
            }
            (
                (1..1 + n_a).collect::<Vec<_>>(),
                (n - 1 - n_d..n - 1).collect::<Vec<_>>(),
                "ym_default".to_string(),
            )
        }
        Placement::Explicit { a_sites, d_sites } => {
            if a_sites.len() != n_a || d_sites.len() != n_d {
                return Err(Error::DimensionMismatch {
                    expected: n_a,
                    got: a_sites.len(),
                });
            }
            let label = format!(
                "a{}_d{}",
                a_sites
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("-"),
                d_sites
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("-")
            );
            (a_sites, d_sites, label)
        }
    };
    check_sites("input", &a_sites, n)?;
    check_sites("output", &d_sites, n)?;
    Ok(ProtocolLayout {
        n_sites: n,
        n_a,
        n_d,
        a_sites,
        d_sites,
        placement_label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ising_default_dimensions() {
        let l = make_layout(8, 1, 2, Placement::IsingDefault).unwrap();
        assert_eq!(
            (l.d_a(), l.d_b(), l.d_c(), l.d_d()),
            (2, 128, 64, 4)
        );
        assert_eq!(l.a_sites(), &[0]);
        assert_eq!(l.d_sites(), &[6, 7]);
        assert_eq!(l.total_qubits(), 18);
        assert_eq!(l.prep_pairs().len(), 9);
        assert_eq!(l.dd_pairs(), vec![(7, 15), (8, 16)]);
        assert_eq!(l.rr_pairs(), vec![(0, 17)]);
    }

    #[test]
    fn ym_default_is_interior() {
        let l = make_layout(8, 1, 2, Placement::YmDefault).unwrap();
        assert_eq!(l.a_sites(), &[1]);
        assert_eq!(l.d_sites(), &[5, 6]);
    }

    #[test]
    fn explicit_lists_echo_back() {
        let l = make_layout(
            6,
            2,
            2,
            Placement::Explicit {
                a_sites: vec![2, 4],
                d_sites: vec![0, 4],
            },
        )
        .unwrap();
        assert_eq!(l.a_sites(), &[2, 4]);
        assert_eq!(l.d_sites(), &[0, 4]);
        assert_eq!(l.placement_label(), "a2-4_d0-4");
        // input and output wires may overlap as sets
        assert_eq!(l.prep_pairs().len(), 2 + 4 + 2);
    }

    #[test]
    fn invalid_placements_rejected() {
        assert!(make_layout(4, 0, 1, Placement::IsingDefault).is_err());
        assert!(make_layout(4, 1, 5, Placement::IsingDefault).is_err());
        assert!(make_layout(
            4,
            1,
            1,
            Placement::Explicit {
                a_sites: vec![4],
                d_sites: vec![0],
            }
        )
        .is_err());
        assert!(make_layout(
            4,
            2,
            1,
            Placement::Explicit {
                a_sites: vec![1, 1],
                d_sites: vec![0],
            }
        )
        .is_err());
    }
}
