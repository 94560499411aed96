//! Pauli strings and real-coefficient Pauli-sum Hamiltonians.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_char(c: char) -> Result<Pauli> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            _ => Err(Error::invalid(format!("unknown Pauli letter '{c}'"))),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// A tensor product of single-qubit Paulis, index 0 first (most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliString(pub Vec<Pauli>);

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString(vec![Pauli::I; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Single-site string `P` at `site` on `n` qubits.
    pub fn single(n: usize, site: usize, p: Pauli) -> Self {
        let mut v = vec![Pauli::I; n];
        v[site] = p;
        PauliString(v)
    }

    /// Action on a computational basis state: `P |b> = phase * |b ^ flip>`.
    pub fn basis_action(&self, b: usize) -> (Complex64, usize) {
        let n = self.len();
        let mut phase = Complex64::new(1.0, 0.0);
        let mut flip = 0usize;
        for (q, p) in self.0.iter().enumerate() {
            let mask = 1usize << (n - 1 - q);
            let set = b & mask != 0;
            match p {
                Pauli::I => {}
                Pauli::X => flip ^= mask,
                Pauli::Y => {
                    flip ^= mask;
                    phase *= if set {
                        Complex64::new(0.0, -1.0)
                    } else {
                        Complex64::new(0.0, 1.0)
                    };
                }
                Pauli::Z => {
                    if set {
                        phase = -phase;
                    }
                }
            }
        }
        (phase, b ^ flip)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.0 {
            write!(f, "{}", p.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Pauli::from_char).collect::<Result<Vec<_>>>().map(PauliString)
    }
}

/// Real linear combination of Pauli strings on a fixed qubit count.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliHamiltonian {
    pub n_qubits: usize,
    pub terms: Vec<(f64, PauliString)>,
}

impl PauliHamiltonian {
    pub fn new(n_qubits: usize) -> Self {
        PauliHamiltonian {
            n_qubits,
            terms: Vec::new(),
        }
    }

    /// Add `coeff * string`, merging with an existing identical string.
    pub fn add(&mut self, coeff: f64, string: PauliString) {
        assert_eq!(string.len(), self.n_qubits, "pauli string length mismatch");
        if coeff == 0.0 {
            return;
        }
        if let Some((c, _)) = self.terms.iter_mut().find(|(_, s)| *s == string) {
            *c += coeff;
        } else {
            self.terms.push((coeff, string));
        }
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// Dense Hermitian matrix of the Hamiltonian.
    pub fn dense(&self) -> DMatrix<Complex64> {
        let d = self.dim();
        let mut m = DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
        for (coeff, string) in &self.terms {
            for b in 0..d {
                let (phase, out) = string.basis_action(b);
                m[(out, b)] += phase * *coeff;
            }
        }
        m
    }

    /// Same Hamiltonian with all identity (constant) terms dropped. Constants
    /// only shift the global phase of `exp(-iHt)` and cannot be expressed by
    /// the gate alphabet, so Trotter-vs-exact comparisons use this form.
    pub fn without_identity(&self) -> PauliHamiltonian {
        PauliHamiltonian {
            n_qubits: self.n_qubits,
            terms: self
                .terms
                .iter()
                .filter(|(_, s)| s.0.iter().any(|p| *p != Pauli::I))
                .cloned()
                .collect(),
        }
    }

    /// Line-oriented text form `coefficient pauli_string`, one term per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (c, p) in &self.terms {
            s.push_str(&format!("{} {}\n", c, p));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut n_qubits = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let coeff: f64 = it
                .next()
                .ok_or_else(|| Error::invalid("missing coefficient"))?
                .parse()
                .map_err(|e| Error::invalid(format!("bad coefficient: {e}")))?;
            let string: PauliString = it
                .next()
                .ok_or_else(|| Error::invalid("missing pauli string"))?
                .parse()?;
            match n_qubits {
                None => n_qubits = Some(string.len()),
                Some(n) if n != string.len() => {
                    return Err(Error::invalid("inconsistent pauli string lengths"))
                }
                _ => {}
            }
            terms.push((coeff, string));
        }
        Ok(PauliHamiltonian {
            n_qubits: n_qubits.ok_or_else(|| Error::invalid("empty hamiltonian text"))?,
            terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_action_of_y() {
        let p: PauliString = "Y".parse().unwrap();
        let (ph, out) = p.basis_action(0);
        assert_eq!(out, 1);
        assert_eq!(ph, Complex64::new(0.0, 1.0));
        let (ph, out) = p.basis_action(1);
        assert_eq!(out, 0);
        assert_eq!(ph, Complex64::new(0.0, -1.0));
    }

    #[test]
    fn dense_zz_is_diagonal() {
        let mut h = PauliHamiltonian::new(2);
        h.add(1.0, "ZZ".parse().unwrap());
        let m = h.dense();
        for (i, want) in [1.0, -1.0, -1.0, 1.0].iter().enumerate() {
            assert_eq!(m[(i, i)].re, *want);
        }
    }

    #[test]
    fn text_round_trip() {
        let mut h = PauliHamiltonian::new(3);
        h.add(-1.05, "XIZ".parse().unwrap());
        h.add(0.5, "IZZ".parse().unwrap());
        let back = PauliHamiltonian::from_text(&h.to_text()).unwrap();
        assert_eq!(h, back);
    }
}
