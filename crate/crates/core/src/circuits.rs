//! Circuit representation, exact gate decompositions, EPR builders, and
//! first-order Trotterized evolution for the Ising and Yang-Mills-Ising
//! models, with exact CNOT accounting.

use num_complex::Complex64;

use crate::engine::{
    DenseUnitary, Gate, MixedState, PauliHamiltonian, PauliString, PureState,
};
use crate::{Error, Result};

/// An ordered gate list on a fixed qubit count.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    label: String,
}

impl Circuit {
    pub fn new(n_qubits: usize, label: impl Into<String>) -> Self {
        Circuit {
            n_qubits,
            gates: Vec::new(),
            label: label.into(),
        }
    }

    pub fn with_gates(n_qubits: usize, gates: Vec<Gate>, label: impl Into<String>) -> Result<Self> {
        for g in &gates {
            g.validate(n_qubits)?;
        }
        Ok(Circuit {
            n_qubits,
            gates,
            label: label.into(),
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Append another circuit's gates (qubit counts must agree).
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.n_qubits != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                got: other.n_qubits,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn cnot_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_cnot()).count()
    }

    pub fn run(&self, state: &mut PureState) -> Result<()> {
        if state.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                got: state.n_qubits(),
            });
        }
        for g in &self.gates {
            state.apply_gate_unchecked(*g);
        }
        Ok(())
    }

    pub fn run_mixed(&self, rho: &mut MixedState) -> Result<()> {
        if rho.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                got: rho.n_qubits(),
            });
        }
        for g in &self.gates {
            rho.apply_gate_unchecked(*g);
        }
        Ok(())
    }

    /// Dense matrix of the circuit, built column-by-column.
    pub fn dense(&self) -> Result<DenseUnitary> {
        let d = 1usize << self.n_qubits;
        let mut m = nalgebra::DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
        for c in 0..d {
            let mut amps = vec![Complex64::new(0.0, 0.0); d];
            amps[c] = Complex64::new(1.0, 0.0);
            let mut s = PureState::from_amplitudes(self.n_qubits, amps)?;
            self.run(&mut s)?;
            for (r, a) in s.amplitudes().iter().enumerate() {
                m[(r, c)] = *a;
            }
        }
        DenseUnitary::new(self.n_qubits, m)
    }

    /// Entry-wise complex conjugate U*: RZ angles negate, H and CNOT stay.
    pub fn conjugate(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().map(|g| g.conjugate()).collect(),
            label: format!("{}*", self.label),
        }
    }

    /// Inverse circuit: reversed order, each gate inverted.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(|g| g.inverse()).collect(),
            label: format!("{}^-1", self.label),
        }
    }

    /// Send qubit `q` to `map[q]` on a register of `new_n_qubits` qubits.
    pub fn relabel(&self, new_n_qubits: usize, map: &[usize]) -> Result<Circuit> {
        if map.len() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                got: map.len(),
            });
        }
        let mut seen = vec![false; new_n_qubits];
        for &t in map {
            if t >= new_n_qubits {
                return Err(Error::IndexOutOfRange {
                    index: t,
                    n_qubits: new_n_qubits,
                });
            }
            if seen[t] {
                return Err(Error::invalid(format!("relabel map hits qubit {t} twice")));
            }
            seen[t] = true;
        }
        Ok(Circuit {
            n_qubits: new_n_qubits,
            gates: self.gates.iter().map(|g| g.relabel(|q| map[q])).collect(),
            label: self.label.clone(),
        })
    }

    /// One gate per line: `H q`, `RZ q theta`, `CNOT c t`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gates {
            match *g {
                Gate::H { qubit } => out.push_str(&format!("H {qubit}\n")),
                Gate::Rz { qubit, theta } => out.push_str(&format!("RZ {qubit} {theta}\n")),
                Gate::Cnot { control, target } => {
                    out.push_str(&format!("CNOT {control} {target}\n"))
                }
            }
        }
        out
    }

    /// Parse the `to_text` format; the qubit count is the largest index + 1.
    pub fn from_text(text: &str, label: impl Into<String>) -> Result<Circuit> {
        let mut gates = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parse_idx = |s: &str| -> Result<usize> {
                s.parse()
                    .map_err(|e| Error::invalid(format!("bad qubit index '{s}': {e}")))
            };
            let gate = match toks.as_slice() {
                ["H", q] => Gate::H {
                    qubit: parse_idx(q)?,
                },
                ["RZ", q, theta] => Gate::Rz {
                    qubit: parse_idx(q)?,
                    theta: theta
                        .parse()
                        .map_err(|e| Error::invalid(format!("bad angle '{theta}': {e}")))?,
                },
                ["CNOT", c, t] => Gate::Cnot {
                    control: parse_idx(c)?,
                    target: parse_idx(t)?,
                },
                _ => return Err(Error::invalid(format!("unparseable gate line '{line}'"))),
            };
            gates.push(gate);
        }
        let n_qubits = gates.iter().map(|g| g.max_qubit() + 1).max().unwrap_or(0);
        Circuit::with_gates(n_qubits, gates, label)
    }
}

/// Time discretization of an evolution: total time `t` over `m_steps` steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrotterSpec {
    pub t: f64,
    pub m_steps: usize,
}

impl TrotterSpec {
    pub fn new(t: f64, m_steps: usize) -> Result<Self> {
        if m_steps == 0 {
            return Err(Error::invalid("step count must be at least 1"));
        }
        if t < 0.0 {
            return Err(Error::invalid(format!("negative evolution time {t}")));
        }
        Ok(TrotterSpec { t, m_steps })
    }

    pub fn dt(&self) -> f64 {
        self.t / self.m_steps as f64
    }
}

/// Mixed-field Ising chain
/// `H = -sum Z_i Z_{i+1} - h sum X_i - m sum Z_i` on `n_sites` sites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsingParams {
    pub n_sites: usize,
    pub h: f64,
    pub m: f64,
}

impl IsingParams {
    pub fn new(n_sites: usize, h: f64, m: f64) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::invalid(format!(
                "ising chain needs at least 2 sites, got {n_sites}"
            )));
        }
        Ok(IsingParams { n_sites, h, m })
    }
}

/// Yang-Mills-Ising model on `n_sites` dual spins with magnetic coupling `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct YmParams {
    pub n_sites: usize,
    pub k: f64,
}

impl YmParams {
    pub fn new(n_sites: usize, k: f64) -> Result<Self> {
        if n_sites < 1 {
            return Err(Error::invalid("need at least 1 dual spin"));
        }
        if k < 0.0 {
            return Err(Error::invalid(format!("negative magnetic coupling {k}")));
        }
        Ok(YmParams { n_sites, k })
    }
}

/// `H = -sum_{i<N-1} Z_i Z_{i+1} - h sum X_i - m sum Z_i`.
pub fn ising_hamiltonian(p: &IsingParams) -> PauliHamiltonian {
    let n = p.n_sites;
    let mut ham = PauliHamiltonian::new(n);
    for i in 0..n - 1 {
        let mut v = vec![crate::engine::Pauli::I; n];
        v[i] = crate::engine::Pauli::Z;
        v[i + 1] = crate::engine::Pauli::Z;
        ham.add(-1.0, PauliString(v));
    }
    for i in 0..n {
        ham.add(-p.h, PauliString::single(n, i, crate::engine::Pauli::X));
        ham.add(-p.m, PauliString::single(n, i, crate::engine::Pauli::Z));
    }
    ham
}

/// One `H(a); CNOT(a, b)` block per pair: on |0...0> this prepares an EPR
/// pair (|00> + |11>)/sqrt(2) across each `(a, b)`.
pub fn build_epr_prep(n_qubits: usize, pairs: &[(usize, usize)]) -> Result<Circuit> {
    let flat: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    crate::engine::state::validate_targets(n_qubits, &flat)?;
    let mut c = Circuit::new(n_qubits, "epr_prep");
    for &(a, b) in pairs {
        c.push(Gate::H { qubit: a })?;
        c.push(Gate::Cnot {
            control: a,
            target: b,
        })?;
    }
    Ok(c)
}

/// Overlap with the product of EPR projectors over `pairs`, plus the
/// normalized post-projection state (`None` when the overlap is numerically
/// zero and the post-state is undefined).
pub fn epr_projector_overlap(
    state: &PureState,
    pairs: &[(usize, usize)],
) -> Result<(f64, Option<PureState>)> {
    let mut post = state.clone();
    let prob = post.project_epr_pairs(pairs)?;
    if prob < 1e-14 {
        return Ok((prob, None));
    }
    post.normalize()?;
    Ok((prob, Some(post)))
}

/// Rotation axes with known CNOT-optimal decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationAxis {
    /// `Z (x) Z` on 2 sites: 2 CNOTs.
    Zz,
    /// `X` on 1 site: 0 CNOTs.
    X,
    /// `X (x) Z` (X on the first site): 2 CNOTs.
    Xz,
    /// `Z (x) X (x) Z` (X on the middle site): 4 CNOTs.
    Zxz,
}

impl RotationAxis {
    pub fn arity(self) -> usize {
        match self {
            RotationAxis::X => 1,
            RotationAxis::Zz | RotationAxis::Xz => 2,
            RotationAxis::Zxz => 3,
        }
    }
}

/// `exp(-i (theta/2) * axis)` over `sites`, in the fixed decompositions:
/// ZZ as CNOT-RZ-CNOT, X as H-RZ-H, XZ and ZXZ as their basis-changed forms.
pub fn build_pauli_rotation(
    n_qubits: usize,
    axis: RotationAxis,
    theta: f64,
    sites: &[usize],
) -> Result<Circuit> {
    if sites.len() != axis.arity() {
        return Err(Error::invalid(format!(
            "axis {axis:?} needs {} sites, got {}",
            axis.arity(),
            sites.len()
        )));
    }
    let mut c = Circuit::new(n_qubits, format!("rot_{axis:?}"));
    match axis {
        RotationAxis::Zz => {
            let (a, b) = (sites[0], sites[1]);
            c.push(Gate::Cnot {
                control: a,
                target: b,
            })?;
            c.push(Gate::Rz { qubit: b, theta })?;
            c.push(Gate::Cnot {
                control: a,
                target: b,
            })?;
        }
        RotationAxis::X => {
            let a = sites[0];
            c.push(Gate::H { qubit: a })?;
            c.push(Gate::Rz { qubit: a, theta })?;
            c.push(Gate::H { qubit: a })?;
        }
        RotationAxis::Xz => {
            let (a, b) = (sites[0], sites[1]);
            c.push(Gate::H { qubit: a })?;
            c.push(Gate::Cnot {
                control: a,
                target: b,
            })?;
            c.push(Gate::Rz { qubit: b, theta })?;
            c.push(Gate::Cnot {
                control: a,
                target: b,
            })?;
            c.push(Gate::H { qubit: a })?;
        }
        RotationAxis::Zxz => {
            let (a, b, z) = (sites[0], sites[1], sites[2]);
            c.push(Gate::H { qubit: b })?;
            c.push(Gate::Cnot {
                control: a,
                target: z,
            })?;
            c.push(Gate::Cnot {
                control: b,
                target: z,
            })?;
            c.push(Gate::Rz { qubit: z, theta })?;
            c.push(Gate::Cnot {
                control: b,
                target: z,
            })?;
            c.push(Gate::Cnot {
                control: a,
                target: z,
            })?;
            c.push(Gate::H { qubit: b })?;
        }
    }
    Ok(c)
}

/// First-order Trotter circuit for the Ising chain: per step, the X layer
/// acts first, then the diagonal ZZ + Z layer; `2(N-1)` CNOTs per step.
pub fn build_trotter_ising(p: &IsingParams, spec: &TrotterSpec) -> Result<Circuit> {
    let n = p.n_sites;
    let dt = spec.dt();
    let mut c = Circuit::new(n, "trotter_ising");
    let mut step = Circuit::new(n, "");
    for i in 0..n {
        if p.h != 0.0 {
            step.append(&build_pauli_rotation(n, RotationAxis::X, -2.0 * p.h * dt, &[i])?)?;
        }
    }
    for i in 0..n - 1 {
        step.append(&build_pauli_rotation(
            n,
            RotationAxis::Zz,
            -2.0 * dt,
            &[i, i + 1],
        )?)?;
    }
    for i in 0..n {
        if p.m != 0.0 {
            step.push(Gate::Rz {
                qubit: i,
                theta: -2.0 * p.m * dt,
            })?;
        }
    }
    for _ in 0..spec.m_steps {
        c.append(&step)?;
    }
    Ok(c)
}

/// First-order Trotter circuit for the Yang-Mills-Ising model.
///
/// Per step the magnetic factors act first, site `N-1` down to site `0`,
/// then the diagonal electric layer. At the boundaries the fixed spins
/// `Z_{-1} = Z_N = 1` collapse two of the four magnetic factors per edge
/// site into pure-X and XZ rotations with merged angles, which is what
/// brings the count to exactly `10 N - 14` CNOTs per step.
pub fn build_trotter_ym(p: &YmParams, spec: &TrotterSpec) -> Result<Circuit> {
    let n = p.n_sites;
    if n < 2 {
        return Err(Error::invalid(format!(
            "trotterized evolution needs at least 2 dual spins, got {n}"
        )));
    }
    let dt = spec.dt();
    let k = p.k;
    let mut c = Circuit::new(n, "trotter_ym");
    let mut step = Circuit::new(n, "");
    // coefficient c of a term c * P enters as exp(-i dt c P) = theta = 2 dt c
    let ang = |coeff: f64| 2.0 * coeff * dt;
    for i in (0..n).rev() {
        let left = i > 0; // Z_{i-1} is a live spin
        let right = i + 1 < n; // Z_{i+1} is a live spin
        if k == 0.0 {
            continue;
        }
        match (left, right) {
            (true, true) => {
                step.append(&build_pauli_rotation(n, RotationAxis::X, ang(-k / 16.0), &[i])?)?;
                step.append(&build_pauli_rotation(
                    n,
                    RotationAxis::Xz,
                    ang(-3.0 * k / 16.0),
                    &[i, i - 1],
                )?)?;
                step.append(&build_pauli_rotation(
                    n,
                    RotationAxis::Xz,
                    ang(-3.0 * k / 16.0),
                    &[i, i + 1],
                )?)?;
                step.append(&build_pauli_rotation(
                    n,
                    RotationAxis::Zxz,
                    ang(-9.0 * k / 16.0),
                    &[i - 1, i, i + 1],
                )?)?;
            }
            (false, true) => {
                // X and XZ-left merge; XZ-right and ZXZ merge
                step.append(&build_pauli_rotation(n, RotationAxis::X, ang(-k / 4.0), &[i])?)?;
                step.append(&build_pauli_rotation(
                    n,
                    RotationAxis::Xz,
                    ang(-3.0 * k / 4.0),
                    &[i, i + 1],
                )?)?;
            }
            (true, false) => {
                // X and XZ-right merge; XZ-left and ZXZ merge
                step.append(&build_pauli_rotation(n, RotationAxis::X, ang(-k / 4.0), &[i])?)?;
                step.append(&build_pauli_rotation(
                    n,
                    RotationAxis::Xz,
                    ang(-3.0 * k / 4.0),
                    &[i, i - 1],
                )?)?;
            }
            (false, false) => unreachable!("n >= 2"),
        }
    }
    // electric layer: couplings Z_{i-1} Z_i, then single-Z terms with the
    // boundary ZZ factors folded onto the edge sites
    for i in 1..n {
        step.append(&build_pauli_rotation(
            n,
            RotationAxis::Zz,
            ang(-3.0 / 16.0),
            &[i - 1, i],
        )?)?;
    }
    for i in 0..n {
        let mut coeff = -3.0 / 8.0;
        if i == 0 || i == n - 1 {
            coeff += -3.0 / 16.0;
        }
        step.push(Gate::Rz {
            qubit: i,
            theta: ang(coeff),
        })?;
    }
    for _ in 0..spec.m_steps {
        c.append(&step)?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{exact_unitary, Pauli, RngStream};
    use rand::Rng;

    fn random_state(n: usize, seed: u64) -> PureState {
        let mut rng = RngStream::new(seed, 0).rng();
        let amps: Vec<Complex64> = (0..1usize << n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        PureState::from_amplitudes(n, amps.into_iter().map(|a| a / norm).collect()).unwrap()
    }

    fn random_circuit(n: usize, len: usize, seed: u64) -> Circuit {
        let mut rng = RngStream::new(seed, 0).rng();
        let mut c = Circuit::new(n, "random");
        for _ in 0..len {
            let g = match rng.gen_range(0..3) {
                0 => Gate::H {
                    qubit: rng.gen_range(0..n),
                },
                1 => Gate::Rz {
                    qubit: rng.gen_range(0..n),
                    theta: rng.gen_range(-3.0..3.0),
                },
                _ => {
                    let a = rng.gen_range(0..n);
                    let mut b = rng.gen_range(0..n);
                    while b == a {
                        b = rng.gen_range(0..n);
                    }
                    Gate::Cnot {
                        control: a,
                        target: b,
                    }
                }
            };
            c.push(g).unwrap();
        }
        c
    }

    fn frobenius_diff(a: &DenseUnitary, b: &DenseUnitary) -> f64 {
        a.matrix()
            .iter()
            .zip(b.matrix().iter())
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Independent oracle: e^{-i (theta/2) P} through dense diagonalization.
    fn rotation_oracle(axis: &str, theta: f64) -> DenseUnitary {
        let s: PauliString = axis.parse().unwrap();
        let mut h = PauliHamiltonian::new(s.len());
        h.add(1.0, s);
        exact_unitary(&h, theta / 2.0).unwrap()
    }

    #[test]
    fn epr_prep_prepares_epr_pairs() {
        let pairs = [(0, 2), (1, 3)];
        let c = build_epr_prep(4, &pairs).unwrap();
        assert_eq!(c.cnot_count(), 2);
        assert_eq!(c.len(), 4);
        let mut s = PureState::zero(4);
        c.run(&mut s).unwrap();
        let (prob, post) = epr_projector_overlap(&s, &pairs).unwrap();
        assert!((prob - 1.0).abs() < 1e-13);
        assert!(post.unwrap().distance(&s) < 1e-13);
    }

    #[test]
    fn epr_overlap_examples() {
        let (p, post) = epr_projector_overlap(&PureState::zero(2), &[(0, 1)]).unwrap();
        assert!((p - 0.5).abs() < 1e-14);
        let mut bell = PureState::zero(2);
        build_epr_prep(2, &[(0, 1)]).unwrap().run(&mut bell).unwrap();
        assert!(post.unwrap().distance(&bell) < 1e-14);

        let mut s = PureState::zero(2);
        s.apply_pauli(1, Pauli::X);
        let (p, post) = epr_projector_overlap(&s, &[(0, 1)]).unwrap();
        assert!(p < 1e-14);
        assert!(post.is_none());
    }

    #[test]
    fn epr_projection_is_idempotent() {
        let s = random_state(4, 31);
        let (_, post) = epr_projector_overlap(&s, &[(1, 3)]).unwrap();
        let (p2, _) = epr_projector_overlap(&post.unwrap(), &[(1, 3)]).unwrap();
        assert!((p2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zz_rotation_is_the_expected_diagonal() {
        let theta = 0.9;
        let c = build_pauli_rotation(2, RotationAxis::Zz, theta, &[0, 1]).unwrap();
        assert_eq!(c.cnot_count(), 2);
        let m = c.dense().unwrap().matrix().clone();
        let e = |s: f64| Complex64::from_polar(1.0, s * theta / 2.0);
        for (i, want) in [e(-1.0), e(1.0), e(1.0), e(-1.0)].iter().enumerate() {
            assert!((m[(i, i)] - want).norm() < 1e-14);
            for j in 0..4 {
                if j != i {
                    assert!(m[(i, j)].norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn x_rotation_by_pi_flips_with_phase() {
        let c = build_pauli_rotation(1, RotationAxis::X, std::f64::consts::PI, &[0]).unwrap();
        assert_eq!(c.cnot_count(), 0);
        let mut s = PureState::zero(1);
        c.run(&mut s).unwrap();
        assert!((s.amplitudes()[1] - Complex64::new(0.0, -1.0)).norm() < 1e-13);
        assert!(s.amplitudes()[0].norm() < 1e-13);
    }

    #[test]
    fn rotations_match_dense_exponentials() {
        let cases = [
            (RotationAxis::Zz, "ZZ", vec![0, 1], 2),
            (RotationAxis::X, "X", vec![0], 0),
            (RotationAxis::Xz, "XZ", vec![0, 1], 2),
            (RotationAxis::Zxz, "ZXZ", vec![0, 1, 2], 4),
        ];
        let mut rng = RngStream::new(13, 0).rng();
        for (axis, pauli, sites, cnots) in cases {
            for _ in 0..20 {
                let theta: f64 = rng.gen_range(-6.0..6.0);
                let c = build_pauli_rotation(sites.len(), axis, theta, &sites).unwrap();
                assert_eq!(c.cnot_count(), cnots);
                let diff = frobenius_diff(&c.dense().unwrap(), &rotation_oracle(pauli, theta));
                assert!(diff < 1e-12, "{axis:?} theta {theta}: diff {diff}");
            }
        }
    }

    #[test]
    fn cnot_count_formulas() {
        for n in 2..=10usize {
            for m in [1usize, 3] {
                let spec = TrotterSpec::new(1.0, m).unwrap();
                let ci = build_trotter_ising(&IsingParams::new(n, -1.05, 0.5).unwrap(), &spec)
                    .unwrap();
                assert_eq!(ci.cnot_count(), 2 * (n - 1) * m, "ising n={n} m={m}");
                let cy = build_trotter_ym(&YmParams::new(n, 2.0).unwrap(), &spec).unwrap();
                assert_eq!(cy.cnot_count(), (10 * n - 14) * m, "ym n={n} m={m}");
            }
        }
    }

    #[test]
    fn classical_ising_circuit_is_diagonal() {
        let c = build_trotter_ising(
            &IsingParams::new(5, 0.0, 0.0).unwrap(),
            &TrotterSpec::new(1.0, 2).unwrap(),
        )
        .unwrap();
        assert!(c.gates().iter().all(|g| !matches!(g, Gate::H { .. })));
    }

    #[test]
    fn free_ym_circuit_is_diagonal() {
        let c = build_trotter_ym(
            &YmParams::new(4, 0.0).unwrap(),
            &TrotterSpec::new(1.0, 2).unwrap(),
        )
        .unwrap();
        assert!(c.gates().iter().all(|g| !matches!(g, Gate::H { .. })));
    }

    #[test]
    fn trotter_ising_tracks_exact_evolution() {
        let p = IsingParams::new(6, -1.05, 0.5).unwrap();
        let c = build_trotter_ising(&p, &TrotterSpec::new(1.0, 2000).unwrap()).unwrap();
        let u = exact_unitary(&ising_hamiltonian(&p), 1.0).unwrap();
        let mut a = random_state(6, 55);
        let mut b = a.clone();
        c.run(&mut a).unwrap();
        b.apply_dense(u.matrix(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(a.distance(&b) < 1e-3);
    }

    /// Spin Hamiltonian written out term by term, with the boundary spins
    /// substituted as constants, as an oracle for the circuit builder.
    fn ym_spin_hamiltonian(n: usize, k: f64) -> PauliHamiltonian {
        let mut h = PauliHamiltonian::new(n);
        let z = |i: usize| PauliString::single(n, i, Pauli::Z);
        // electric: sum_{i=0..N} (3/16)(3 - 2 Z_i - Z_{i-1} Z_i), Z_{-1}=Z_N=1
        for i in 0..=n {
            h.add(9.0 / 16.0, PauliString::identity(n));
            if i < n {
                h.add(-3.0 / 8.0, z(i));
            } else {
                h.add(-3.0 / 8.0, PauliString::identity(n));
            }
            match i {
                0 => h.add(-3.0 / 16.0, z(0)),
                i if i == n => h.add(-3.0 / 16.0, z(n - 1)),
                _ => {
                    let mut v = vec![Pauli::I; n];
                    v[i - 1] = Pauli::Z;
                    v[i] = Pauli::Z;
                    h.add(-3.0 / 16.0, PauliString(v));
                }
            }
        }
        // magnetic: -(K/16) sum_i X_i (1 + 3 Z_{i-1})(1 + 3 Z_{i+1})
        for i in 0..n {
            for (wl, left) in [(1.0, false), (3.0, true)] {
                for (wr, right) in [(1.0, false), (3.0, true)] {
                    let mut v = vec![Pauli::I; n];
                    v[i] = Pauli::X;
                    if left {
                        if i == 0 {
                            // Z_{-1} = 1
                        } else {
                            v[i - 1] = Pauli::Z;
                        }
                    }
                    if right {
                        if i + 1 == n {
                            // Z_N = 1
                        } else {
                            v[i + 1] = Pauli::Z;
                        }
                    }
                    h.add(-k * wl * wr / 16.0, PauliString(v));
                }
            }
        }
        h
    }

    #[test]
    fn trotter_ym_tracks_exact_evolution() {
        let h = ym_spin_hamiltonian(6, 2.0).without_identity();
        let c = build_trotter_ym(
            &YmParams::new(6, 2.0).unwrap(),
            &TrotterSpec::new(0.5, 2000).unwrap(),
        )
        .unwrap();
        let u = exact_unitary(&h, 0.5).unwrap();
        let mut a = random_state(6, 77);
        let mut b = a.clone();
        c.run(&mut a).unwrap();
        b.apply_dense(u.matrix(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(a.distance(&b) < 1e-3, "distance {}", a.distance(&b));
    }

    #[test]
    fn trotter_error_halves_when_steps_double() {
        let p = IsingParams::new(4, -1.05, 0.5).unwrap();
        let exact = exact_unitary(&ising_hamiltonian(&p), 1.0).unwrap();
        let err = |m: usize| {
            let c = build_trotter_ising(&p, &TrotterSpec::new(1.0, m).unwrap()).unwrap();
            frobenius_diff(&c.dense().unwrap(), &exact)
        };
        let factor = err(8) / err(16);
        assert!((1.5..=2.5).contains(&factor), "factor {factor}");

        let yp = YmParams::new(4, 2.0).unwrap();
        let yh = ym_spin_hamiltonian(4, 2.0).without_identity();
        let yexact = exact_unitary(&yh, 1.0).unwrap();
        let yerr = |m: usize| {
            let c = build_trotter_ym(&yp, &TrotterSpec::new(1.0, m).unwrap()).unwrap();
            frobenius_diff(&c.dense().unwrap(), &yexact)
        };
        let yfactor = yerr(8) / yerr(16);
        assert!((1.5..=2.5).contains(&yfactor), "factor {yfactor}");
    }

    #[test]
    fn conjugate_circuit_matches_entrywise_conjugate() {
        let c = random_circuit(4, 50, 91);
        let conj = c.conjugate().dense().unwrap();
        let want = c.dense().unwrap().conjugate();
        assert!(frobenius_diff(&conj, &want) < 1e-13);
    }

    #[test]
    fn inverse_circuit_undoes_circuit() {
        let c = random_circuit(5, 200, 17);
        let mut s = random_state(5, 17);
        let orig = s.clone();
        c.run(&mut s).unwrap();
        c.inverse().run(&mut s).unwrap();
        assert!(s.distance(&orig) < 1e-10);
    }

    #[test]
    fn relabel_equivariance_and_composition() {
        let c = random_circuit(3, 40, 7);
        let id: Vec<usize> = (0..3).collect();
        assert_eq!(c.relabel(3, &id).unwrap().gates(), c.gates());

        // shift by 2 into a 5-qubit register: acting on a shifted product
        // input reproduces the unshifted action on the moved qubits
        let shift: Vec<usize> = (0..3).map(|q| q + 2).collect();
        let cs = c.relabel(5, &shift).unwrap();
        let mut small = PureState::zero(3);
        c.run(&mut small).unwrap();
        let mut big = PureState::zero(5);
        cs.run(&mut big).unwrap();
        let rho = big.reduced_density(&[2, 3, 4]).unwrap();
        let overlap: f64 = {
            let a = small.amplitudes();
            (0..8)
                .map(|r| {
                    (0..8)
                        .map(|c2| (a[r].conj() * rho.matrix()[(r, c2)] * a[c2]).re)
                        .sum::<f64>()
                })
                .sum()
        };
        assert!((overlap - 1.0).abs() < 1e-12);

        // composing relabelings equals relabeling by the composition
        let m1: Vec<usize> = vec![1, 3, 0];
        let m2: Vec<usize> = vec![4, 2, 0, 1, 3];
        let two_step = c.relabel(4, &m1).unwrap().relabel(5, &m2[..4]).unwrap();
        let composed: Vec<usize> = m1.iter().map(|&q| m2[q]).collect();
        assert_eq!(two_step.gates(), c.relabel(5, &composed).unwrap().gates());
    }

    #[test]
    fn text_round_trip() {
        let c = random_circuit(4, 30, 3);
        let back = Circuit::from_text(&c.to_text(), "random").unwrap();
        assert_eq!(back.gates(), c.gates());
        assert_eq!(back.to_text(), c.to_text());
    }

    #[test]
    fn duplicate_pair_qubits_rejected() {
        assert!(build_epr_prep(4, &[(0, 1), (1, 2)]).is_err());
    }
}
