//! Gate kernels on raw amplitude slices.
//!
//! All kernels take the total qubit count `n` and address qubits with the
//! crate convention (qubit 0 = most significant bit). They are shared between
//! `PureState` (slice of length 2^n) and `MixedState` (a 2^n x 2^n density
//! matrix viewed as a 2n-qubit amplitude slice).

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use super::Pauli;

/// Bit mask of qubit `q` in an `n`-qubit basis index.
#[inline(always)]
pub fn bit(n: usize, q: usize) -> usize {
    1 << (n - 1 - q)
}

pub fn apply_h(amps: &mut [Complex64], n: usize, q: usize) {
    let stride = bit(n, q);
    let len = amps.len();
    let mut base = 0;
    while base < len {
        for i in base..base + stride {
            let a = amps[i];
            let b = amps[i + stride];
            amps[i] = (a + b) * FRAC_1_SQRT_2;
            amps[i + stride] = (a - b) * FRAC_1_SQRT_2;
        }
        base += 2 * stride;
    }
}

/// `exp(-i theta Z / 2)`: phase `e^{-i theta/2}` on bit 0, `e^{+i theta/2}` on bit 1.
pub fn apply_rz(amps: &mut [Complex64], n: usize, q: usize, theta: f64) {
    let stride = bit(n, q);
    let p0 = Complex64::from_polar(1.0, -theta / 2.0);
    let p1 = Complex64::from_polar(1.0, theta / 2.0);
    let len = amps.len();
    let mut base = 0;
    while base < len {
        for i in base..base + stride {
            amps[i] *= p0;
            amps[i + stride] *= p1;
        }
        base += 2 * stride;
    }
}

pub fn apply_cnot(amps: &mut [Complex64], n: usize, control: usize, target: usize) {
    let cmask = bit(n, control);
    let tmask = bit(n, target);
    let len = amps.len();
    for i in 0..len {
        // visit each swapped pair once: control set, target clear
        if i & cmask != 0 && i & tmask == 0 {
            amps.swap(i, i | tmask);
        }
    }
}

pub fn apply_pauli(amps: &mut [Complex64], n: usize, q: usize, p: Pauli) {
    let stride = bit(n, q);
    let len = amps.len();
    match p {
        Pauli::I => {}
        Pauli::X => {
            let mut base = 0;
            while base < len {
                for i in base..base + stride {
                    amps.swap(i, i + stride);
                }
                base += 2 * stride;
            }
        }
        Pauli::Y => {
            let mi = Complex64::new(0.0, -1.0);
            let pi = Complex64::new(0.0, 1.0);
            let mut base = 0;
            while base < len {
                for i in base..base + stride {
                    let a = amps[i];
                    let b = amps[i + stride];
                    amps[i] = mi * b;
                    amps[i + stride] = pi * a;
                }
                base += 2 * stride;
            }
        }
        Pauli::Z => {
            let mut base = 0;
            while base < len {
                for i in base..base + stride {
                    amps[i + stride] = -amps[i + stride];
                }
                base += 2 * stride;
            }
        }
    }
}

/// Contract a dense `2^k x 2^k` unitary onto `targets` (targets[0] is the
/// most significant bit of the sub-index), leaving all other qubits alone.
pub fn apply_dense(amps: &mut [Complex64], n: usize, u: &DMatrix<Complex64>, targets: &[usize]) {
    let k = targets.len();
    let dim = 1usize << k;
    assert_eq!(u.nrows(), dim);
    assert_eq!(u.ncols(), dim);
    // offset of sub-index s inside a full basis index
    let mut offsets = vec![0usize; dim];
    for (j, &t) in targets.iter().enumerate() {
        let m = bit(n, t);
        for (s, off) in offsets.iter_mut().enumerate() {
            if s & (1 << (k - 1 - j)) != 0 {
                *off |= m;
            }
        }
    }
    let any: usize = targets.iter().map(|&t| bit(n, t)).fold(0, |a, b| a | b);
    let mut gathered = vec![Complex64::new(0.0, 0.0); dim];
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for i in 0..amps.len() {
        if i & any != 0 {
            continue;
        }
        for s in 0..dim {
            gathered[s] = amps[i | offsets[s]];
        }
        out.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
        for (c, g) in gathered.iter().enumerate() {
            let col = u.column(c);
            for r in 0..dim {
                out[r] += col[r] * g;
            }
        }
        for s in 0..dim {
            amps[i | offsets[s]] = out[s];
        }
    }
}

/// Project the `(a, b)` qubit pair onto (|00> + |11>)/sqrt(2), in place,
/// leaving the slice unnormalized.
pub fn project_epr_pair(amps: &mut [Complex64], n: usize, a: usize, b: usize) {
    let m1 = bit(n, a);
    let m2 = bit(n, b);
    for i in 0..amps.len() {
        let b1 = i & m1 != 0;
        let b2 = i & m2 != 0;
        if !b1 && !b2 {
            let j = i | m1 | m2;
            let v = (amps[i] + amps[j]) * 0.5;
            amps[i] = v;
            amps[j] = v;
        } else if b1 != b2 {
            amps[i] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Offsets of all sub-indices over `subset` (subset[0] = MSB of the
/// sub-index) and the masks of the complement qubits, MSB first.
pub(crate) fn subset_tables(n: usize, subset: &[usize]) -> (usize, Vec<usize>, Vec<usize>) {
    let k = subset.len();
    let mut sub_offsets = vec![0usize; 1 << k];
    for (j, &q) in subset.iter().enumerate() {
        let m = bit(n, q);
        for (s, off) in sub_offsets.iter_mut().enumerate() {
            if s & (1 << (k - 1 - j)) != 0 {
                *off |= m;
            }
        }
    }
    let comp_masks: Vec<usize> = (0..n)
        .filter(|q| !subset.contains(q))
        .map(|q| bit(n, q))
        .collect();
    (k, sub_offsets, comp_masks)
}

/// Spread the bits of `b` over the given masks (mask 0 gets the MSB of `b`).
pub(crate) fn scatter(b: usize, masks: &[usize]) -> usize {
    let mut out = 0;
    for (j, m) in masks.iter().enumerate() {
        if b & (1 << (masks.len() - 1 - j)) != 0 {
            out |= m;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn h_on_zero_gives_plus() {
        let mut amps = vec![c(1.0, 0.0), c(0.0, 0.0)];
        apply_h(&mut amps, 1, 0);
        assert!((amps[0].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((amps[1].re - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn cnot_truth_table_msb_convention() {
        // |10> -> |11> with control = qubit 0 (MSB)
        let mut amps = vec![c(0.0, 0.0); 4];
        amps[0b10] = c(1.0, 0.0);
        apply_cnot(&mut amps, 2, 0, 1);
        assert_eq!(amps[0b11], c(1.0, 0.0));
        assert_eq!(amps[0b10], c(0.0, 0.0));
    }

    #[test]
    fn rz_pi_phases_one_state() {
        // Rz(pi) |1> = e^{i pi/2} |1> = i |1>
        let mut amps = vec![c(0.0, 0.0), c(1.0, 0.0)];
        apply_rz(&mut amps, 1, 0, std::f64::consts::PI);
        assert!((amps[1] - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn dense_identity_is_noop() {
        let u = DMatrix::identity(4, 4);
        let mut amps: Vec<Complex64> = (0..8).map(|i| c(i as f64, -(i as f64))).collect();
        let orig = amps.clone();
        apply_dense(&mut amps, 3, &u, &[0, 2]);
        assert_eq!(amps, orig);
    }
}
