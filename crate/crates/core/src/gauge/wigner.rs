//! Exact Wigner 3j symbols via the Racah factorial closed form.
//!
//! Every symbol is a signed rational times the square root of a nonnegative
//! rational; both parts are computed with integer arithmetic and converted to
//! floating point only at the end.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::halfint::{triangle_ok, HalfInt};

/// `coeff * sqrt(radicand)` with exact rational parts.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtRational {
    pub coeff: BigRational,
    pub radicand: BigRational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational {
            coeff: BigRational::zero(),
            radicand: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_zero()
    }

    pub fn value(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(0.0) * self.radicand.to_f64().unwrap_or(0.0).sqrt()
    }
}

fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative integer");
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Wigner 3j symbol. Selection-rule violations (triangle, m-range, m-sum)
/// return zero rather than an error.
pub fn wigner_3j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    m3: HalfInt,
) -> SqrtRational {
    if !triangle_ok(j1, j2, j3)
        || (m1 + m2 + m3).twice() != 0
        || m1.twice().abs() > j1.twice()
        || m2.twice().abs() > j2.twice()
        || m3.twice().abs() > j3.twice()
        || (j1 - m1).twice() % 2 != 0
        || (j2 - m2).twice() % 2 != 0
        || (j3 - m3).twice() % 2 != 0
    {
        return SqrtRational::zero();
    }
    // integer combinations (all guaranteed integral by the checks above)
    let half = |x: HalfInt| (x.twice() / 2) as i64;
    let a1 = half(j1 + j2 - j3);
    let a2 = half(j1 - j2 + j3);
    let a3 = half(j2 + j3 - j1);
    let b1p = half(j1 + m1);
    let b1m = half(j1 - m1);
    let b2p = half(j2 + m2);
    let b2m = half(j2 - m2);
    let b3p = half(j3 + m3);
    let b3m = half(j3 - m3);
    let c1 = half(j3 - j2 + m1);
    let c2 = half(j3 - j1 - m2);

    let radicand = BigRational::new(
        factorial(a1)
            * factorial(a2)
            * factorial(a3)
            * factorial(b1p)
            * factorial(b1m)
            * factorial(b2p)
            * factorial(b2m)
            * factorial(b3p)
            * factorial(b3m),
        factorial(half(j1 + j2 + j3) + 1),
    );

    let k_min = 0.max(-c1).max(-c2);
    let k_max = a1.min(b1m).min(b2p);
    let mut sum = BigRational::zero();
    for k in k_min..=k_max {
        let denom = factorial(k)
            * factorial(a1 - k)
            * factorial(b1m - k)
            * factorial(b2p - k)
            * factorial(c1 + k)
            * factorial(c2 + k);
        let term = BigRational::new(BigInt::one(), denom);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let phase = half(j1 - j2 - m3);
    if phase.rem_euclid(2) == 1 {
        sum = -sum;
    }
    SqrtRational {
        coeff: sum,
        radicand,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn trivial_symbol() {
        let v = wigner_3j(h(0), h(0), h(0), h(0), h(0), h(0));
        assert_eq!(v.value(), 1.0);
    }

    #[test]
    fn spin_half_pair() {
        // (1/2 1/2 0; 1/2 -1/2 0) = 1/sqrt(2)
        let v = wigner_3j(h(1), h(1), h(0), h(1), h(-1), h(0));
        assert!((v.value() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn triangle_violation_is_zero() {
        assert!(wigner_3j(h(1), h(0), h(0), h(1), h(0), h(0)).is_zero());
    }

    #[test]
    fn orthogonality_exhaustive_small_spins() {
        // sum_{m1 m2} (2 j3 + 1) 3j(j1 j2 j3; m1 m2 m3) 3j(j1 j2 j3'; m1 m2 m3')
        //   = delta_{j3 j3'} delta_{m3 m3'}
        for tj1 in 0..=3i32 {
            for tj2 in 0..=3i32 {
                for tj3 in 0..=3i32 {
                    for tj3p in 0..=3i32 {
                        if !triangle_ok(h(tj1), h(tj2), h(tj3))
                            || !triangle_ok(h(tj1), h(tj2), h(tj3p))
                        {
                            continue;
                        }
                        for tm3 in (-tj3..=tj3).step_by(2) {
                            for tm3p in (-tj3p..=tj3p).step_by(2) {
                                let mut acc = 0.0;
                                for tm1 in (-tj1..=tj1).step_by(2) {
                                    for tm2 in (-tj2..=tj2).step_by(2) {
                                        let a = wigner_3j(
                                            h(tj1),
                                            h(tj2),
                                            h(tj3),
                                            h(tm1),
                                            h(tm2),
                                            h(tm3),
                                        );
                                        let b = wigner_3j(
                                            h(tj1),
                                            h(tj2),
                                            h(tj3p),
                                            h(tm1),
                                            h(tm2),
                                            h(tm3p),
                                        );
                                        acc += (tj3 as f64 + 1.0) * a.value() * b.value();
                                    }
                                }
                                let want =
                                    if tj3 == tj3p && tm3 == tm3p { 1.0 } else { 0.0 };
                                assert!(
                                    (acc - want).abs() < 1e-12,
                                    "j=({tj1},{tj2},{tj3},{tj3p})/2 m=({tm3},{tm3p})/2: {acc}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
