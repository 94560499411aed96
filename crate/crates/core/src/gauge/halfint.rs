//! Half-integer spin values stored as twice their value.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A half-integer (possibly negative, for magnetic quantum numbers).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i32 {
        self.twice
    }

    pub fn as_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    /// `self + s/2` for a sign `s` in {+1, -1}.
    pub fn shifted(self, s: i8) -> HalfInt {
        HalfInt {
            twice: self.twice + s as i32,
        }
    }

    /// `j (j + 1)` as an f64.
    pub fn casimir(self) -> f64 {
        self.as_f64() * (self.as_f64() + 1.0)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Triangle conditions for three spins meeting at a vertex:
/// `|a - b| <= c <= a + b`, integer total, all nonnegative.
pub fn triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    let (ta, tb, tc) = (a.twice(), b.twice(), c.twice());
    ta >= 0
        && tb >= 0
        && tc >= 0
        && (ta - tb).abs() <= tc
        && tc <= ta + tb
        && (ta + tb + tc) % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let h = HalfInt::HALF;
        assert_eq!((h + h).as_f64(), 1.0);
        assert_eq!(h.shifted(-1), HalfInt::ZERO);
        assert_eq!(format!("{}", HalfInt::from_twice(3)), "3/2");
        assert_eq!(format!("{}", HalfInt::ONE), "1");
    }

    #[test]
    fn triangle_conditions() {
        let z = HalfInt::ZERO;
        let h = HalfInt::HALF;
        let o = HalfInt::ONE;
        assert!(triangle_ok(z, z, z));
        assert!(triangle_ok(h, h, o));
        assert!(triangle_ok(h, h, z));
        assert!(!triangle_ok(h, z, z)); // parity violated
        assert!(!triangle_ok(o, z, z)); // |a-b| > c
        assert!(!triangle_ok(-h, h, z)); // negative spin
    }
}
