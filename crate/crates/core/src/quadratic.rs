//! Integer coordinates `u + v sqrt(D)` and quadratic algebraic numbers.
//!
//! `D` may be negative or a perfect square; the arithmetic is that of the
//! ring `Z[t] / (t^2 - D)` and never touches floating point.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `re + im * sqrt(disc)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl QuadInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        QuadInt { re: re.into(), im: im.into() }
    }

    pub fn from_int(re: impl Into<BigInt>) -> Self {
        QuadInt { re: re.into(), im: BigInt::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn add(&self, other: &QuadInt) -> QuadInt {
        QuadInt { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &QuadInt) -> QuadInt {
        QuadInt { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn scale(&self, k: &BigInt) -> QuadInt {
        QuadInt { re: &self.re * k, im: &self.im * k }
    }

    pub fn mul(&self, other: &QuadInt, disc: &BigInt) -> QuadInt {
        QuadInt {
            re: &self.re * &other.re + disc * &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn pow(&self, mut e: u64, disc: &BigInt) -> QuadInt {
        let mut base = self.clone();
        let mut acc = QuadInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, disc);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, disc);
            }
        }
        acc
    }

    pub fn conj(&self) -> QuadInt {
        QuadInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self, disc: &BigInt) -> BigInt {
        &self.re * &self.re - disc * &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `k` divides both coordinates.
    pub fn divisible_by(&self, k: &BigInt) -> bool {
        self.re.is_multiple_of(k) && self.im.is_multiple_of(k)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(D)", self.re, self.im)
    }
}

/// A root of `lead X^2 + mid X + tail`, the larger one when `root_sign = +1`.
///
/// The root is `(-mid + root_sign * sqrt(mid^2 - 4 lead tail)) / (2 lead)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticAlgebraic {
    pub lead: BigInt,
    pub mid: BigInt,
    pub tail: BigInt,
    pub root_sign: i8,
}

impl QuadraticAlgebraic {
    pub fn new(lead: BigInt, mid: BigInt, tail: BigInt, root_sign: i8) -> Result<Self> {
        if !lead.is_positive() {
            return Err(Error::InvalidParameter("leading coefficient must be positive".into()));
        }
        if root_sign != 1 && root_sign != -1 {
            return Err(Error::InvalidParameter("root selector must be +1 or -1".into()));
        }
        Ok(QuadraticAlgebraic { lead, mid, tail, root_sign })
    }

    /// `x + sqrt(x^2 - 1)` with `x = -a / (b - 1)`: a root of
    /// `(b-1) X^2 + 2a X + (b-1)`, scaled to a primitive polynomial.
    pub fn unit_from_digit(digit: u64, base: u64) -> Result<Self> {
        crate::repdigit::check_base(base)?;
        let lead = BigInt::from(base - 1);
        let mid = BigInt::from(2 * u128::from(digit));
        let content = lead.gcd(&mid);
        Self::new(&lead / &content, &mid / &content, &lead / &content, 1)
    }

    /// The Pell unit `alpha = X_1 + sqrt(X_1^2 - 1)`, root of `X^2 - 2 X_1 X + 1`.
    pub fn pell_unit(x1: &BigInt) -> Result<Self> {
        Self::new(BigInt::one(), -(x1 << 1u32), BigInt::one(), 1)
    }

    pub fn discriminant(&self) -> BigInt {
        &self.mid * &self.mid - ((&self.lead * &self.tail) << 2u32)
    }

    /// The root as a rational when the discriminant is a perfect square.
    pub fn as_rational(&self) -> Option<BigRational> {
        let disc = self.discriminant();
        if disc.is_negative() {
            return None;
        }
        let s = disc.sqrt();
        if &s * &s != disc {
            return None;
        }
        let num = -&self.mid + BigInt::from(self.root_sign) * s;
        Some(BigRational::new(num, &self.lead << 1u32))
    }

    /// `(numerator coordinates, denominator)` with the root equal to
    /// `(num.re + num.im * sqrt(disc)) / den`.
    pub fn coordinates(&self) -> (QuadInt, BigInt) {
        (QuadInt::new(-&self.mid, BigInt::from(self.root_sign)), &self.lead << 1u32)
    }

    /// Absolute logarithmic Weil height of the selected root.
    pub fn height(&self) -> f64 {
        match self.as_rational() {
            Some(q) => crate::bounds::height_rational(&q),
            None => crate::bounds::height_quadratic(&self.lead, &self.mid, &self.tail)
                .expect("nonzero polynomial"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops() {
        let d = BigInt::from(2);
        let alpha = QuadInt::new(3, 2);
        assert_eq!(alpha.pow(3, &d), QuadInt::new(99, 70));
        assert_eq!(alpha.norm(&d), BigInt::one());
        assert_eq!(alpha.mul(&alpha.conj(), &d), QuadInt::one());
        assert_eq!(alpha.pow(0, &d), QuadInt::one());
        assert!(QuadInt::new(10, 20).divisible_by(&BigInt::from(10)));
        assert!(!QuadInt::new(10, 25).divisible_by(&BigInt::from(10)));
    }

    #[test]
    fn digit_units() {
        let beta = QuadraticAlgebraic::unit_from_digit(1, 10).unwrap();
        assert_eq!((beta.lead.clone(), beta.mid.clone(), beta.tail.clone()), (9.into(), 2.into(), 9.into()));
        assert!(beta.discriminant().is_negative());
        assert_eq!(beta.as_rational(), None);
        // a = 9 = b - 1: x = -1, beta = -1
        let beta = QuadraticAlgebraic::unit_from_digit(9, 10).unwrap();
        assert_eq!(beta.as_rational(), Some(BigRational::from_integer((-1).into())));
        // a = 15, b = 10: 9X^2 + 30X + 9 = 3(3X + 1)(X + 3)
        let beta = QuadraticAlgebraic::unit_from_digit(15, 10).unwrap();
        assert_eq!(beta.as_rational(), Some(BigRational::new((-1).into(), 3.into())));
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert!(QuadraticAlgebraic::new(0.into(), 1.into(), 1.into(), 1).is_err());
        assert!(QuadraticAlgebraic::new(1.into(), 1.into(), 1.into(), 0).is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000,
                                  d in -1000i64..1000, disc in -500i64..500) {
            let disc = BigInt::from(disc);
            let (u, v) = (QuadInt::new(a, b), QuadInt::new(c, d));
            prop_assert_eq!(u.mul(&v, &disc).norm(&disc), u.norm(&disc) * v.norm(&disc));
        }

        #[test]
        fn pow_matches_repeated_mul(a in -20i64..20, b in -20i64..20, e in 0u64..12, disc in -50i64..50) {
            let disc = BigInt::from(disc);
            let u = QuadInt::new(a, b);
            let slow = (0..e).fold(QuadInt::one(), |acc, _| acc.mul(&u, &disc));
            prop_assert_eq!(u.pow(e, &disc), slow);
        }
    }
}
