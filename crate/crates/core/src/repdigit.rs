//! Base-`b` digits and repdigits `N = a (b^m - 1) / (b - 1)`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

/// `N = digit * (base^len - 1) / (base - 1)`.
///
/// A plain repdigit has `1 <= digit <= base - 1`. After the gcd reduction of
/// two odd solutions the digit may grow up to `(base - 1)^2`; such forms carry
/// `generalized = true`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepdigitForm {
    pub base: u64,
    pub digit: u64,
    pub len: u32,
    pub generalized: bool,
}

impl RepdigitForm {
    pub fn new(base: u64, digit: u64, len: u32) -> Result<Self> {
        check_base(base)?;
        if digit == 0 || digit >= base || len == 0 {
            return Err(Error::InvalidDigit { base, digit });
        }
        Ok(RepdigitForm { base, digit, len, generalized: false })
    }

    pub fn generalized(base: u64, digit: u64, len: u32) -> Result<Self> {
        check_base(base)?;
        let max = u128::from(base - 1) * u128::from(base - 1);
        if digit == 0 || u128::from(digit) > max || len == 0 {
            return Err(Error::InvalidDigit { base, digit });
        }
        Ok(RepdigitForm { base, digit, len, generalized: true })
    }

    pub fn value(&self) -> BigUint {
        repunit(self.base, self.len) * self.digit
    }
}

pub(crate) fn check_base(base: u64) -> Result<()> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    Ok(())
}

/// `(b^m - 1) / (b - 1)`.
pub fn repunit(base: u64, len: u32) -> BigUint {
    (BigUint::from(base).pow(len) - 1u32) / (base - 1)
}

pub fn repdigit_value(form: &RepdigitForm) -> BigUint {
    form.value()
}

/// Recognizes plain base-`b` repdigits (digit at most `b - 1`).
///
/// Single-digit numbers are repdigits of length 1. Returns `None` for zero.
pub fn as_repdigit(n: &BigUint, base: u64) -> Option<RepdigitForm> {
    if base < 2 || n.is_zero() {
        return None;
    }
    let b = BigUint::from(base);
    let (mut rest, last) = n.div_rem(&b);
    let digit = last.to_u64().expect("digit below base");
    if digit == 0 {
        return None;
    }
    let mut len = 1u32;
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&b);
        if r != last {
            return None;
        }
        rest = q;
        len += 1;
    }
    Some(RepdigitForm { base, digit, len, generalized: false })
}

/// Base-`b` expansion, most significant digit first.
pub fn digits(n: &BigUint, base: u64) -> Vec<u64> {
    assert!(base >= 2, "base must be at least 2");
    if n.is_zero() {
        return alloc::vec![0];
    }
    if base <= 256 {
        return n.to_radix_be(base as u32).into_iter().map(u64::from).collect();
    }
    let b = BigUint::from(base);
    let mut out = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&b);
        out.push(r.to_u64().expect("digit below base"));
        rest = q;
    }
    out.reverse();
    out
}

/// `gcd(b^{m1} - 1, b^{m2} - 1)`, checked against `b^{gcd(m1, m2)} - 1`.
///
/// # Panics
///
/// Panics if the identity fails, which can only mean an arithmetic bug.
pub fn gcd_power_minus_one(base: u64, m1: u32, m2: u32) -> BigUint {
    assert!(base >= 2 && m1 >= 1 && m2 >= 1);
    let b = BigUint::from(base);
    let g = (b.pow(m1) - 1u32).gcd(&(b.pow(m2) - 1u32));
    assert_eq!(g, b.pow(m1.gcd(&m2)) - 1u32, "gcd(b^m1 - 1, b^m2 - 1) identity");
    g
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn round_trip(base in 2u64..=16, digit in 1u64..16, len in 1u32..=30) {
            prop_assume!(digit < base);
            let f = RepdigitForm::new(base, digit, len).unwrap();
            prop_assert_eq!(as_repdigit(&repdigit_value(&f), base), Some(f));
        }

        #[test]
        fn recognition_agrees_with_digits(n in 1u64..10_000_000, base in 2u64..=16) {
            let ds = digits(&BigUint::from(n), base);
            let uniform = ds.iter().all(|&x| x == ds[0]);
            prop_assert_eq!(as_repdigit(&BigUint::from(n), base).is_some(), uniform);
        }
    }
}
