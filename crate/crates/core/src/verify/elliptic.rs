//! Reduction of `2x^2 - 1 = a (b^r y^3 - 1)/(b - 1)` to the Mordell curve
//! `X^2 = Y^3 + C` via `X = 4a(b-1)^2 b^r x`, `Y = 2a(b-1) b^r y`.
//!
//! The substitution yields `C = 8 a^2 (b-1)^3 b^{2r} ((b-1) - a)`, which is
//! `2a(b-1)b^r` times the shorter constant `A_0 = 4a(b-1)^2 b^r ((b-1) - a)`.
//! Both are carried: `A_0` for the `|A_0| < 4b^6` size estimate, `C` for the
//! curve that mapped points actually lie on.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Finding, VerifyError};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EllipticInstance {
    pub digit: u64,
    pub base: u64,
    /// `m mod 3`.
    pub residue: u32,
    /// `4a(b-1)^2 b^r ((b-1) - a)`.
    pub a0: BigInt,
    /// `8a^2(b-1)^3 b^{2r} ((b-1) - a)`: the constant of the image curve.
    pub curve_constant: BigInt,
}

impl EllipticInstance {
    /// `a = b - 1` collapses the curve to `X^2 = Y^3`.
    pub fn is_degenerate(&self) -> bool {
        self.a0.is_zero()
    }
}

pub fn elliptic_params(digit: u64, base: u64, residue: u32) -> Result<EllipticInstance> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    if digit == 0 || digit >= base {
        return Err(Error::InvalidDigit { base, digit });
    }
    if residue > 2 {
        return Err(Error::InvalidParameter(format!("residue r = {residue} not in {{0, 1, 2}}")));
    }
    let a = BigInt::from(digit);
    let bm1 = BigInt::from(base - 1);
    let br = BigInt::from(base).pow(residue);
    let gap = &bm1 - &a;
    let a0 = BigInt::from(4) * &a * &bm1 * &bm1 * &br * &gap;
    let curve_constant = &a0 * BigInt::from(2) * &a * &bm1 * &br;
    Ok(EllipticInstance { digit, base, residue, a0, curve_constant })
}

fn satisfies_ap7(x: &BigInt, y: &BigInt, digit: u64, base: u64, residue: u32) -> bool {
    // (b - 1)(2x^2 - 1) = a (b^r y^3 - 1)
    let lhs = BigInt::from(base - 1) * (BigInt::from(2) * x * x - 1);
    let rhs = BigInt::from(digit) * (BigInt::from(base).pow(residue) * y * y * y - 1);
    lhs == rhs
}

/// Maps a solution `(x, y)` to a point `(X, Y)` on `X^2 = Y^3 + C`.
pub fn elliptic_map(
    x: &BigInt,
    y: &BigInt,
    digit: u64,
    base: u64,
    residue: u32,
) -> Result<(BigInt, BigInt), VerifyError> {
    let inst = elliptic_params(digit, base, residue).map_err(|e| VerifyError::Precondition(format!("{e}")))?;
    if inst.is_degenerate() {
        return Err(VerifyError::Precondition("a = b - 1 gives A0 = 0; handled by the even-case split".into()));
    }
    if !satisfies_ap7(x, y, digit, base, residue) {
        return Err(VerifyError::Precondition(format!(
            "(x, y) = ({x}, {y}) does not satisfy 2x^2 - 1 = {digit}({base}^{residue} y^3 - 1)/({base} - 1)"
        )));
    }
    let a = BigInt::from(digit);
    let bm1 = BigInt::from(base - 1);
    let br = BigInt::from(base).pow(residue);
    let big_x = BigInt::from(4) * &a * &bm1 * &bm1 * &br * x;
    let big_y = BigInt::from(2) * &a * &bm1 * &br * y;
    if &big_x * &big_x != &big_y * &big_y * &big_y + &inst.curve_constant {
        return Err(VerifyError::Falsified(
            Finding::falsified("elliptic-map", "image point is off the curve")
                .with("x", x)
                .with("y", y)
                .with("a", digit)
                .with("b", base)
                .with("r", residue),
        ));
    }
    Ok((big_x, big_y))
}

/// All `(x, y)` with `1 <= x <= x_max`, `1 <= y <= y_max` solving
/// `2x^2 - 1 = a (b^r y^3 - 1)/(b - 1)`; solves for `x` given each `y`.
pub fn ap7_solutions(digit: u64, base: u64, residue: u32, x_max: u64, y_max: u64) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let bm1 = BigInt::from(base - 1);
    let br = BigInt::from(base).pow(residue);
    for y in 1..=y_max {
        let y = BigInt::from(y);
        let num: BigInt = BigInt::from(digit) * (&br * &y * &y * &y - 1);
        if !num.is_multiple_of(&bm1) {
            continue;
        }
        let twice_sq: BigInt = num / &bm1 + 1;
        if twice_sq.is_negative() || twice_sq.is_odd() {
            continue;
        }
        let sq: BigInt = twice_sq / 2;
        let x = sq.sqrt();
        if &x * &x == sq && x >= BigInt::from(1) && x <= BigInt::from(x_max) {
            out.push((x, y));
        }
    }
    out
}

/// Every integer point on `X^2 = Y^3 + a0` with `|Y| <= y_max`, sorted by
/// `(Y, X)`.
pub fn enumerate_integer_points(a0: &BigInt, y_max: u64) -> Result<Vec<(BigInt, BigInt)>> {
    if a0.is_zero() {
        return Err(Error::InvalidParameter("A0 must be nonzero".into()));
    }
    let mut out = Vec::new();
    let y_max = i128::from(y_max);
    for y in -y_max..=y_max {
        let y = BigInt::from(y);
        let v = &y * &y * &y + a0;
        if v.is_negative() {
            continue;
        }
        let s = v.sqrt();
        if &s * &s == v {
            if s.is_zero() {
                out.push((s, y));
            } else {
                out.push((-s.clone(), y.clone()));
                out.push((s, y));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(a0: i64, y_max: u64) -> Vec<(i64, i64)> {
        enumerate_integer_points(&BigInt::from(a0), y_max)
            .unwrap()
            .into_iter()
            .map(|(x, y)| (i64::try_from(x).unwrap(), i64::try_from(y).unwrap()))
            .collect()
    }

    #[test]
    fn params() {
        let e = elliptic_params(1, 10, 0).unwrap();
        assert_eq!(e.a0, BigInt::from(2592));
        assert_eq!(e.curve_constant, BigInt::from(46656));
        assert!(elliptic_params(9, 10, 2).unwrap().is_degenerate());
        assert!(elliptic_params(1, 10, 3).is_err());
        assert!(elliptic_params(10, 10, 0).is_err());
    }

    #[test]
    fn map_and_rejections() {
        // b = 10, a = 1, r = 0: 2*4 - 1 = (64 - 1)/9
        let (bx, by) = elliptic_map(&2.into(), &4.into(), 1, 10, 0).unwrap();
        assert_eq!((bx.clone(), by.clone()), (BigInt::from(648), BigInt::from(72)));
        // on the image curve, not on the printed-constant curve
        assert_eq!(&bx * &bx - &by * &by * &by, BigInt::from(46656));
        assert_ne!(&bx * &bx - &by * &by * &by, BigInt::from(2592));

        assert!(matches!(elliptic_map(&1.into(), &1.into(), 1, 10, 0), Err(VerifyError::Precondition(_))));
        assert!(matches!(elliptic_map(&1.into(), &1.into(), 9, 10, 0), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn point_enumeration() {
        assert_eq!(pts(-2, 10), [(-5, 3), (5, 3)]);
        assert_eq!(pts(1, 10), [(0, -1), (-1, 0), (1, 0), (-3, 2), (3, 2)]);
        assert!(pts(2592, 10_000).is_empty());
        assert_eq!(pts(46656, 10_000), [(0, -36), (-216, 0), (216, 0), (-648, 72), (648, 72)]);
        assert!(enumerate_integer_points(&BigInt::zero(), 5).is_err());
    }

    #[test]
    fn ap7_window() {
        let s = ap7_solutions(1, 10, 1, 10_000, 100);
        assert_eq!(s, [(BigInt::from(1), BigInt::from(1)), (BigInt::from(6), BigInt::from(4))]);
        let s = ap7_solutions(1, 4, 1, 10_000, 100);
        assert_eq!(s, [(BigInt::from(1), BigInt::from(1)), (BigInt::from(389), BigInt::from(61))]);
    }
}
