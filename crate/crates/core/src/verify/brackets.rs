//! Size brackets for the Pell unit `alpha = X_1 + sqrt(X_1^2 - 1)` when
//! `X_1 = a (b^m - 1)/(b - 1)`, and the digit-length bound in the mixed
//! parity case. All comparisons are exact integer inequalities.

use alloc::format;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Finding, VerifyError};
use crate::bounds::ln_fixed;
use crate::repdigit::repunit;

/// Only orbits with at least this many digits are bracketed.
pub const BRACKET_MIN_LEN: u32 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketReport {
    pub x1: BigUint,
    /// `b^{m-1}`, strictly below `2 X_1 - 1 < alpha`.
    pub lower: BigUint,
    /// `2 b^{m+2}`, at least `2 X_1 > alpha`.
    pub upper: BigUint,
}

/// `b^{m-1} < 2X_1 - 1 < alpha < 2X_1 <= 2b^{m+2} <= b^{m+3}` for `m >= 100`.
pub fn bracket_check(base: u64, digit: u64, len: u32) -> Result<BracketReport, VerifyError> {
    if base < 2 || digit == 0 || digit >= base || len < BRACKET_MIN_LEN {
        return Err(VerifyError::Precondition(format!(
            "need b >= 2, 1 <= a <= b - 1, m >= {BRACKET_MIN_LEN} (b={base}, a={digit}, m={len})"
        )));
    }
    let x1 = repunit(base, len) * digit;
    let fail = |msg: &str| {
        VerifyError::Falsified(
            Finding::falsified("unit-bracket", msg).with("b", base).with("a", digit).with("m", len),
        )
    };
    // X_1 - 1 < sqrt(X_1^2 - 1) < X_1, so 2X_1 - 1 < alpha < 2X_1
    let disc = &x1 * &x1 - 1u32;
    let root = disc.sqrt();
    if root != &x1 - 1u32 || &root * &root == disc {
        return Err(fail("sqrt(X_1^2 - 1) not strictly between X_1 - 1 and X_1"));
    }
    let b = BigUint::from(base);
    let lower = b.pow(len - 1);
    let upper = b.pow(len + 2) * 2u32;
    if lower >= &x1 * 2u32 - 1u32 {
        return Err(fail("b^(m-1) >= 2X_1 - 1"));
    }
    if &x1 * 2u32 > upper || upper > b.pow(len + 3) {
        return Err(fail("2X_1 <= 2b^(m+2) <= b^(m+3) fails"));
    }
    Ok(BracketReport { x1, lower, upper })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedParityReport {
    /// Largest `m'` with `2^{m'-1} <= 2a^2`.
    pub m_prime_max: u32,
    /// `2a^2 <= b^3` was checked (only meaningful for `a <= b - 1`).
    pub digit_chain: bool,
}

/// For even `b`, a branch-iii solution of length `m'` forces
/// `2^{floor((m'-1)/2)} | a`, hence `2^{m'-1} <= 2a^2 <= b^3`, `m' <= b^3` and
/// `log d < b^3 log b < b^4`. The last step is checked exactly with a
/// certified upper bound for `log b`.
pub fn mixed_parity_bound_check(base: u64, m_prime: u32, digit: u64) -> Result<MixedParityReport, VerifyError> {
    let max_a = u128::from(base.saturating_sub(1)).pow(2);
    if base < 2 || base % 2 == 1 || digit == 0 || u128::from(digit) > max_a || m_prime == 0 {
        return Err(VerifyError::Precondition(format!(
            "need even b, 1 <= a <= (b-1)^2, m' >= 1 (b={base}, a={digit}, m'={m_prime})"
        )));
    }
    let half = (m_prime - 1) / 2;
    if half >= 64 || !digit.is_multiple_of(1u64 << half) {
        return Err(VerifyError::Precondition(format!("2^{half} does not divide a = {digit}")));
    }
    let fail = |msg: &str| {
        VerifyError::Falsified(
            Finding::falsified("mixed-parity-bound", msg).with("b", base).with("a", digit).with("m'", m_prime),
        )
    };
    let a = BigUint::from(digit);
    let twice_sq = &a * &a * 2u32;
    let m_prime_max = twice_sq.bits() as u32;
    if m_prime > m_prime_max || BigUint::one() << (m_prime - 1) > twice_sq {
        return Err(fail("2^(m'-1) > 2a^2"));
    }
    let b = BigUint::from(base);
    let b3 = b.pow(3);
    let digit_chain = digit < base;
    if digit_chain && twice_sq > b3 {
        return Err(fail("2a^2 > b^3"));
    }
    if BigUint::from(m_prime_max) > b3 {
        return Err(fail("m' > b^3"));
    }
    // b^3 log b < b^4 with log b <= U / 2^256
    let bits = 256;
    let u = ln_fixed(base, bits, true);
    if u.is_zero() || b3 * u >= b.pow(4) << bits {
        return Err(fail("b^3 log b >= b^4"));
    }
    Ok(MixedParityReport { m_prime_max, digit_chain })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_synthetic() {
        for base in [2u64, 10] {
            for digit in [1, base - 1] {
                let r = bracket_check(base, digit, 100).unwrap();
                assert!(r.lower < r.upper);
            }
        }
        assert!(matches!(bracket_check(10, 1, 99), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn mixed_parity() {
        assert_eq!(mixed_parity_bound_check(10, 14, 64).unwrap().m_prime_max, 14);
        let r = mixed_parity_bound_check(10, 1, 81).unwrap();
        assert_eq!(r.m_prime_max, 14);
        assert!(!r.digit_chain);
        assert_eq!(mixed_parity_bound_check(2, 2, 1).unwrap().m_prime_max, 2);
        assert!(matches!(mixed_parity_bound_check(2, 4, 1), Err(VerifyError::Precondition(_))));
        assert!(matches!(mixed_parity_bound_check(9, 1, 1), Err(VerifyError::Precondition(_))));
    }
}
