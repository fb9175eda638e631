use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use super::log::{ln_big, ln_fixed};
use crate::verify::elliptic_params;
use crate::{Error, Result};

/// Fractional bits of the certified `ln b` used by [`log_d_bound`].
pub const LOG_FIXED_BITS: u32 = 256;

/// `10^4 log(10^10 |A_0|)`: the natural log of the exponent in Baker's bound
/// `max(|X|, |Y|) < exp((10^10 |A_0|)^{10^4})` for `X^2 = Y^3 + A_0`.
pub fn baker_log_bound(a0: &BigInt) -> Result<f64> {
    if a0.is_zero() {
        return Err(Error::InvalidParameter("A0 must be nonzero".into()));
    }
    Ok(1e4 * (10.0 * core::f64::consts::LN_10 + ln_big(a0.magnitude())))
}

/// `log(0.5 (10b)^{10^5}) - baker_log_bound(a0)`; positive when Baker's
/// exponent stays below half of the final theorem exponent.
pub fn baker_margin(a0: &BigInt, base: u64) -> Result<f64> {
    let target = libm::log(0.5) + 1e5 * libm::log(10.0 * base as f64);
    Ok(target - baker_log_bound(a0)?)
}

/// Largest `|A_0|` over digits `1 <= a < b - 1` and `r in {0, 1, 2}`, for the
/// printed constant and for the curve constant actually reached by the
/// elliptic substitution. `None` when no digit qualifies (`b <= 2`).
pub fn max_curve_constant(base: u64) -> Option<(BigInt, BigInt)> {
    let mut best: Option<(BigInt, BigInt)> = None;
    for a in 1..base.saturating_sub(1) {
        for r in 0..3 {
            let inst = elliptic_params(a, base, r).expect("digit in range");
            let (s, c) = (inst.a0.abs(), inst.curve_constant.abs());
            best = Some(match best {
                None => (s, c),
                Some((bs, bc)) => (bs.max(s), bc.max(c)),
            });
        }
    }
    best
}

/// `2 * 10^17 * b^6 * log n`.
pub fn m_bound(base: u64, n: f64) -> Result<f64> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    if !(n >= 3.0) {
        return Err(Error::InvalidParameter("m_bound needs n >= 3".into()));
    }
    Ok(2e17 * libm::pow(base as f64, 6.0) * libm::log(n))
}

/// `2T log T`: every `n` with `n / log n < T` satisfies `n < 2T log T` (T > 3).
pub fn invert_n_log_n(t: f64) -> Result<f64> {
    if !(t > 3.0) || !t.is_finite() {
        return Err(Error::InvalidParameter("need T > 3".into()));
    }
    Ok(2.0 * t * libm::log(t))
}

/// `2 * 10^18 (log b)^4`, the bound on `n` before it is restated as `10^18 b^4`.
pub fn n_bound_derived(base: u64) -> f64 {
    2e18 * libm::pow(libm::log(base as f64), 4.0)
}

/// `ceil(2 * 10^20 * b^7 * U)` with `U >= ln b` certified to 256 fractional
/// bits; an exact integer upper bound on `log(b^{2 * 10^20 * b^7})`.
pub fn log_d_bound(base: u64) -> BigUint {
    let u = ln_fixed(base, LOG_FIXED_BITS, true);
    let scaled = BigUint::from(2u32) * BigUint::from(10u32).pow(20) * BigUint::from(base).pow(7) * u;
    let unit = BigUint::from(1u32) << LOG_FIXED_BITS;
    let (q, r) = num_integer::Integer::div_rem(&scaled, &unit);
    if r.is_zero() { q } else { q + 1u32 }
}

/// `(10b)^{10^5}` exactly.
pub fn theorem_exponent(base: u64) -> BigUint {
    BigUint::from(10 * base).pow(100_000)
}

/// `mantissa * base^exponent` with the smallest possible integer base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompactPower {
    pub mantissa: u64,
    pub base: u64,
    pub exponent: u64,
}

impl CompactPower {
    /// `value^exponent` rewritten over the smallest integer root of `value`.
    pub fn of_power(value: u64, exponent: u64) -> Self {
        let v = BigUint::from(value);
        for k in (2..=64u32).rev() {
            if value < 2 {
                break;
            }
            let root = v.nth_root(k);
            if root > BigUint::from(1u32) && root.pow(k) == v {
                let root = u64::try_from(root).expect("root below value");
                return CompactPower { mantissa: 1, base: root, exponent: exponent * u64::from(k) };
            }
        }
        CompactPower { mantissa: 1, base: value, exponent }
    }

    pub fn to_biguint(&self) -> BigUint {
        let e = u32::try_from(self.exponent).expect("exponent fits u32");
        BigUint::from(self.mantissa) * BigUint::from(self.base).pow(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub base: u64,
    /// `10^18 b^4`.
    pub n_max: BigUint,
    /// `2 * 10^18 b^4`.
    pub ell_max: BigUint,
    /// `10^20 b^7`.
    pub m_max: BigUint,
    /// `2 * 10^18 (log b)^4`, the sharper value before restating.
    pub n_max_derived: f64,
    /// `2T log T` with `T = 6 * 10^15 (log b)^3`.
    pub n_from_inversion: f64,
    /// `2 * 10^17 b^6 log(n_max_derived)`.
    pub m_from_lemma: f64,
    /// Exact integer `>= 2 * 10^20 b^7 log b`.
    pub log_d_bound: BigUint,
    /// `10^20 b^10`.
    pub log_d_weak: BigUint,
    /// `(10b)^{10^5}`.
    pub theorem_exponent: BigUint,
    pub theorem_compact: CompactPower,
    pub log_fixed_bits: u32,
}

impl BoundReport {
    pub fn n_max_f64(&self) -> f64 {
        to_f64(&self.n_max)
    }

    pub fn ell_max_f64(&self) -> f64 {
        to_f64(&self.ell_max)
    }

    pub fn m_max_f64(&self) -> f64 {
        to_f64(&self.m_max)
    }
}

fn to_f64(n: &BigUint) -> f64 {
    n.to_f64().expect("BigUint converts to f64")
}

pub fn bound_report(base: u64) -> Result<BoundReport> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    let b = BigUint::from(base);
    let ten = BigUint::from(10u32);
    let n_max = ten.pow(18) * b.pow(4);
    let ell_max = &n_max * 2u32;
    let m_max = ten.pow(20) * b.pow(7);
    let lb = libm::log(base as f64);
    let n_max_derived = n_bound_derived(base);
    let n_from_inversion = invert_n_log_n(6e15 * lb * lb * lb)?;
    let m_from_lemma = m_bound(base, n_max_derived)?;
    Ok(BoundReport {
        base,
        n_max,
        ell_max,
        m_max,
        n_max_derived,
        n_from_inversion,
        m_from_lemma,
        log_d_bound: log_d_bound(base),
        log_d_weak: ten.pow(20) * b.pow(10),
        theorem_exponent: theorem_exponent(base),
        theorem_compact: CompactPower::of_power(10 * base, 100_000),
        log_fixed_bits: LOG_FIXED_BITS,
    })
}
