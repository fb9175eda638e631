use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::log::ln_big;
use crate::{Error, Result};

fn ln_abs(n: &BigInt) -> f64 {
    ln_big(n.magnitude())
}

/// Weil height `log max(|p|, |q|)` of a rational `p / q` in lowest terms.
pub fn height_rational(q: &BigRational) -> f64 {
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    if num.is_zero() {
        return 0.0;
    }
    ln_big(core::cmp::max(num, den))
}

/// Absolute logarithmic Weil height from integer minimal-polynomial data
/// `lead X^2 + mid X + tail`: `(log |lead| + sum log max(1, |root|)) / deg`.
///
/// `lead = 0` means the linear polynomial `mid X + tail` (a rational).
/// For a reducible quadratic the result is the mean of the two root heights.
pub fn height_quadratic(lead: &BigInt, mid: &BigInt, tail: &BigInt) -> Result<f64> {
    if lead.is_zero() {
        if mid.is_zero() {
            return Err(Error::InvalidParameter("zero polynomial".into()));
        }
        return Ok(height_rational(&BigRational::new(-tail, mid.clone())));
    }
    let disc = mid * mid - ((lead * tail) << 2u32);
    let a = lead.to_f64().expect("finite");
    let b = mid.to_f64().expect("finite");
    let c = tail.to_f64().expect("finite");
    let mahler_roots = if disc.is_negative() {
        // complex conjugate pair, |root|^2 = tail / lead
        let modulus = libm::sqrt(c / a);
        2.0 * libm::log(modulus.max(1.0))
    } else {
        let sqrt_disc = libm::sqrt(disc.to_f64().expect("finite"));
        let q = -0.5 * (b + libm::copysign(sqrt_disc, b));
        let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q / a, c / q) };
        libm::log(libm::fabs(r1).max(1.0)) + libm::log(libm::fabs(r2).max(1.0))
    };
    Ok(0.5 * (ln_abs(lead) + mahler_roots))
}
