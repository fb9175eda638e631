use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Natural logarithm of a big integer, for values beyond `f64` range too.
///
/// # Panics
///
/// Panics on zero.
pub fn ln_big(n: &BigUint) -> f64 {
    assert!(!n.is_zero(), "ln of zero");
    let bits = n.bits();
    if bits <= 1000 {
        return libm::log(n.to_f64().expect("finite below 2^1000"));
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().expect("64-bit value");
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// `ln(b)` in fixed point with `frac_bits` fractional bits.
///
/// With `round_up` the result `U` satisfies `U >= ln(b) * 2^frac_bits`
/// (every series term rounded up, plus a bound on the truncated tail);
/// otherwise it is a lower bound. The two differ by a few dozen units of the
/// last place.
///
/// Uses `ln b = k ln 2 + ln(b / 2^k)` with `b / 2^k` in `[1, 2)` and
/// `ln y = 2 atanh((y - 1) / (y + 1))`.
pub fn ln_fixed(b: u64, frac_bits: u32, round_up: bool) -> BigUint {
    assert!(b >= 1, "ln of zero");
    let k = 63 - b.leading_zeros();
    let pow2 = 1u128 << k;
    let ln2 = atanh_fixed(1, 3, frac_bits, round_up);
    let rest = atanh_fixed(
        u128::from(b) - pow2,
        u128::from(b) + pow2,
        frac_bits,
        round_up,
    );
    (ln2 * k + rest) << 1u32
}

/// `atanh(p / q)` in fixed point, `0 <= p / q <= 1/3`.
fn atanh_fixed(p: u128, q: u128, frac_bits: u32, round_up: bool) -> BigUint {
    if p == 0 {
        return BigUint::zero();
    }
    debug_assert!(3 * p <= q);
    let scale = BigUint::from(1u32) << frac_bits;
    let p = BigUint::from(p);
    let q = BigUint::from(q);
    let p2 = &p * &p;
    let q2 = &q * &q;
    let mut num = p.clone();
    let mut den = q.clone();
    let mut sum = BigUint::zero();
    let mut i: u32 = 0;
    loop {
        let odd = BigUint::from(2 * i + 1);
        let d = &den * &odd;
        let (t, r) = (&num * &scale).div_rem(&d);
        let term_zero = t.is_zero();
        sum += if round_up && !r.is_zero() { t + 1u32 } else { t };
        num = &num * &p2;
        den = &den * &q2;
        i += 1;
        if term_zero {
            break;
        }
    }
    if round_up {
        // tail after i terms: sum_{j >= i} z^{2j+1}/(2j+1) <= z^{2i+1} / ((2i+1)(1 - z^2)),
        // and 1 / (1 - z^2) <= 9/8 for z <= 1/3
        let d = &den * BigUint::from(2 * i + 1) * 8u32;
        let (t, r) = (&num * &scale * 9u32).div_rem(&d);
        sum += if r.is_zero() { t } else { t + 1u32 };
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_logs() {
        assert!((ln_big(&BigUint::from(1u32))).abs() < 1e-15);
        let e30 = BigUint::from(10u32).pow(30);
        assert!((ln_big(&e30) - 30.0 * core::f64::consts::LN_10).abs() < 1e-12);
        let huge = BigUint::from(10u32).pow(2000);
        let expect = 2000.0 * core::f64::consts::LN_10;
        assert!((ln_big(&huge) - expect).abs() / expect < 1e-14);
    }

    #[test]
    fn fixed_point_brackets_float() {
        let bits = 64;
        for b in [1u64, 2, 3, 7, 10, 100, 1023, 1024, 9999, 10_000] {
            let up = ln_fixed(b, bits, true).to_f64().unwrap();
            let lo = ln_fixed(b, bits, false).to_f64().unwrap();
            let exact = libm::log(b as f64) * 2f64.powi(bits as i32);
            assert!(lo <= up);
            assert!((up - exact).abs() <= exact * 1e-14 + 1.0, "b = {b}");
            assert!((lo - exact).abs() <= exact * 1e-14 + 1.0, "b = {b}");
        }
    }

    #[test]
    fn fixed_point_interval_is_tight() {
        let up = ln_fixed(10, 256, true);
        let lo = ln_fixed(10, 256, false);
        assert!(up >= lo);
        assert!(&up - &lo < BigUint::from(1000u32));
    }
}
