//! Upper bounds for the p-adic valuation (Yu) and lower bounds for the
//! absolute value (Matveev) of `Lambda = d_1^{b_1} ... d_t^{b_t} - 1`.

use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Folded constant standing in front of `b^4 (log b)^2 log n` in the bound on `m`.
pub const YU_FOLDED_CONSTANT: f64 = 1.3e17;

#[derive(Debug, Clone, PartialEq)]
pub struct YuParams {
    /// Number of terms `t`.
    pub terms: u32,
    /// Degree `D` of the number field.
    pub degree: u32,
    /// Rational prime `p` below the prime ideal.
    pub prime: u64,
    pub ramification: u32,
    pub residue_degree: u32,
    /// `H_i >= max(h(d_i), log p)`.
    pub heights: Vec<f64>,
    /// `B >= max |b_i|`.
    pub exponent_bound: f64,
}

impl YuParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("Yu parameters: {msg}")));
        if self.terms == 0 || self.degree == 0 {
            return bad("t and D must be positive");
        }
        if !is_prime(self.prime) {
            return Err(Error::NotPrime(self.prime));
        }
        if self.ramification == 0 || self.ramification > self.degree {
            return bad("need 1 <= e_pi <= D");
        }
        if self.residue_degree == 0 || self.residue_degree > self.degree {
            return bad("need 1 <= f_pi <= D");
        }
        if self.heights.len() != self.terms as usize {
            return bad("one height per term");
        }
        // f64 rounding of log p must not reject H = log p itself
        let log_p = libm::log(self.prime as f64);
        if self.heights.iter().any(|h| !h.is_finite() || *h < log_p * (1.0 - 1e-15)) {
            return bad("each H_i must be at least log p");
        }
        if !(self.exponent_bound >= 2.0) || !self.exponent_bound.is_finite() {
            return bad("B must be at least 2");
        }
        Ok(())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|f| f * f <= p).all(|f| !p.is_multiple_of(f))
}

/// Natural log of the valuation bound, so huge parameters cannot overflow.
pub fn yu_bound_log(params: &YuParams) -> Result<f64> {
    params.validate()?;
    let t = f64::from(params.terms);
    let d = f64::from(params.degree);
    let e = f64::from(params.ramification);
    let f = f64::from(params.residue_degree);
    let log_p = libm::log(params.prime as f64);
    let mut acc = libm::log(19.0)
        + 2.0 * (t + 1.0) * libm::log(20.0 * libm::sqrt(t + 1.0) * d)
        + (t - 1.0) * libm::log(e)
        + f * log_p
        - 2.0 * libm::log(f * log_p)
        + libm::log(5.0 + libm::log(t * d))
        + libm::log(libm::log(params.exponent_bound));
    for h in &params.heights {
        acc += libm::log(*h);
    }
    Ok(acc)
}

/// `19 (20 sqrt(t+1) D)^{2(t+1)} e^{t-1} p^f / (f log p)^2 log(e^5 t D) H_1...H_t log B`.
pub fn yu_bound(params: &YuParams) -> Result<f64> {
    yu_bound_log(params).map(libm::exp)
}

/// Yu's bound with `t = 2`, `D = 4`, `B = n`, `H_1 = H_2 = 4 log b`.
pub fn yu_specialized(base: u64, n: f64, prime: u64, ramification: u32, residue_degree: u32) -> Result<f64> {
    let h = 4.0 * libm::log(base as f64);
    yu_bound(&YuParams {
        terms: 2,
        degree: 4,
        prime,
        ramification,
        residue_degree,
        heights: alloc::vec![h, h],
        exponent_bound: n,
    })
}

/// The coefficient of `b^4 (log b)^2 log n` obtained by folding
/// `e_pi, f_pi <= 4`, `p^f <= b^4`, `f log p >= log 2` and `H = 4 log b`
/// into the `t = 2`, `D = 4` bound. Comes out just under [`YU_FOLDED_CONSTANT`].
pub fn yu_folded_coefficient() -> f64 {
    let ln2 = core::f64::consts::LN_2;
    19.0 * libm::pow(20.0 * libm::sqrt(3.0) * 4.0, 6.0) * 4.0 / (ln2 * ln2)
        * libm::log(8.0 * libm::exp(5.0))
        * 16.0
}

/// `1.3e17 b^4 (log b)^2 log n + 16 log n`.
pub fn yu_folded_m_bound(base: u64, n: f64) -> f64 {
    let lb = libm::log(base as f64);
    let ln = libm::log(n);
    YU_FOLDED_CONSTANT * libm::pow(base as f64, 4.0) * lb * lb * ln + 16.0 * ln
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatveevParams {
    pub terms: u32,
    pub degree: u32,
    pub exponent_bound: f64,
    /// `H_i >= max(D h(d_i), |log d_i|, 0.16)`.
    pub heights: Vec<f64>,
}

impl MatveevParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("Matveev parameters: {msg}")));
        if self.terms == 0 || self.degree == 0 {
            return bad("t and D must be positive");
        }
        if self.heights.len() != self.terms as usize {
            return bad("one height per term");
        }
        if self.heights.iter().any(|h| !h.is_finite() || *h < 0.16) {
            return bad("each H_i must be at least 0.16");
        }
        if !(self.exponent_bound >= 1.0) || !self.exponent_bound.is_finite() {
            return bad("B must be at least 1");
        }
        Ok(())
    }
}

/// `-1.4 * 30^{t+3} * t^{4.5} * D^2 (1 + log D)(1 + log B) H_1...H_t`, a lower
/// bound for `log |Lambda|`.
pub fn matveev_lower(params: &MatveevParams) -> Result<f64> {
    params.validate()?;
    let t = f64::from(params.terms);
    let d = f64::from(params.degree);
    let prod: f64 = params.heights.iter().product();
    Ok(-1.4
        * libm::pow(30.0, t + 3.0)
        * libm::pow(t, 4.5)
        * d
        * d
        * (1.0 + libm::log(d))
        * (1.0 + libm::log(params.exponent_bound))
        * prod)
}

/// Coefficient `c` in `n - 2 <= c (1 + log 2mn) (log b)^2` from the
/// `t = 3`, `D = 2`, `H = (4 log b, 2 log b, log alpha)` instance; below `10^13`.
pub fn matveev_n_coefficient() -> f64 {
    1.4 * libm::pow(30.0, 6.0) * libm::pow(3.0, 4.5) * 4.0 * (1.0 + core::f64::consts::LN_2) * 8.0
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn yu_monotone(h1 in 0.7f64..50.0, h2 in 0.7f64..50.0, dh in 0.0f64..10.0, b in 2.0f64..1e12, db in 0.0f64..1e6) {
            let p = |h1, b| YuParams {
                terms: 2, degree: 4, prime: 2, ramification: 1, residue_degree: 1,
                heights: Vec::from([h1, h2]), exponent_bound: b,
            };
            let base = yu_bound(&p(h1, b)).unwrap();
            prop_assert!(yu_bound(&p(h1 + dh, b)).unwrap() >= base);
            prop_assert!(yu_bound(&p(h1, b + db)).unwrap() >= base);
        }

        #[test]
        fn matveev_magnitude_monotone(h in 0.16f64..50.0, dh in 0.0f64..10.0, b in 1.0f64..1e12, db in 0.0f64..1e6) {
            let p = |h, b| MatveevParams { terms: 2, degree: 2, exponent_bound: b, heights: Vec::from([h, 1.0]) };
            let base = matveev_lower(&p(h, b)).unwrap().abs();
            prop_assert!(matveev_lower(&p(h + dh, b)).unwrap().abs() >= base);
            prop_assert!(matveev_lower(&p(h, b + db)).unwrap().abs() >= base);
        }
    }
}
