//! Congruences for odd indices, all in exact integer or rational arithmetic.
//!
//! With `X_1 = a (b^m - 1)/(b - 1)` the first-order Taylor expansion of `P_n`
//! around `t = -a/(b - 1)` is exact modulo `b^{2m}`, because the step
//! `(a/(b - 1)) b^m` squares to a multiple of `b^{2m}`. The unit
//! `beta = x + sqrt(x^2 - 1)`, `x = -a/(b - 1)`, is handled through integer
//! coordinates of `(b - 1) beta = -a + sqrt(a^2 - (b - 1)^2)`.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Finding, VerifyError, VerifyReport};
use crate::chebyshev::{chebyshev_mod, coefficients, derivative_poly, eval_poly, value_and_derivative};
use crate::pell::PellOrbit;
use crate::quadratic::QuadInt;
use crate::repdigit::{as_repdigit, repunit};

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorReport {
    /// `b^{2m}`.
    pub modulus: BigInt,
    /// `X_n mod b^{2m}`.
    pub residue: BigInt,
    /// `P_n(t) + P_n'(t) (a/(b-1)) b^m mod b^{2m}`.
    pub predicted: BigInt,
    /// Whether the `a = b - 1` form `-1 + n^2 b^m` was also checked.
    pub max_digit_form: bool,
}

/// Checks `X_n = P_n(t) + P_n'(t) (a/(b-1)) b^m (mod b^{2m})` on the orbit
/// seeded at `X_1 = a (b^m - 1)/(b - 1)`, plus `X_n = -1 + n^2 b^m` when
/// `a = b - 1` and `X_n = -c/(b - 1) (mod b^m)` when `c_expected` is given.
pub fn taylor_congruence_check(
    base: u64,
    digit: u64,
    len: u32,
    n: u64,
    c_expected: Option<u64>,
) -> Result<TaylorReport, VerifyError> {
    if base < 2 || digit == 0 || len == 0 || n.is_multiple_of(2) {
        return Err(VerifyError::Precondition(format!(
            "need b >= 2, a >= 1, m >= 1, odd n (b={base}, a={digit}, m={len}, n={n})"
        )));
    }
    let x1 = repunit(base, len) * digit;
    let orbit = PellOrbit::from_seed(x1).map_err(|e| VerifyError::Precondition(format!("{e}")))?;
    let b = BigInt::from(base);
    let bm = b.pow(len);
    let modulus = &bm * &bm;
    let inv = mod_inverse(&BigInt::from(base - 1), &modulus).expect("b - 1 and b are coprime");
    let a_inv = (BigInt::from(digit) * &inv).mod_floor(&modulus);
    let t = (-&a_inv).mod_floor(&modulus);
    let step = (&a_inv * &bm).mod_floor(&modulus);

    let residue = BigInt::from(orbit.x_at(n)).mod_floor(&modulus);
    let (p, dp) = chebyshev_mod(n, &t, &modulus);
    let predicted = (p + dp * step).mod_floor(&modulus);
    let fail = |msg: String| {
        VerifyError::Falsified(
            Finding::falsified("taylor-congruence", msg)
                .with("b", base)
                .with("a", digit)
                .with("m", len)
                .with("n", n),
        )
    };
    if residue != predicted {
        return Err(fail(format!("X_n = {residue} but expansion gives {predicted} mod b^2m")));
    }
    let max_digit_form = digit == base - 1;
    if max_digit_form {
        let n2 = BigInt::from(n) * BigInt::from(n);
        let shifted = (n2 * &bm - BigInt::one()).mod_floor(&modulus);
        if residue != shifted {
            return Err(fail(format!("a = b - 1 but X_n != -1 + n^2 b^m (got {residue})")));
        }
    }
    if let Some(c) = c_expected {
        let target = (-(BigInt::from(c) * &inv)).mod_floor(&bm);
        if residue.mod_floor(&bm) != target {
            return Err(fail(format!("X_n != -{c}/(b - 1) mod b^m")));
        }
    }
    Ok(TaylorReport { modulus, residue, predicted, max_digit_form })
}

/// `Q_n(0) = P_n(-1) = (-1)^n` and `Q_n'(0) = P_n'(-1) = (-1)^{n+1} n^2`,
/// evaluated from the integer coefficient vector of `P_n` (independent of
/// the value recurrence). For odd `n` these read `-1` and `n^2`.
pub fn shifted_chebyshev_check(n_max: u64) -> VerifyReport {
    let mut report = VerifyReport::new("shifted-chebyshev");
    let minus_one = BigInt::from(-1);
    for n in 1..=n_max {
        let coeffs = coefficients(n);
        let q0 = eval_poly(&coeffs, &minus_one);
        let dq0 = eval_poly(&derivative_poly(&coeffs), &minus_one);
        let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let (want_q, want_dq) = (-&sign, &sign * BigInt::from(n) * BigInt::from(n));
        report.record(if q0 == want_q && dq0 == want_dq {
            Ok(())
        } else {
            Err(Finding::falsified("shifted-chebyshev", "Q_n(0) or Q_n'(0) off")
                .with("n", n)
                .with("q0", &q0)
                .with("dq0", &dq0))
        });
    }
    report
}

/// Why the system `beta^{-n} = beta^n = gamma^{+-1}` has no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma3Outcome {
    /// `beta^n != beta^{-n}`.
    NotSelfInverse,
    /// `beta^n = beta^{-n} = 1` but `gamma^{+-1} != 1`.
    GammaMismatch,
}

impl Lemma3Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Lemma3Outcome::NotSelfInverse => "beta^n != beta^-n",
            Lemma3Outcome::GammaMismatch => "gamma != beta^n",
        }
    }
}

/// Decides exactly that `beta^{-n} = beta^n = gamma^i`, `i = +-1`, has no
/// solution for `1 <= a < b - 1`, `1 <= c <= (b - 1)^2`, odd `n`.
///
/// `beta^{-n}` is the conjugate of `beta^n`, so the first equation holds iff
/// the `sqrt` coordinate of `(-a + sqrt(a^2 - (b-1)^2))^n` vanishes. The
/// root-of-unity argument predicts that this only happens for
/// `2a = b - 1` with `beta^n = 1`; that prediction is checked too.
pub fn lemma3_check(digit: u64, c: u64, base: u64, n: u64) -> Result<Lemma3Outcome, VerifyError> {
    let max_c = u128::from(base.saturating_sub(1)).pow(2);
    if base < 3 || digit == 0 || digit >= base - 1 || c == 0 || u128::from(c) > max_c || n.is_multiple_of(2) {
        return Err(VerifyError::Precondition(format!(
            "need 1 <= a < b - 1, 1 <= c <= (b-1)^2, odd n (a={digit}, c={c}, b={base}, n={n})"
        )));
    }
    let bm1 = BigInt::from(base - 1);
    let disc = BigInt::from(digit).pow(2) - bm1.pow(2);
    let w = QuadInt::new(-BigInt::from(digit), 1).pow(n, &disc);
    let fail = |msg: &str| {
        VerifyError::Falsified(
            Finding::falsified("lemma3-system", msg)
                .with("a", digit)
                .with("c", c)
                .with("b", base)
                .with("n", n),
        )
    };
    if !w.im.is_zero() {
        return Ok(Lemma3Outcome::NotSelfInverse);
    }
    // beta^{2n} = 1 with beta non-real forces order 3 or 6, i.e. x = -1/2
    if 2 * digit != base - 1 {
        return Err(fail("beta^n = beta^-n outside the order-3 case"));
    }
    let denom = bm1.pow(n as u32);
    if w.re != denom {
        return Err(fail("beta^n = beta^-n but beta^n != 1"));
    }
    // gamma = (-c + sqrt(c^2 - (b-1)^2)) / (b - 1); gamma^{+-1} = 1 needs a rational root
    let disc_c = BigInt::from(c).pow(2) - bm1.pow(2);
    if !disc_c.is_negative() {
        let s = disc_c.sqrt();
        if &s * &s == disc_c {
            for root in [-BigInt::from(c) + &s, -BigInt::from(c) - &s] {
                if root == bm1 {
                    return Err(fail("gamma^{+-1} = 1 = beta^n"));
                }
            }
        }
    }
    Ok(Lemma3Outcome::GammaMismatch)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValuationRoute {
    /// `a = b - 1`: forces `c = b - 1` and `b^m | n^2`.
    MaxDigit,
    /// `b^m` divides the numerator of `P_n(-a/(b-1)) + c/(b-1)` and
    /// `(beta^n - gamma)(beta^n - gamma^{-1})`.
    Quotient,
    /// The quotient vanishes; `b^m` divides `P_n'(-a/(b-1))` and
    /// `n (beta^n - beta^{-n})`.
    Derivative,
}

impl ValuationRoute {
    pub fn label(&self) -> &'static str {
        match self {
            ValuationRoute::MaxDigit => "max-digit",
            ValuationRoute::Quotient => "quotient",
            ValuationRoute::Derivative => "derivative",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationReport {
    pub route: ValuationRoute,
    /// `l` with `X_n = c (b^{ml} - 1)/(b - 1)`.
    pub ell: u32,
    /// The rational whose numerator is tested.
    pub quantity: BigRational,
    /// Coordinates of `(b-1)^{2n} (beta^n - gamma)(beta^n - gamma^{-1})`
    /// (quotient route) or `(b-1)^n n (beta^n - beta^{-n}) / (2 sqrt D)`
    /// (derivative route, real part zero).
    pub field_coords: QuadInt,
}

/// Checks the divisibility consequences of a reduced instance:
/// `X_1 = a R_m` (`a <= (b-1)^2`) and `X_n = c R_{ml}` (`c <= b - 1`) on the
/// orbit seeded at `X_1`, `n > 1` odd.
pub fn valuation_divisibility_check(
    base: u64,
    digit: u64,
    c: u64,
    n: u64,
    len: u32,
) -> Result<ValuationReport, VerifyError> {
    let max_a = u128::from(base.saturating_sub(1)).pow(2);
    if base < 2 || digit == 0 || u128::from(digit) > max_a || c == 0 || c >= base || len == 0 || n < 3 || n.is_multiple_of(2) {
        return Err(VerifyError::Precondition(format!(
            "need 1 <= a <= (b-1)^2, 1 <= c <= b-1, m >= 1, odd n >= 3 (a={digit}, c={c}, b={base}, m={len}, n={n})"
        )));
    }
    let x1 = repunit(base, len) * digit;
    let orbit = PellOrbit::from_seed(x1).map_err(|e| VerifyError::Precondition(format!("{e}")))?;
    let x_n = orbit.x_at(n);
    let ell = match as_repdigit(&x_n, base) {
        Some(f) if f.digit == c && f.len % len == 0 => f.len / len,
        _ => {
            return Err(VerifyError::Precondition(format!(
                "X_{n} = {x_n} is not {c} (b^(m l) - 1)/(b - 1) for any l"
            )))
        }
    };

    let b = BigInt::from(base);
    let bm = b.pow(len);
    let bm1 = BigInt::from(base - 1);
    let fail = |check: &'static str, msg: &str| {
        VerifyError::Falsified(
            Finding::falsified(check, msg)
                .with("b", base)
                .with("a", digit)
                .with("c", c)
                .with("m", len)
                .with("n", n),
        )
    };

    let x = BigRational::new(-BigInt::from(digit), bm1.clone());
    let (p, dp) = value_and_derivative(n, &x, |v| v);
    let quantity = p + BigRational::new(BigInt::from(c), bm1.clone());

    if digit == base - 1 {
        if c != base - 1 {
            return Err(fail("max-digit-case", "a = b - 1 forces c = b - 1"));
        }
        let n2 = BigInt::from(n) * BigInt::from(n);
        if !n2.is_multiple_of(&bm) {
            return Err(fail("max-digit-case", "b^m does not divide n^2"));
        }
        return Ok(ValuationReport {
            route: ValuationRoute::MaxDigit,
            ell,
            quantity,
            field_coords: QuadInt::from_int(n2),
        });
    }

    let disc = BigInt::from(digit).pow(2) - bm1.pow(2);
    let w_n = QuadInt::new(-BigInt::from(digit), 1).pow(n, &disc);
    let bm1_n = bm1.pow(n as u32);

    if !quantity.is_zero() {
        if !quantity.numer().is_multiple_of(&bm) {
            return Err(fail("quotient-divisibility", "b^m does not divide the numerator"));
        }
        // (b-1)^{2n} (beta^{2n} + 2c/(b-1) beta^n + 1), from the product form
        let w_2n = w_n.mul(&w_n, &disc);
        let middle = w_n.scale(&(BigInt::from(2 * c) * bm1.pow(n as u32 - 1)));
        let product = w_2n.add(&middle).add(&QuadInt::from_int(&bm1_n * &bm1_n));
        // 2 beta^n (P_n(x) + c/(b-1)), scaled the same way
        let scaled = &quantity * BigRational::from_integer(BigInt::from(2) * &bm1_n);
        if !scaled.is_integer() || product != w_n.scale(&scaled.to_integer()) {
            return Err(fail("quotient-divisibility", "product form disagrees with 2 beta^n (P_n + c/(b-1))"));
        }
        if !product.divisible_by(&bm) {
            return Err(fail("quotient-divisibility", "b^m does not divide (beta^n - gamma)(beta^n - gamma^-1)"));
        }
        return Ok(ValuationReport { route: ValuationRoute::Quotient, ell, quantity, field_coords: product });
    }

    // derivative route: n V_n = P_n'(x) (b-1)^{n-1}
    let nv = &w_n.im * BigInt::from(n);
    let scaled = &dp * BigRational::from_integer(bm1.pow(n as u32 - 1));
    if !scaled.is_integer() || scaled.to_integer() != nv {
        return Err(fail("derivative-divisibility", "n V_n != P_n'(x) (b-1)^(n-1)"));
    }
    let a_coprime = BigInt::from(digit).gcd(&b).is_one();
    if ell >= 2 && a_coprime {
        if !dp.numer().is_multiple_of(&bm) || !nv.is_multiple_of(&bm) {
            return Err(fail("derivative-divisibility", "b^m does not divide P_n'(x) or n (beta^n - beta^-n)"));
        }
    } else {
        // only b^m | a P_n'(t) - c [l = 1] survives for small cases
        let rhs = if ell == 1 { BigInt::from(c) } else { BigInt::zero() };
        let lhs = BigRational::from_integer(BigInt::from(digit)) * &dp
            - BigRational::new(rhs, bm1.clone());
        if !lhs.numer().is_multiple_of(&bm) {
            return Err(fail("derivative-divisibility", "b^m does not divide a P_n'(x) - c [l = 1]/(b-1)"));
        }
    }
    Ok(ValuationReport {
        route: ValuationRoute::Derivative,
        ell,
        quantity,
        field_coords: QuadInt::new(BigInt::zero(), nv),
    })
}
