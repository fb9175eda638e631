//! Chebyshev polynomials `P_n` of the first kind, normalized so that
//! `P_n(X_1) = X_n` along every Pell orbit.
//!
//! Values are produced by the linear recurrence
//! `P_{k+1} = 2x P_k - P_{k-1}` together with its derivative
//! `P'_{k+1} = 2 P_k + 2x P'_k - P'_{k-1}`, so evaluation stays exact over
//! any commutative ring: integers, rationals, or `Z / M`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `(P_n(x), P_n'(x))` over any ring, with `reduce` applied after each step.
pub fn value_and_derivative<T, R>(n: u64, x: &T, reduce: R) -> (T, T)
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
    R: Fn(T) -> T,
{
    let two_x = reduce(x.clone() + x.clone());
    let (mut p_prev, mut p) = (T::one(), reduce(x.clone()));
    let (mut d_prev, mut d) = (T::zero(), T::one());
    if n == 0 {
        return (p_prev, d_prev);
    }
    for _ in 1..n {
        let p_next = reduce(two_x.clone() * p.clone() - p_prev);
        let d_next = reduce(p.clone() + p.clone() + two_x.clone() * d.clone() - d_prev);
        p_prev = core::mem::replace(&mut p, p_next);
        d_prev = core::mem::replace(&mut d, d_next);
    }
    (p, d)
}

pub fn chebyshev_p(n: u64, x: &BigRational) -> BigRational {
    value_and_derivative(n, x, |v| v).0
}

pub fn chebyshev_p_prime(n: u64, x: &BigRational) -> BigRational {
    value_and_derivative(n, x, |v| v).1
}

pub fn chebyshev_p_int(n: u64, x: &BigInt) -> BigInt {
    value_and_derivative(n, x, |v| v).0
}

/// `(P_n(x) mod M, P_n'(x) mod M)` with both residues in `[0, M)`.
pub fn chebyshev_mod(n: u64, x: &BigInt, modulus: &BigInt) -> (BigInt, BigInt) {
    let reduce = |v: BigInt| v.mod_floor(modulus);
    value_and_derivative(n, &reduce(x.clone()), reduce)
}

/// Integer coefficients of `P_n`, constant term first.
pub fn coefficients(n: u64) -> Vec<BigInt> {
    let mut prev = vec![BigInt::one()];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c << 1u32;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// Horner evaluation of an integer polynomial (constant term first).
pub fn eval_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn derivative_poly(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(chebyshev_p(2, &rat(3, 1)), rat(17, 1));
        assert_eq!(chebyshev_p(3, &rat(-1, 2)), rat(1, 1));
        assert_eq!(chebyshev_p(0, &rat(5, 7)), rat(1, 1));
        for n in 0..20 {
            assert_eq!(chebyshev_p(n, &rat(1, 1)), rat(1, 1));
        }
    }

    #[test]
    fn derivatives() {
        for x in [rat(0, 1), rat(-4, 9), rat(11, 3)] {
            assert_eq!(chebyshev_p_prime(1, &x), rat(1, 1));
        }
        assert_eq!(chebyshev_p_prime(2, &rat(3, 1)), rat(12, 1));
        assert_eq!(chebyshev_p_prime(0, &rat(3, 1)), rat(0, 1));
    }

    #[test]
    fn shifted_derivative_at_zero_is_n_squared() {
        // Q_n(Y) = P_n(Y - 1); Q_n'(0) = P_n'(-1) = n^2 for odd n
        for n in 1..=10u64 {
            let d = chebyshev_p_prime(n, &rat(-1, 1));
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(d, rat(sign * (n * n) as i64, 1), "n = {n}");
        }
    }

    #[test]
    fn coefficient_route_matches_recurrence() {
        for n in 0..15u64 {
            let c = coefficients(n);
            let dc = derivative_poly(&c);
            for x in -4i64..=4 {
                let xb = BigInt::from(x);
                let (p, dp) = value_and_derivative(n, &xb, |v| v);
                assert_eq!(eval_poly(&c, &xb), p);
                assert_eq!(eval_poly(&dc, &xb), dp);
            }
        }
        assert_eq!(coefficients(3), vec![0.into(), BigInt::from(-3), 0.into(), 4.into()]);
    }

    #[test]
    fn modular_matches_integer() {
        let m = BigInt::from(10_000);
        for n in 0..12u64 {
            for x in [-7i64, -1, 0, 3, 99, 12345] {
                let xb = BigInt::from(x);
                let (p, d) = value_and_derivative(n, &xb, |v| v);
                let (pm, dm) = chebyshev_mod(n, &xb, &m);
                assert_eq!(pm, p.mod_floor(&m));
                assert_eq!(dm, d.mod_floor(&m));
            }
        }
    }
}
