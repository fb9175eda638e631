//! Solutions of `X^2 - d Y^2 = 1`.
//!
//! Everything here is exact. The fundamental solution comes from the
//! periodic continued fraction of `sqrt(d)` (integer-only PQa iteration) and
//! the n-th solution from the linear recurrences
//! `X_{k+1} = 2 X_1 X_k - X_{k-1}`, `Y_{k+1} = 2 X_1 Y_k - Y_{k-1}`.

use alloc::format;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// `true` iff `n` is a perfect square.
pub fn is_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// One positive solution `(X_n, Y_n)` of `X^2 - d Y^2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellPair {
    pub d: BigUint,
    pub n: u64,
    pub x: BigUint,
    pub y: BigUint,
}

impl PellPair {
    /// Checks `X^2 - d Y^2 = 1`, `X >= 2`, `Y >= 1`.
    pub fn is_valid(&self) -> bool {
        self.x >= BigUint::from(2u32)
            && !self.y.is_zero()
            && &self.x * &self.x == &self.d * &self.y * &self.y + 1u32
    }
}

/// The generator `(X_1, Y_1)` of a Pell sequence.
///
/// Usually built by [`fundamental_solution`], but any solution can seed an
/// orbit (see [`PellOrbit::from_seed`]); the recurrences only depend on `X_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellOrbit {
    d: BigUint,
    x1: BigUint,
    y1: BigUint,
}

impl PellOrbit {
    /// Orbit generated by an arbitrary positive solution `(x, y)`.
    pub fn from_solution(d: BigUint, x: BigUint, y: BigUint) -> Result<Self> {
        if d < BigUint::from(2u32) {
            return Err(Error::ModulusTooSmall);
        }
        if is_square(&d) {
            return Err(Error::SquareModulus(d));
        }
        let pair = PellPair { d, n: 1, x, y };
        if !pair.is_valid() {
            return Err(Error::NotASolution { d: pair.d, x: pair.x, y: pair.y });
        }
        Ok(PellOrbit { d: pair.d, x1: pair.x, y1: pair.y })
    }

    /// Orbit seeded at `(x, 1)` with `d = x^2 - 1`.
    ///
    /// `d` need not be squarefree and `(x, 1)` need not be the fundamental
    /// solution of its squarefree core.
    pub fn from_seed(x: BigUint) -> Result<Self> {
        if x < BigUint::from(2u32) {
            return Err(Error::InvalidParameter(format!("seed X = {x} must be at least 2")));
        }
        let d = &x * &x - 1u32;
        Ok(PellOrbit { d, x1: x, y1: BigUint::one() })
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn x1(&self) -> &BigUint {
        &self.x1
    }

    pub fn y1(&self) -> &BigUint {
        &self.y1
    }

    /// `(X_n, Y_n)` for `n >= 1`.
    pub fn nth_solution(&self, n: u64) -> Result<PellPair> {
        if n == 0 {
            return Err(Error::ZeroIndex);
        }
        let mut it = self.solutions();
        let mut pair = it.next().expect("orbit iterator is infinite");
        while pair.n < n {
            pair = it.next().expect("orbit iterator is infinite");
        }
        Ok(pair)
    }

    /// `X_n` only; avoids computing the `Y` sequence.
    pub fn x_at(&self, n: u64) -> BigUint {
        let two_x1 = &self.x1 << 1u32;
        let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
        if n == 0 {
            return prev;
        }
        cur.clone_from(&self.x1);
        for _ in 1..n {
            let next = &two_x1 * &cur - &prev;
            prev = core::mem::replace(&mut cur, next);
        }
        cur
    }

    /// All solutions `(X_1, Y_1), (X_2, Y_2), ...` in increasing order.
    pub fn solutions(&self) -> Solutions<'_> {
        Solutions {
            orbit: self,
            n: 0,
            x: (BigUint::zero(), BigUint::one()),
            y: (BigUint::zero(), BigUint::zero()),
        }
    }
}

/// Iterator over the solutions of an orbit; see [`PellOrbit::solutions`].
#[derive(Debug, Clone)]
pub struct Solutions<'a> {
    orbit: &'a PellOrbit,
    n: u64,
    // (previous, current)
    x: (BigUint, BigUint),
    y: (BigUint, BigUint),
}

impl Iterator for Solutions<'_> {
    type Item = PellPair;

    fn next(&mut self) -> Option<PellPair> {
        if self.n == 0 {
            self.x = (BigUint::one(), self.orbit.x1.clone());
            self.y = (BigUint::zero(), self.orbit.y1.clone());
        } else {
            let two_x1 = &self.orbit.x1 << 1u32;
            let nx = &two_x1 * &self.x.1 - &self.x.0;
            let ny = &two_x1 * &self.y.1 - &self.y.0;
            self.x.0 = core::mem::replace(&mut self.x.1, nx);
            self.y.0 = core::mem::replace(&mut self.y.1, ny);
        }
        self.n += 1;
        Some(PellPair {
            d: self.orbit.d.clone(),
            n: self.n,
            x: self.x.1.clone(),
            y: self.y.1.clone(),
        })
    }
}

/// Minimal positive solution of `X^2 - d Y^2 = 1`.
///
/// Runs the PQa recurrence on `sqrt(d)`; the period closes when `Q_k = 1`,
/// at which point `h_{k-1}^2 - d k_{k-1}^2 = (-1)^k`. For odd periods the
/// expansion is followed for a second period.
pub fn fundamental_solution(d: &BigUint) -> Result<PellOrbit> {
    if *d < BigUint::from(2u32) {
        return Err(Error::ModulusTooSmall);
    }
    let a0 = d.sqrt();
    if &a0 * &a0 == *d {
        return Err(Error::SquareModulus(d.clone()));
    }

    let mut p = BigUint::zero();
    let mut q = BigUint::one();
    // convergents h_{k-2}, h_{k-1} and k_{k-2}, k_{k-1}
    let (mut h_prev, mut h) = (BigUint::one(), a0.clone());
    let (mut k_prev, mut k) = (BigUint::zero(), BigUint::one());
    let mut step: u64 = 0;
    loop {
        let a = (&a0 + &p) / &q;
        p = &a * &q - &p;
        q = (d - &p * &p) / &q;
        let a_next = (&a0 + &p) / &q;
        step += 1;
        if q.is_one() && step.is_even() {
            debug_assert!(&h * &h == d * &k * &k + 1u32);
            return Ok(PellOrbit { d: d.clone(), x1: h, y1: k });
        }
        let h_next = &a_next * &h + &h_prev;
        let k_next = &a_next * &k + &k_prev;
        h_prev = core::mem::replace(&mut h, h_next);
        k_prev = core::mem::replace(&mut k, k_next);
    }
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// Exponent of the prime `p` in `k`.
pub fn nu_p(k: &BigInt, p: u64) -> Result<u32> {
    if k.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigUint::from(p);
    let mut rest = k.abs().to_biguint().expect("absolute value is nonnegative");
    let mut e = 0;
    loop {
        let (quot, rem) = rest.div_rem(&p);
        if !rem.is_zero() {
            return Ok(e);
        }
        rest = quot;
        e += 1;
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn seeded_orbits_solve_pell(seed in 2u64..1_000_000, n in 1u64..12) {
            let orbit = PellOrbit::from_seed(BigUint::from(seed)).unwrap();
            let pair = orbit.nth_solution(n).unwrap();
            prop_assert!(pair.is_valid());
            prop_assert_eq!(orbit.x_at(n), pair.x);
        }

        #[test]
        fn fundamental_is_valid_and_increasing(d in 2u64..2000) {
            let db = BigUint::from(d);
            prop_assume!(!is_square(&db));
            let orbit = fundamental_solution(&db).unwrap();
            let pairs: alloc::vec::Vec<PellPair> = orbit.solutions().take(6).collect();
            prop_assert!(pairs.iter().all(PellPair::is_valid));
            prop_assert!(pairs.windows(2).all(|w| w[0].x < w[1].x && w[0].y < w[1].y));
        }

        #[test]
        fn nu_p_counts_factors(k in 1i64..1_000_000, e in 0u32..20) {
            let v = BigInt::from(k) << e;
            prop_assert_eq!(nu_p(&v, 2).unwrap(), e + k.trailing_zeros());
        }
    }
}
