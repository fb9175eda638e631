//! Even indices: `X_{2k} = 2 X_k^2 - 1` and the three-way case split.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Finding, VerifyError, VerifyReport};
use crate::pell::{fundamental_solution, is_square, nu_p, PellOrbit};
use crate::repdigit::repunit;
use crate::{Error, Result};

/// Trial-division limit for prime-set comparisons; cofactors above its square
/// are left undecided by [`prime_factor_set`].
pub const TRIAL_LIMIT: u32 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvenBranch {
    /// `a < b - 1`: reduces to integer points on a Mordell curve.
    SmallDigit,
    /// `a = b - 1`, `m = 1`: then `d < b`.
    SingleMaxDigit,
    /// `a = b - 1`, `m > 1`: `b` even and `2 X_{n/2}^2 = b^m`.
    PowerOfBase,
}

impl EvenBranch {
    pub fn label(&self) -> &'static str {
        match self {
            EvenBranch::SmallDigit => "i",
            EvenBranch::SingleMaxDigit => "ii",
            EvenBranch::PowerOfBase => "iii",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCaseClassification {
    pub branch: EvenBranch,
    /// `n_1 = n / 2`.
    pub half_index: u64,
    /// `X_{n_1}`.
    pub x_half: BigUint,
    /// For the power-of-base branch: `floor((m - 1) / 2)`, the power of two
    /// shown to divide `X_1`.
    pub two_power: Option<u32>,
}

/// Classifies a solution `X_n = a (b^m - 1)/(b - 1)` with `n` even.
pub fn classify_even_solution(
    orbit: &PellOrbit,
    n: u64,
    digit: u64,
    len: u32,
    base: u64,
) -> Result<EvenCaseClassification, VerifyError> {
    let pre = |msg: alloc::string::String| Err(VerifyError::Precondition(msg));
    if base < 2 || digit == 0 || digit >= base || len == 0 {
        return pre(format!("invalid repdigit data a={digit} m={len} b={base}"));
    }
    if n == 0 || n % 2 == 1 {
        return pre(format!("index n={n} is not a positive even number"));
    }
    let x_n = orbit.x_at(n);
    if x_n != repunit(base, len) * digit {
        return pre(format!("X_{n} = {x_n} is not {digit} * ({base}^{len} - 1)/({base} - 1)"));
    }
    let half = n / 2;
    let x_half = orbit.x_at(half);
    let fail = |msg: &str| {
        VerifyError::Falsified(
            Finding::falsified("even-classification", msg)
                .with("d", orbit.d())
                .with("n", n)
                .with("a", digit)
                .with("m", len)
                .with("b", base),
        )
    };
    if ((&x_half * &x_half) << 1u32) - 1u32 != x_n {
        return Err(fail("X_n != 2 X_{n/2}^2 - 1"));
    }
    if digit < base - 1 {
        return Ok(EvenCaseClassification { branch: EvenBranch::SmallDigit, half_index: half, x_half, two_power: None });
    }
    if len == 1 {
        if *orbit.d() >= BigUint::from(base) {
            return Err(fail("a = b - 1, m = 1 but d >= b"));
        }
        return Ok(EvenCaseClassification { branch: EvenBranch::SingleMaxDigit, half_index: half, x_half, two_power: None });
    }
    if base % 2 == 1 {
        return Err(fail("a = b - 1, m > 1 with odd base"));
    }
    if (&x_half * &x_half) << 1u32 != BigUint::from(base).pow(len) {
        return Err(fail("2 X_{n/2}^2 != b^m"));
    }
    if half.is_multiple_of(2) {
        return Err(fail("n/2 is even although X_{n/2} is even"));
    }
    let two_power = (len - 1) / 2;
    if !(orbit.x1() % (BigUint::one() << two_power)).is_zero() {
        return Err(fail("2^floor((m-1)/2) does not divide X_1"));
    }
    let v_half = nu_p(&BigInt::from(x_half.clone()), 2).expect("nonzero");
    let v_one = nu_p(&BigInt::from(orbit.x1().clone()), 2).expect("nonzero");
    if v_half != v_one {
        return Err(fail("nu_2(X_{n/2}) != nu_2(X_1)"));
    }
    Ok(EvenCaseClassification { branch: EvenBranch::PowerOfBase, half_index: half, x_half, two_power: Some(two_power) })
}

/// Primes up to `limit` (sieve of Eratosthenes).
pub(crate) fn small_primes(limit: u32) -> Vec<u32> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Prime factors found by trial division, plus what is left over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    pub primes: Vec<BigUint>,
    /// Unfactored cofactor (1 when complete).
    pub residual: BigUint,
}

impl FactorSet {
    pub fn is_complete(&self) -> bool {
        self.residual.is_one()
    }
}

fn factor_with(n: &BigUint, primes: &[u32]) -> FactorSet {
    let mut rest = n.clone();
    let mut found = Vec::new();
    for &p in primes {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            found.push(core::mem::replace(&mut rest, BigUint::one()));
            break;
        }
        if (&rest % p).is_zero() {
            found.push(pb.clone());
            while (&rest % p).is_zero() {
                rest /= p;
            }
        }
    }
    if !rest.is_one() {
        if let Some(&last) = primes.last() {
            let bound = BigUint::from(last) * BigUint::from(last);
            if rest <= bound {
                found.push(core::mem::replace(&mut rest, BigUint::one()));
            }
        }
    }
    found.sort();
    FactorSet { primes: found, residual: rest }
}

/// Trial division up to `limit`. A leftover cofactor at most `limit^2` is prime
/// and is included; anything larger stays in `residual`.
pub fn prime_factor_set(n: &BigUint, limit: u32) -> FactorSet {
    factor_with(n, &small_primes(limit))
}

/// Divides out of `a` every prime it shares with `b`.
pub(crate) fn strip_common(a: &BigUint, b: &BigUint) -> BigUint {
    let mut rest = a.clone();
    loop {
        let g = rest.gcd(b);
        if g.is_one() {
            return rest;
        }
        rest /= g;
    }
}

/// `true` when the prime supports of `a` and `b` differ. Decided exactly by
/// gcd stripping: `primes(a)` is inside `primes(b)` iff stripping `b` out of
/// `a` leaves 1.
pub fn distinct_prime_sets(a: &BigUint, b: &BigUint) -> bool {
    !strip_common(a, b).is_one() || !strip_common(b, a).is_one()
}

/// Over nonsquare `d <= d_max`, at most one even `n <= n_max` has
/// `X_n = b^m - 1` with `m > 1`, every such hit classifies cleanly, and
/// `X_1, X_3, X_5` have pairwise distinct prime supports.
pub fn even_uniqueness_check(base: u64, d_max: u64, n_max: u64) -> Result<VerifyReport> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    if base % 2 == 1 {
        return Err(Error::InvalidParameter(format!("base {base} must be even")));
    }
    let primes = small_primes(TRIAL_LIMIT);
    let mut report = VerifyReport::new("even-case");
    let b = BigUint::from(base);
    for d in 2..=d_max {
        let db = BigUint::from(d);
        if is_square(&db) {
            continue;
        }
        let orbit = fundamental_solution(&db)?;
        let mut power_hits = Vec::new();
        for n in (2..=n_max).step_by(2) {
            let x = orbit.x_at(n) + 1u32;
            // X_n = (b - 1)(b^m - 1)/(b - 1) = b^m - 1
            let mut m = 0u32;
            let mut rest = x;
            while (&rest % &b).is_zero() {
                rest /= &b;
                m += 1;
            }
            if rest.is_one() && m > 1 {
                power_hits.push((n, m));
                let outcome = classify_even_solution(&orbit, n, base - 1, m, base);
                report.record_result("even-classification", outcome);
            }
        }
        report.record(if power_hits.len() > 1 {
            Err(Finding::falsified("even-uniqueness", "two even indices with a = b - 1, m > 1")
                .with("d", d)
                .with("b", base)
                .with("hits", format!("{power_hits:?}")))
        } else {
            Ok(())
        });

        let xs = [orbit.x_at(1), orbit.x_at(3), orbit.x_at(5)];
        let sets: Vec<FactorSet> = xs.iter().map(|x| factor_with(x, &primes)).collect();
        for (k, set) in sets.iter().enumerate() {
            if !set.is_complete() {
                // the gcd route below still decides the comparison exactly
                report.findings.push(
                    Finding::undecided("odd-prime-factorization", "cofactor beyond trial-division range")
                        .with("d", d)
                        .with("index", 2 * k + 1)
                        .with("residual_bits", set.residual.bits()),
                );
            }
        }
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let (ii, jj) = (2 * i + 1, 2 * j + 1);
            let outcome = if sets[i].is_complete() && sets[j].is_complete() {
                if sets[i].primes == sets[j].primes {
                    Err(Finding::falsified("odd-prime-supports", format!("X_{ii} and X_{jj} share a prime support"))
                        .with("d", d))
                } else {
                    Ok(())
                }
            } else if distinct_prime_sets(&xs[i], &xs[j]) {
                Ok(())
            } else {
                Err(Finding::falsified("odd-prime-supports", format!("X_{ii} and X_{jj} share a prime support"))
                    .with("d", d))
            };
            report.record(outcome);
        }
    }
    Ok(report)
}
