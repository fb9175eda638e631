//! Two odd solutions collapse, through `X_{gcd(n1, n2)} = gcd(X_{n1}, X_{n2})`,
//! to a single orbit whose first term is a generalized repdigit.

use alloc::format;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Finding, VerifyError, VerifyReport};
use crate::pell::{fundamental_solution, is_square, PellOrbit};
use crate::repdigit::repunit;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GcdReduction {
    /// Cofactor `g / ((b^{m3} - 1)/(b - 1))`, at most `(b - 1)^2`.
    pub digit: u64,
    /// `gcd(m1, m2)`.
    pub len: u32,
}

/// `gcd(a1 R_{m1}, a2 R_{m2}) = a3c R_{m3}` with `m3 = gcd(m1, m2)` and
/// `a3c <= a1 a2 / gcd(a1, a2) < b^2`, where `R_m = (b^m - 1)/(b - 1)`.
pub fn gcd_reduction(a1: u64, m1: u32, a2: u64, m2: u32, base: u64) -> Result<GcdReduction, VerifyError> {
    if base < 2 || a1 == 0 || a2 == 0 || a1 >= base || a2 >= base || m1 == 0 || m2 == 0 {
        return Err(VerifyError::Precondition(format!(
            "need 1 <= a_i <= b - 1 and m_i >= 1 (a1={a1}, m1={m1}, a2={a2}, m2={m2}, b={base})"
        )));
    }
    let fail = |msg: &str| {
        VerifyError::Falsified(
            Finding::falsified("gcd-reduction", msg)
                .with("a1", a1)
                .with("m1", m1)
                .with("a2", a2)
                .with("m2", m2)
                .with("b", base),
        )
    };
    let g = (repunit(base, m1) * a1).gcd(&(repunit(base, m2) * a2));
    let m3 = m1.gcd(&m2);
    let (cof, rem) = g.div_rem(&repunit(base, m3));
    if rem != BigUint::from(0u32) {
        return Err(fail("gcd is not a multiple of (b^{m3} - 1)/(b - 1)"));
    }
    let a3 = a1.gcd(&a2);
    let cap = u128::from(a1) * u128::from(a2) / u128::from(a3);
    let max = u128::from(base - 1) * u128::from(base - 1);
    match cof.to_u128() {
        Some(c) if c <= cap && c <= max => Ok(GcdReduction { digit: c as u64, len: m3 }),
        _ => Err(fail("cofactor exceeds a1 a2 / gcd(a1, a2) or (b - 1)^2")),
    }
}

/// `X_{gcd(n1, n2)} = gcd(X_{n1}, X_{n2})` for odd `n1, n2 <= n_max`, `d <= d_max`.
pub fn pell_gcd_check(d_max: u64, n_max: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("gcd");
    for d in 2..=d_max {
        let db = BigUint::from(d);
        if is_square(&db) {
            continue;
        }
        let orbit = fundamental_solution(&db)?;
        let xs: alloc::vec::Vec<BigUint> = (0..=n_max).map(|n| orbit.x_at(n)).collect();
        for n1 in (1..=n_max).step_by(2) {
            for n2 in (n1..=n_max).step_by(2) {
                let n3 = n1.gcd(&n2) as usize;
                report.record(if xs[n1 as usize].gcd(&xs[n2 as usize]) == xs[n3] {
                    Ok(())
                } else {
                    Err(Finding::falsified("pell-gcd", "X_gcd(n1,n2) != gcd(X_n1, X_n2)")
                        .with("d", d)
                        .with("n1", n1)
                        .with("n2", n2))
                });
            }
        }
    }
    Ok(report)
}

/// The reduced system: `X_1 = a R_m` (`a <= (b-1)^2`) and `X_n = c R_{m l}`
/// (`c <= b - 1`, `n > 1` odd) on the orbit seeded at `X_1`, `D = X_1^2 - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Problem1Instance {
    pub base: u64,
    /// `D = X_{n3}^2 - 1`.
    pub d: BigUint,
    pub digit: u64,
    pub len: u32,
    pub index: u64,
    pub c: u64,
    pub ell: u32,
}

impl Problem1Instance {
    pub fn orbit(&self) -> PellOrbit {
        PellOrbit::from_seed(repunit(self.base, self.len) * self.digit).expect("seed >= 2")
    }
}

/// Builds the reduced instance from two odd solutions `(n1, a1, m1)`,
/// `(n2, a2, m2)` with `n1 < n2` on `orbit`, relabeling with the larger index:
/// `n = n2 / n3`, `c = a2`, `l = m2 / m3`.
pub fn problem1_instance(
    orbit: &PellOrbit,
    first: (u64, u64, u32),
    second: (u64, u64, u32),
    base: u64,
) -> Result<Problem1Instance, VerifyError> {
    let ((n1, a1, m1), (n2, a2, m2)) = (first, second);
    if n1 % 2 == 0 || n2 % 2 == 0 || n1 >= n2 || n1 == 0 {
        return Err(VerifyError::Precondition(format!("need odd 0 < n1 < n2 (n1={n1}, n2={n2})")));
    }
    for (n, a, m) in [first, second] {
        if a == 0 || a >= base || orbit.x_at(n) != repunit(base, m) * a {
            return Err(VerifyError::Precondition(format!("X_{n} is not {a} R_{m} in base {base}")));
        }
    }
    let red = gcd_reduction(a1, m1, a2, m2, base)?;
    let n3 = n1.gcd(&n2);
    let x3 = orbit.x_at(n3);
    let fail = |msg: &str| {
        VerifyError::Falsified(
            Finding::falsified("problem1-reduction", msg)
                .with("d", orbit.d())
                .with("n1", n1)
                .with("n2", n2)
                .with("b", base),
        )
    };
    if x3 != repunit(base, red.len) * red.digit {
        return Err(fail("X_{n3} != a3c (b^{m3} - 1)/(b - 1)"));
    }
    let inst = Problem1Instance {
        base,
        d: &x3 * &x3 - 1u32,
        digit: red.digit,
        len: red.len,
        index: n2 / n3,
        c: a2,
        ell: m2 / red.len,
    };
    if inst.orbit().x_at(inst.index) != orbit.x_at(n2) {
        return Err(fail("seeded orbit at X_{n3} does not reach X_{n2}"));
    }
    Ok(inst)
}
