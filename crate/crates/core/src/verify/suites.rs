//! Batch runners over parameter windows. Each returns one merged report.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use super::*;
use crate::chebyshev::chebyshev_p_int;
use crate::pell::{fundamental_solution, is_square, nu_p};
use crate::repdigit::{as_repdigit, gcd_power_minus_one, repunit};
use crate::{Error, Result};

/// Degree bound for the symbolic `Q_n(0)`, `Q_n'(0)` check in the taylor suite.
pub const SHIFTED_CHECK_MAX: u64 = 200;

/// Suite names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: [&str; 10] = [
    "pell",
    "even-case",
    "gcd",
    "taylor",
    "lemma3",
    "valuation",
    "primitive",
    "elliptic",
    "brackets",
    "mixed-parity",
];

/// Parameter window shared by all suites; each suite reads what it needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRange {
    pub base: u64,
    /// When set, bases `2..=base_max` (or `3..` where needed) replace `base`.
    pub base_max: Option<u64>,
    pub d_max: u64,
    pub n_max: u64,
    pub m_max: u32,
    pub x_max: u64,
    pub y_max: u64,
    pub k_min: u64,
    pub k_max: u64,
}

impl Default for SuiteRange {
    fn default() -> Self {
        SuiteRange {
            base: 10,
            base_max: None,
            d_max: 100,
            n_max: 9,
            m_max: 4,
            x_max: 10_000,
            y_max: 100,
            k_min: 13,
            k_max: 25,
        }
    }
}

impl SuiteRange {
    pub fn validate(&self) -> Result<()> {
        if self.base < 2 {
            return Err(Error::InvalidBase(self.base));
        }
        if let Some(b) = self.base_max {
            if b < 2 {
                return Err(Error::InvalidBase(b));
            }
        }
        if self.d_max < 2 || self.n_max == 0 || self.m_max == 0 || self.k_min < 2 || self.k_min > self.k_max {
            return Err(Error::InvalidParameter(format!("empty or invalid range: {self:?}")));
        }
        Ok(())
    }

    fn bases(&self, min: u64) -> Vec<u64> {
        match self.base_max {
            Some(top) => (min..=top).collect(),
            None => Vec::from([self.base]),
        }
    }

    fn odd_n(&self, from: u64) -> impl Iterator<Item = u64> {
        (from..=self.n_max).filter(|n| n % 2 == 1)
    }
}

/// Runs a suite by name; `all` merges every suite in [`SUITES`] order.
pub fn run_suite(name: &str, range: &SuiteRange) -> Result<Vec<VerifyReport>> {
    range.validate()?;
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, range)).collect();
    }
    Ok(Vec::from([run_one(name, range)?]))
}

fn run_one(name: &str, r: &SuiteRange) -> Result<VerifyReport> {
    match name {
        "pell" => pell_suite(r),
        "even-case" => even_case_suite(r),
        "gcd" => gcd_suite(r),
        "taylor" => Ok(taylor_suite(r)),
        "lemma3" => lemma3_suite(r),
        "valuation" => Ok(valuation_suite(r)),
        "primitive" => primitive_suite(r),
        "elliptic" => elliptic_suite(r),
        "brackets" => Ok(brackets_suite(r)),
        "mixed-parity" => mixed_parity_suite(r),
        _ => Err(Error::InvalidParameter(format!("unknown suite {name:?}"))),
    }
}

/// Pell identity, `P_n(X_1) = X_n`, `nu_2(X_n) = nu_2(X_1)` for odd `n`, and
/// `Y_1 | Y_n`.
pub fn pell_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("pell");
    for d in 2..=r.d_max {
        let db = BigUint::from(d);
        if is_square(&db) {
            continue;
        }
        let orbit = fundamental_solution(&db)?;
        let x1 = BigInt::from(orbit.x1().clone());
        let v1 = nu_p(&x1, 2)?;
        for pair in orbit.solutions().take(r.n_max as usize) {
            let n = pair.n;
            let fail = |check, msg| Err(Finding::falsified(check, msg).with("d", d).with("n", n));
            report.record(if pair.is_valid() { Ok(()) } else { fail("pell-identity", "X^2 - dY^2 != 1") });
            let xn = BigInt::from(pair.x.clone());
            report.record(if chebyshev_p_int(n, &x1) == xn {
                Ok(())
            } else {
                fail("chebyshev-consistency", "P_n(X_1) != X_n")
            });
            report.record(if pair.y.is_multiple_of(orbit.y1()) {
                Ok(())
            } else {
                fail("y-divisibility", "Y_1 does not divide Y_n")
            });
            if n % 2 == 1 {
                report.record(if nu_p(&xn, 2)? == v1 {
                    Ok(())
                } else {
                    fail("nu2-invariance", "nu_2(X_n) != nu_2(X_1)")
                });
            }
        }
    }
    Ok(report)
}

pub fn even_case_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("even-case");
    let bases: Vec<u64> = r.bases(2).into_iter().filter(|b| b % 2 == 0).collect();
    if bases.is_empty() {
        return Err(Error::InvalidParameter("even-case needs an even base".into()));
    }
    for b in bases {
        report.merge(even_uniqueness_check(b, r.d_max, r.n_max)?);
    }
    Ok(report)
}

/// Orbit gcds, the repdigit gcd reduction, and `gcd(b^m1 - 1, b^m2 - 1)`.
pub fn gcd_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = pell_gcd_check(r.d_max, r.n_max)?;
    report.suite = "gcd";
    for b in r.bases(2) {
        let bb = BigUint::from(b);
        for m1 in 1..=r.m_max {
            for m2 in 1..=r.m_max {
                let g = (bb.pow(m1) - 1u32).gcd(&(bb.pow(m2) - 1u32));
                report.record(if g == gcd_power_minus_one(b, m1, m2) && g == bb.pow(m1.gcd(&m2)) - 1u32 {
                    Ok(())
                } else {
                    Err(Finding::falsified("power-gcd", "gcd(b^m1 - 1, b^m2 - 1) != b^gcd - 1")
                        .with("b", b)
                        .with("m1", m1)
                        .with("m2", m2))
                });
                for a1 in 1..b {
                    for a2 in 1..b {
                        report.record_result("gcd-reduction", gcd_reduction(a1, m1, a2, m2, b));
                    }
                }
            }
        }
    }
    Ok(report)
}

pub fn taylor_suite(r: &SuiteRange) -> VerifyReport {
    let mut report = shifted_chebyshev_check(SHIFTED_CHECK_MAX);
    report.suite = "taylor";
    for b in r.bases(2) {
        for a in 1..b {
            for m in 1..=r.m_max {
                if a == 1 && m == 1 {
                    continue; // X_1 = 1 has no orbit
                }
                for n in r.odd_n(1) {
                    report.record_result("taylor-congruence", taylor_congruence_check(b, a, m, n, None));
                }
            }
        }
    }
    report
}

pub fn lemma3_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("lemma3");
    let bases: Vec<u64> = r.bases(3).into_iter().filter(|&b| b >= 3).collect();
    if bases.is_empty() {
        return Err(Error::InvalidParameter("lemma3 needs a base of at least 3".into()));
    }
    for b in bases {
        for a in 1..b - 1 {
            for c in 1..=(b - 1) * (b - 1) {
                for n in r.odd_n(1) {
                    report.record_result("lemma3-system", lemma3_check(a, c, b, n));
                }
            }
        }
    }
    Ok(report)
}

/// Every reduced instance `X_1 = a R_m` (`a <= (b-1)^2`), `X_n = c R_{ml}`
/// with odd `3 <= n <= n_max`, `m <= m_max`, found by direct search.
pub fn valuation_suite(r: &SuiteRange) -> VerifyReport {
    let mut report = VerifyReport::new("valuation");
    for (b, a, m, n, c) in reduced_instances(r) {
        report.record_result("valuation-divisibility", valuation_divisibility_check(b, a, c, n, m));
    }
    report
}

pub(crate) fn reduced_instances(r: &SuiteRange) -> Vec<(u64, u64, u32, u64, u64)> {
    let mut out = Vec::new();
    for b in r.bases(2) {
        for m in 1..=r.m_max {
            for a in 1..=(b - 1) * (b - 1) {
                let x1 = repunit(b, m) * a;
                if x1 < BigUint::from(2u32) {
                    continue;
                }
                let orbit = crate::PellOrbit::from_seed(x1).expect("seed >= 2");
                for n in r.odd_n(3) {
                    if let Some(f) = as_repdigit(&orbit.x_at(n), b) {
                        if f.len % m == 0 {
                            out.push((b, a, m, n, f.digit));
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn primitive_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("primitive");
    for d in 2..=r.d_max {
        let db = BigUint::from(d);
        if is_square(&db) {
            continue;
        }
        let orbit = fundamental_solution(&db)?;
        for k in r.k_min..=r.k_max {
            let part = primitive_part_of(&orbit, k)?;
            report.record(if part > BigUint::one() {
                Ok(())
            } else {
                Err(Finding::falsified("primitive-divisor", "Y_k has no primitive prime divisor")
                    .with("d", d)
                    .with("k", k))
            });
        }
    }
    Ok(report)
}

/// Maps every small solution of `2x^2 - 1 = a (b^r y^3 - 1)/(b - 1)` onto
/// its curve, and checks `|A_0| < 4b^6` for all digits.
pub fn elliptic_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("elliptic");
    for b in r.bases(2) {
        let cap = BigInt::from(4) * BigInt::from(b).pow(6);
        for a in 1..b {
            for res in 0..=2u32 {
                let inst = elliptic_params(a, b, res)?;
                report.record(if inst.a0.magnitude() < cap.magnitude() {
                    Ok(())
                } else {
                    Err(Finding::falsified("a0-size", "|A0| >= 4b^6").with("a", a).with("b", b).with("r", res))
                });
                if inst.is_degenerate() || a + 1 >= b {
                    continue;
                }
                for (x, y) in ap7_solutions(a, b, res, r.x_max, r.y_max) {
                    report.record_result("elliptic-map", elliptic_map(&x, &y, a, b, res));
                }
            }
        }
    }
    Ok(report)
}

pub fn brackets_suite(r: &SuiteRange) -> VerifyReport {
    let mut report = VerifyReport::new("brackets");
    let len = r.m_max.max(brackets::BRACKET_MIN_LEN);
    for b in r.bases(2) {
        let mut digits = Vec::from([1, b - 1]);
        digits.dedup();
        for a in digits {
            report.record_result("unit-bracket", bracket_check(b, a, len));
        }
    }
    report
}

/// Every admissible `(a, m')`, i.e. `2^{floor((m'-1)/2)} | a`, for even bases.
pub fn mixed_parity_suite(r: &SuiteRange) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("mixed-parity");
    let bases: Vec<u64> = r.bases(2).into_iter().filter(|b| b % 2 == 0).collect();
    if bases.is_empty() {
        return Err(Error::InvalidParameter("mixed-parity needs an even base".into()));
    }
    for b in bases {
        for a in 1..b {
            let mut m_prime = 1;
            while a % (1u64 << ((m_prime - 1) / 2)) == 0 {
                report.record_result("mixed-parity-bound", mixed_parity_bound_check(b, m_prime, a));
                m_prime += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteRange {
        SuiteRange { d_max: 20, n_max: 7, m_max: 2, ..SuiteRange::default() }
    }

    #[test]
    fn every_suite_passes_small() {
        for report in run_suite("all", &small()).unwrap() {
            assert!(report.passed(), "{}: {:?}", report.suite, report.findings);
            assert!(report.checked > 0, "{} checked nothing", report.suite);
        }
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(run_suite("taylor", &SuiteRange { base: 1, ..small() }).is_err());
        assert!(run_suite("nope", &small()).is_err());
        assert!(run_suite("even-case", &SuiteRange { base: 9, ..small() }).is_err());
    }

    #[test]
    fn reduced_instances_include_d2() {
        let r = SuiteRange { m_max: 1, n_max: 3, ..SuiteRange::default() };
        assert!(reduced_instances(&r).contains(&(10, 3, 1, 3, 9)));
    }
}
