//! Exhaustive scan for Pell moduli `d` whose `X_n` hit base-`b` repdigits.
//!
//! The `d` range is cut into contiguous shards. [`search`] runs the shards
//! one after another; a threaded driver can run [`scan_range`] on each shard
//! and call [`merge`] to get the same report.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::pell::{fundamental_solution, is_square};
use crate::repdigit::{as_repdigit, check_base, repunit};
use crate::verify::{
    classify_even_solution, problem1_instance, valuation_divisibility_check, EvenCaseClassification,
    Problem1Instance, ValuationRoute, VerifyReport,
};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    pub base: u64,
    pub d_max: u64,
    pub n_max: u64,
    /// Longest repdigit considered; the scan of a `d` stops once
    /// `X_n >= b^{m_cap}`.
    pub m_cap: u32,
    /// Count single-digit values `X_n < b` as hits.
    pub include_m1: bool,
    pub shards: usize,
    pub squarefree_only: bool,
}

impl SearchConfig {
    pub fn new(base: u64, d_max: u64, n_max: u64) -> Self {
        SearchConfig { base, d_max, n_max, m_cap: 4096, include_m1: true, shards: 1, squarefree_only: false }
    }

    pub fn validate(&self) -> Result<()> {
        check_base(self.base)?;
        if self.d_max < 2 || self.n_max == 0 || self.m_cap == 0 || self.shards == 0 {
            return Err(Error::InvalidParameter(format!(
                "need d_max >= 2, n_max >= 1, m_cap >= 1, shards >= 1 (got {}, {}, {}, {})",
                self.d_max, self.n_max, self.m_cap, self.shards
            )));
        }
        Ok(())
    }

    /// Contiguous, ascending `d` intervals `[lo, hi]` covering `2..=d_max`.
    /// Never more intervals than values.
    pub fn shard_ranges(&self) -> Vec<(u64, u64)> {
        let total = self.d_max - 1;
        let shards = (self.shards as u64).min(total);
        let (step, extra) = (total / shards, total % shards);
        let mut out = Vec::with_capacity(shards as usize);
        let mut lo = 2;
        for i in 0..shards {
            let len = step + u64::from(i < extra);
            out.push((lo, lo + len - 1));
            lo += len;
        }
        out
    }
}

/// `X_n = a (b^m - 1)/(b - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hit {
    pub n: u64,
    pub digit: u64,
    pub len: u32,
    pub x: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HitKind {
    /// Every hit is a single digit.
    Trivial,
    Nontrivial,
}

impl HitKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            HitKind::Trivial => "trivial",
            HitKind::Nontrivial => "nontrivial",
        }
    }
}

/// All repdigit hits for one `d`, sorted by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchHit {
    pub d: u64,
    pub hits: Vec<Hit>,
}

impl SearchHit {
    pub fn odd(&self) -> usize {
        self.hits.iter().filter(|h| h.n % 2 == 1).count()
    }

    pub fn even(&self) -> usize {
        self.hits.len() - self.odd()
    }

    pub fn kind(&self) -> HitKind {
        if self.hits.iter().all(|h| h.len == 1) {
            HitKind::Trivial
        } else {
            HitKind::Nontrivial
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchReport {
    pub config: SearchConfig,
    /// Nonsquare (and, if requested, squarefree) `d` scanned.
    pub d_scanned: u64,
    pub total_hits: u64,
    /// Moduli with exactly one hit.
    pub single_hit: u64,
    /// Moduli with at least two hits, ascending in `d`.
    pub multi_hit: Vec<SearchHit>,
}

impl SearchReport {
    pub fn nontrivial(&self) -> usize {
        self.multi_hit.iter().filter(|h| h.kind() == HitKind::Nontrivial).count()
    }
}

pub fn is_squarefree(d: u64) -> bool {
    let mut p = 2u64;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Every `n <= n_max` with `X_n` a base-`b` repdigit of at most `m_cap`
/// digits; `None` when there is none.
pub fn scan_d(base: u64, d: u64, n_max: u64, m_cap: u32, include_m1: bool) -> Result<Option<SearchHit>> {
    check_base(base)?;
    let db = BigUint::from(d);
    if d < 2 {
        return Err(Error::ModulusTooSmall);
    }
    if is_square(&db) {
        return Err(Error::SquareModulus(db));
    }
    let orbit = fundamental_solution(&db)?;
    let ceiling = BigUint::from(base).pow(m_cap);
    let mut hits = Vec::new();
    let mut prev = BigUint::from(1u32);
    for pair in orbit.solutions().take(n_max as usize) {
        // X_n strictly increases, so nothing past the ceiling can hit
        assert!(pair.x > prev, "X_n not increasing at d = {d}, n = {}", pair.n);
        if pair.x >= ceiling {
            break;
        }
        if let Some(f) = as_repdigit(&pair.x, base) {
            if include_m1 || f.len > 1 {
                hits.push(Hit { n: pair.n, digit: f.digit, len: f.len, x: pair.x.clone() });
            }
        }
        prev = pair.x;
    }
    Ok((!hits.is_empty()).then_some(SearchHit { d, hits }))
}

/// Scans `lo..=hi`; the partial report carries the config and totals.
pub fn scan_range(config: &SearchConfig, lo: u64, hi: u64) -> Result<SearchReport> {
    let mut report = SearchReport {
        config: config.clone(),
        d_scanned: 0,
        total_hits: 0,
        single_hit: 0,
        multi_hit: Vec::new(),
    };
    for d in lo.max(2)..=hi.min(config.d_max) {
        if is_square(&BigUint::from(d)) || (config.squarefree_only && !is_squarefree(d)) {
            continue;
        }
        report.d_scanned += 1;
        if let Some(hit) = scan_d(config.base, d, config.n_max, config.m_cap, config.include_m1)? {
            report.total_hits += hit.hits.len() as u64;
            if hit.hits.len() == 1 {
                report.single_hit += 1;
            } else {
                report.multi_hit.push(hit);
            }
        }
    }
    Ok(report)
}

/// Combines partial reports in any order into the canonical one.
pub fn merge(config: &SearchConfig, parts: Vec<SearchReport>) -> SearchReport {
    let mut out = SearchReport {
        config: config.clone(),
        d_scanned: 0,
        total_hits: 0,
        single_hit: 0,
        multi_hit: Vec::new(),
    };
    for part in parts {
        out.d_scanned += part.d_scanned;
        out.total_hits += part.total_hits;
        out.single_hit += part.single_hit;
        out.multi_hit.extend(part.multi_hit);
    }
    out.multi_hit.sort_by_key(|h| h.d);
    out
}

/// Recomputes every reported `X_n` from a fresh orbit and re-parses it.
pub fn recheck(report: &SearchReport) -> Result<()> {
    let base = report.config.base;
    for entry in &report.multi_hit {
        let orbit = fundamental_solution(&BigUint::from(entry.d))?;
        for h in &entry.hits {
            let x = orbit.x_at(h.n);
            let parsed = as_repdigit(&x, base);
            let ok = x == h.x
                && x == repunit(base, h.len) * h.digit
                && parsed.map(|f| (f.digit, f.len)) == Some((h.digit, h.len));
            if !ok {
                return Err(Error::InvalidParameter(format!(
                    "hit d = {}, n = {} does not reproduce",
                    entry.d, h.n
                )));
            }
        }
    }
    Ok(())
}

pub fn search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let parts = config
        .shard_ranges()
        .into_iter()
        .map(|(lo, hi)| scan_range(config, lo, hi))
        .collect::<Result<Vec<_>>>()?;
    let report = merge(config, parts);
    recheck(&report)?;
    Ok(report)
}

/// Two odd hits reduced to a single seeded orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub first: u64,
    pub second: u64,
    pub instance: Problem1Instance,
    pub route: ValuationRoute,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedHit {
    pub hit: SearchHit,
    /// Branch for each even `n`.
    pub even: Vec<(u64, EvenCaseClassification)>,
    pub reductions: Vec<Reduction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedReport {
    pub hits: Vec<ClassifiedHit>,
    /// Every check run along the way; falsifications land here.
    pub verify: VerifyReport,
}

/// Routes each multi-hit modulus through the even-case classification and,
/// for every pair of odd indices, the gcd reduction and divisibility check.
pub fn classify_report(report: &SearchReport) -> Result<ClassifiedReport> {
    let base = report.config.base;
    let mut verify = VerifyReport::new("classify");
    let mut hits = Vec::new();
    for entry in &report.multi_hit {
        let orbit = fundamental_solution(&BigUint::from(entry.d))?;
        let mut even = Vec::new();
        let mut reductions = Vec::new();
        for h in entry.hits.iter().filter(|h| h.n % 2 == 0) {
            let outcome = classify_even_solution(&orbit, h.n, h.digit, h.len, base);
            if let Some(c) = verify.record_result("even-classification", outcome) {
                even.push((h.n, c));
            }
        }
        let odd: Vec<&Hit> = entry.hits.iter().filter(|h| h.n % 2 == 1).collect();
        for (i, h1) in odd.iter().enumerate() {
            for h2 in &odd[i + 1..] {
                let outcome = problem1_instance(&orbit, (h1.n, h1.digit, h1.len), (h2.n, h2.digit, h2.len), base);
                let Some(instance) = verify.record_result("problem1-reduction", outcome) else {
                    continue;
                };
                let outcome =
                    valuation_divisibility_check(base, instance.digit, instance.c, instance.index, instance.len);
                if let Some(v) = verify.record_result("valuation-divisibility", outcome) {
                    reductions.push(Reduction { first: h1.n, second: h2.n, instance, route: v.route });
                }
            }
        }
        hits.push(ClassifiedHit { hit: entry.clone(), even, reductions });
    }
    Ok(ClassifiedReport { hits, verify })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::EvenBranch;

    fn hit_tuples(h: &SearchHit) -> Vec<(u64, u64, u32)> {
        h.hits.iter().map(|h| (h.n, h.digit, h.len)).collect()
    }

    #[test]
    fn scan_examples() {
        let h = scan_d(10, 2, 5, 64, true).unwrap().unwrap();
        assert_eq!(hit_tuples(&h), [(1, 3, 1), (3, 9, 2)]);
        let h = scan_d(10, 3, 5, 64, true).unwrap().unwrap();
        assert_eq!(hit_tuples(&h), [(1, 2, 1), (2, 7, 1)]);
        let h = scan_d(2, 3, 5, 64, true).unwrap().unwrap();
        assert_eq!(hit_tuples(&h), [(2, 1, 3)]);
        assert!(scan_d(10, 4, 5, 64, true).is_err());
        // the cap cuts off X_3 = 99
        let h = scan_d(10, 2, 5, 1, true).unwrap().unwrap();
        assert_eq!(hit_tuples(&h), [(1, 3, 1)]);
    }

    #[test]
    fn search_examples() {
        let cfg = SearchConfig::new(10, 10, 5);
        let r = search(&cfg).unwrap();
        let ds: Vec<u64> = r.multi_hit.iter().map(|h| h.d).collect();
        assert_eq!(ds, [2, 3, 8]);
        assert_eq!(r.d_scanned, 7);
        let r = search(&SearchConfig { include_m1: false, ..cfg }).unwrap();
        assert!(r.multi_hit.is_empty());
    }

    #[test]
    fn shard_independence() {
        let base = SearchConfig::new(10, 60, 6);
        let one = search(&base).unwrap();
        for shards in [2, 3, 8, 100] {
            let r = search(&SearchConfig { shards, ..base.clone() }).unwrap();
            assert_eq!(r.multi_hit, one.multi_hit);
            assert_eq!((r.d_scanned, r.total_hits, r.single_hit), (one.d_scanned, one.total_hits, one.single_hit));
        }
        let cfg = SearchConfig { shards: 4, ..SearchConfig::new(10, 9, 1) };
        assert_eq!(cfg.shard_ranges(), [(2, 3), (4, 5), (6, 7), (8, 9)]);
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(2) && is_squarefree(30) && !is_squarefree(8) && !is_squarefree(50));
        let cfg = SearchConfig { squarefree_only: true, ..SearchConfig::new(10, 10, 5) };
        let ds: Vec<u64> = search(&cfg).unwrap().multi_hit.iter().map(|h| h.d).collect();
        assert_eq!(ds, [2, 3]);
    }

    #[test]
    fn classify_d2_d3() {
        let r = search(&SearchConfig::new(10, 10, 5)).unwrap();
        let c = classify_report(&r).unwrap();
        assert!(c.verify.passed(), "{:?}", c.verify.findings);
        let d2 = &c.hits[0];
        assert_eq!(d2.reductions.len(), 1);
        let inst = &d2.reductions[0].instance;
        assert_eq!((inst.digit, inst.len, inst.index, inst.c, inst.ell), (3, 1, 3, 9, 2));
        let d3 = &c.hits[1];
        assert_eq!(d3.even[0].1.branch, EvenBranch::SmallDigit);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn shards_do_not_change_the_report(base in 2u64..=12, d_max in 2u64..80, shards in 1usize..12) {
            let one = SearchConfig::new(base, d_max, 6);
            let many = SearchConfig { shards, ..one.clone() };
            let (a, b) = (search(&one).unwrap(), search(&many).unwrap());
            prop_assert_eq!(a.multi_hit, b.multi_hit);
            prop_assert_eq!((a.d_scanned, a.total_hits, a.single_hit), (b.d_scanned, b.total_hits, b.single_hit));
        }

        #[test]
        fn shard_ranges_partition(d_max in 2u64..500, shards in 1usize..40) {
            let ranges = SearchConfig { shards, ..SearchConfig::new(10, d_max, 1) }.shard_ranges();
            prop_assert_eq!(ranges[0].0, 2);
            prop_assert_eq!(ranges.last().unwrap().1, d_max);
            prop_assert!(ranges.windows(2).all(|w| w[0].1 + 1 == w[1].0));
            prop_assert!(ranges.iter().all(|(lo, hi)| lo <= hi));
        }
    }
}
