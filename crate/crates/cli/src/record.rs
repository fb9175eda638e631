//! Line-oriented output records. Integers that can exceed 64 bits are
//! decimal strings; reals are plain JSON numbers.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use pellrep_core::bounds::BoundReport;
use pellrep_core::search::{ClassifiedHit, SearchHit, SearchReport};
use pellrep_core::verify::{Finding, VerifyReport};
use pellrep_core::{PellPair, RepdigitForm};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputRecord {
    Pell(PellRecord),
    Repdigit(RepdigitRecord),
    Hit(HitRecord),
    Summary(SummaryRecord),
    Verify(VerifyRecord),
    Bound(BoundRecord),
}

impl OutputRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

pub fn write_jsonl<W: Write + ?Sized>(out: &mut W, records: &[OutputRecord]) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_line())?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellRecord {
    pub d: String,
    pub n: u64,
    pub x: String,
    pub y: String,
}

impl From<&PellPair> for PellRecord {
    fn from(p: &PellPair) -> Self {
        PellRecord { d: p.d.to_string(), n: p.n, x: p.x.to_string(), y: p.y.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepdigitRecord {
    pub value: String,
    pub base: u64,
    /// Most significant first.
    pub digits: Vec<u64>,
    pub digit: Option<u64>,
    pub len: Option<u32>,
}

impl RepdigitRecord {
    pub fn new(value: String, base: u64, digits: Vec<u64>, form: Option<RepdigitForm>) -> Self {
        RepdigitRecord { value, base, digits, digit: form.map(|f| f.digit), len: form.map(|f| f.len) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitEntry {
    pub n: u64,
    pub digit: u64,
    pub len: u32,
    pub x: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenEntry {
    pub n: u64,
    pub branch: String,
}

/// Two odd hits reduced to `X_1 = a R_m`, `X_index = c R_{m ell}` on the
/// orbit with `d_reduced = X_1^2 - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionEntry {
    pub n1: u64,
    pub n2: u64,
    pub d_reduced: String,
    pub digit: u64,
    pub len: u32,
    pub index: u64,
    pub c: u64,
    pub ell: u32,
    pub route: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    pub base: u64,
    pub d: u64,
    pub class: String,
    pub odd: usize,
    pub even: usize,
    pub hits: Vec<HitEntry>,
    pub even_branches: Vec<EvenEntry>,
    pub reductions: Vec<ReductionEntry>,
}

impl HitRecord {
    pub fn new(base: u64, hit: &SearchHit) -> Self {
        HitRecord {
            base,
            d: hit.d,
            class: hit.kind().as_str().to_string(),
            odd: hit.odd(),
            even: hit.even(),
            hits: hit
                .hits
                .iter()
                .map(|h| HitEntry { n: h.n, digit: h.digit, len: h.len, x: h.x.to_string() })
                .collect(),
            even_branches: Vec::new(),
            reductions: Vec::new(),
        }
    }

    pub fn classified(base: u64, c: &ClassifiedHit) -> Self {
        let mut rec = HitRecord::new(base, &c.hit);
        rec.even_branches = c
            .even
            .iter()
            .map(|(n, e)| EvenEntry { n: *n, branch: e.branch.label().to_string() })
            .collect();
        rec.reductions = c
            .reductions
            .iter()
            .map(|r| ReductionEntry {
                n1: r.first,
                n2: r.second,
                d_reduced: r.instance.d.to_string(),
                digit: r.instance.digit,
                len: r.instance.len,
                index: r.instance.index,
                c: r.instance.c,
                ell: r.instance.ell,
                route: r.route.label().to_string(),
            })
            .collect();
        rec
    }
}

/// Totals of a search run; always the last search record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub base: u64,
    pub d_max: u64,
    pub n_max: u64,
    pub m_cap: u32,
    pub include_m1: bool,
    pub squarefree_only: bool,
    pub d_scanned: u64,
    pub total_hits: u64,
    pub single_hit: u64,
    pub multi_hit: usize,
    pub nontrivial: usize,
}

impl From<&SearchReport> for SummaryRecord {
    fn from(r: &SearchReport) -> Self {
        SummaryRecord {
            base: r.config.base,
            d_max: r.config.d_max,
            n_max: r.config.n_max,
            m_cap: r.config.m_cap,
            include_m1: r.config.include_m1,
            squarefree_only: r.config.squarefree_only,
            d_scanned: r.d_scanned,
            total_hits: r.total_hits,
            single_hit: r.single_hit,
            multi_hit: r.multi_hit.len(),
            nontrivial: r.nontrivial(),
        }
    }
}

/// Either one finding (`check` names the property) or, with
/// `check = "summary"`, the suite totals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub suite: String,
    pub check: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub falsified: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub undecided: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub data: Vec<(String, String)>,
}

impl VerifyRecord {
    pub fn finding(suite: &str, f: &Finding) -> Self {
        VerifyRecord {
            suite: suite.to_string(),
            check: f.check.to_string(),
            status: f.status.as_str().to_string(),
            checked: None,
            falsified: None,
            undecided: None,
            detail: Some(f.detail.clone()),
            data: f.data.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }

    pub fn summary(r: &VerifyReport) -> Self {
        let falsified = r.falsified().count() as u64;
        VerifyRecord {
            suite: r.suite.to_string(),
            check: "summary".to_string(),
            status: if falsified == 0 { "passed" } else { "falsified" }.to_string(),
            checked: Some(r.checked),
            falsified: Some(falsified),
            undecided: Some(r.undecided().count() as u64),
            detail: None,
            data: Vec::new(),
        }
    }
}

/// `mantissa * base^exponent`, all exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactRecord {
    pub mantissa: String,
    pub base: String,
    pub exponent: String,
    /// Decimal digits of the full value.
    pub digits: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub base: u64,
    pub n_max: String,
    pub ell_max: String,
    pub m_max: String,
    pub n_max_derived: f64,
    pub n_from_inversion: f64,
    pub m_from_lemma: f64,
    /// Integer `>= 2e20 b^7 ln b`, the natural-log exponent of the bound on `d`.
    pub log_d_bound: String,
    pub log_d_weak: String,
    pub log_fixed_bits: u32,
    pub theorem_exponent: CompactRecord,
}

impl From<&BoundReport> for BoundRecord {
    fn from(r: &BoundReport) -> Self {
        let c = r.theorem_compact;
        BoundRecord {
            base: r.base,
            n_max: r.n_max.to_string(),
            ell_max: r.ell_max.to_string(),
            m_max: r.m_max.to_string(),
            n_max_derived: r.n_max_derived,
            n_from_inversion: r.n_from_inversion,
            m_from_lemma: r.m_from_lemma,
            log_d_bound: r.log_d_bound.to_string(),
            log_d_weak: r.log_d_weak.to_string(),
            log_fixed_bits: r.log_fixed_bits,
            theorem_exponent: CompactRecord {
                mantissa: c.mantissa.to_string(),
                base: c.base.to_string(),
                exponent: c.exponent.to_string(),
                digits: decimal_digits(&r.theorem_exponent),
            },
        }
    }
}

/// Number of decimal digits, found by exact comparison with powers of ten
/// (printing a million-digit value would dominate the run time).
fn decimal_digits(n: &num_bigint::BigUint) -> u64 {
    use num_bigint::BigUint;
    if n.bits() == 0 {
        return 1;
    }
    let ten = BigUint::from(10u32);
    let mut k = ((n.bits() - 1) as f64 * std::f64::consts::LOG10_2) as u32;
    while k > 0 && ten.pow(k) > *n {
        k -= 1;
    }
    while ten.pow(k + 1) <= *n {
        k += 1;
    }
    u64::from(k) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tagged_round_trip() {
        let rec = OutputRecord::Pell(PellRecord { d: "2".into(), n: 3, x: "99".into(), y: "70".into() });
        let line = rec.to_line();
        assert_eq!(line, r#"{"kind":"pell","d":"2","n":3,"x":"99","y":"70"}"#);
        assert_eq!(OutputRecord::from_line(&line).unwrap(), rec);
    }

    #[test]
    fn digit_counts() {
        use num_bigint::BigUint;
        for v in [0u64, 1, 9, 10, 99, 100, 12345, u64::MAX] {
            assert_eq!(decimal_digits(&BigUint::from(v)), v.to_string().len() as u64);
        }
        assert_eq!(decimal_digits(&BigUint::from(10u32).pow(1000)), 1001);
    }

    #[test]
    fn verify_summary_omits_empty_fields() {
        let rec = OutputRecord::Verify(VerifyRecord::summary(&VerifyReport::new("gcd")));
        assert_eq!(
            rec.to_line(),
            r#"{"kind":"verify","suite":"gcd","check":"summary","status":"passed","checked":0,"falsified":0,"undecided":0}"#
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pell_lines_round_trip(d in 2u64.., n in 1u64.., x in any::<u128>(), y in any::<u128>()) {
                let rec = OutputRecord::Pell(PellRecord { d: d.to_string(), n, x: x.to_string(), y: y.to_string() });
                let line = rec.to_line();
                prop_assert_eq!(OutputRecord::from_line(&line).unwrap(), rec.clone());
                prop_assert_eq!(OutputRecord::from_line(&line).unwrap().to_line(), line);
            }

            #[test]
            fn verify_lines_round_trip(
                detail in proptest::option::of("\\PC{0,40}"),
                data in proptest::collection::vec(("[a-z]{1,4}", "\\PC{0,12}"), 0..4),
                checked in proptest::option::of(any::<u64>()),
            ) {
                let rec = OutputRecord::Verify(VerifyRecord {
                    suite: "taylor".into(),
                    check: "taylor-congruence".into(),
                    status: "falsified".into(),
                    checked,
                    falsified: None,
                    undecided: None,
                    detail,
                    data,
                });
                let line = rec.to_line();
                prop_assert!(!line.contains('\n'));
                prop_assert_eq!(OutputRecord::from_line(&line).unwrap(), rec);
            }
        }
    }
}
