//! Cross-checks against algorithms that share no code with the library:
//! the chakravala method, a bounded brute force over `Y`, and a naive
//! recurrence-plus-string search.

use num_traits::{One, Signed, ToPrimitive, Zero};
use pellrep_core::search::{scan_d, search, SearchConfig};
use pellrep_core::{fundamental_solution, BigInt, BigUint};

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Bhaskara's cyclic method; returns the fundamental `(x, y)`.
fn chakravala(d: u64) -> (BigInt, BigInt) {
    let dd = BigInt::from(d);
    let root = isqrt(d);
    let mut a = BigInt::from(if d - root * root <= (root + 1) * (root + 1) - d { root } else { root + 1 });
    let mut b = BigInt::one();
    let mut k = &a * &a - &dd;
    while !k.is_one() {
        let km = k.abs();
        // m with k | a + b m and |m^2 - d| smallest
        let kmu = km.to_u64().expect("|k| stays small");
        let r = (0..kmu).find(|m| ((&a + &b * BigInt::from(*m)) % &km).is_zero()).expect("b invertible mod k");
        let t = (root.saturating_sub(r)) / kmu;
        let m = [t, t + 1]
            .iter()
            .map(|t| r + t * kmu)
            .filter(|&m| m > 0)
            .min_by_key(|&m| (i128::from(m) * i128::from(m) - i128::from(d)).abs())
            .unwrap();
        let m = BigInt::from(m);
        let na = (&a * &m + &dd * &b) / &km;
        let nb = (&a + &b * &m) / &km;
        k = (&m * &m - &dd) / &k;
        a = na.abs();
        b = nb.abs();
    }
    (a, b)
}

/// Smallest `Y <= limit` with `d Y^2 + 1` a square.
fn brute_force(d: u64, limit: u64) -> Option<(u64, u64)> {
    (1..=limit).find_map(|y| {
        let v = d * y * y + 1;
        let x = isqrt(v);
        (x * x == v).then_some((x, y))
    })
}

#[test]
fn fundamental_solutions_agree_with_two_oracles() {
    for d in 2..=200u64 {
        if isqrt(d).pow(2) == d {
            continue;
        }
        let orbit = fundamental_solution(&BigUint::from(d)).unwrap();
        let (x, y) = (BigInt::from(orbit.x1().clone()), BigInt::from(orbit.y1().clone()));
        assert_eq!((x.clone(), y.clone()), chakravala(d), "chakravala d={d}");
        match brute_force(d, 1_000_000) {
            Some((bx, by)) => assert_eq!((x, y), (BigInt::from(bx), BigInt::from(by)), "brute force d={d}"),
            None => assert!(y > BigInt::from(1_000_000), "d={d}: no Y <= 1e6 but library found {y}"),
        }
    }
}

#[test]
fn frozen_fundamentals() {
    let cases: [(u64, &str, &str); 5] = [
        (2, "3", "2"),
        (61, "1766319049", "226153980"),
        (109, "158070671986249", "15140424455100"),
        (181, "2469645423824185801", "183567298683461940"),
        (991, "379516400906811930638014896080", "12055735790331359447442538767"),
    ];
    for (d, x, y) in cases {
        let o = fundamental_solution(&BigUint::from(d)).unwrap();
        assert_eq!((o.x1().to_string(), o.y1().to_string()), (x.to_string(), y.to_string()), "d={d}");
    }
}

fn naive_hits(base: u64, d: u64, n_max: u64) -> Vec<(u64, u64, u32)> {
    let o = fundamental_solution(&BigUint::from(d)).unwrap();
    let x1 = o.x1().clone();
    let (mut prev, mut cur) = (BigUint::one(), x1.clone());
    let mut out = Vec::new();
    for n in 1..=n_max {
        let s = cur.to_str_radix(base as u32);
        let first = s.chars().next().unwrap();
        if s.chars().all(|c| c == first) {
            out.push((n, first.to_digit(36).unwrap() as u64, s.len() as u32));
        }
        let next = BigUint::from(2u32) * &x1 * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

#[test]
fn scan_matches_naive_oracle() {
    for base in 2..=12u64 {
        for d in 2..=100u64 {
            if isqrt(d).pow(2) == d {
                continue;
            }
            let got: Vec<(u64, u64, u32)> = scan_d(base, d, 8, 4096, true)
                .unwrap()
                .map(|h| h.hits.iter().map(|h| (h.n, h.digit, h.len)).collect())
                .unwrap_or_default();
            assert_eq!(got, naive_hits(base, d, 8), "b={base} d={d}");
        }
    }
}

#[test]
fn search_multi_hits_match_naive_oracle() {
    let report = search(&SearchConfig::new(10, 500, 8)).unwrap();
    let want: Vec<u64> = (2..=500u64)
        .filter(|d| isqrt(*d).pow(2) != *d && naive_hits(10, *d, 8).len() >= 2)
        .collect();
    let got: Vec<u64> = report.multi_hit.iter().map(|h| h.d).collect();
    assert_eq!(got, want);
}
