use std::process::{Command, Output};

use pellrep::record::{BoundRecord, HitRecord};
use pellrep::OutputRecord;

fn pellrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellrep")).args(args).output().expect("binary runs")
}

fn records(out: &Output) -> Vec<OutputRecord> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| OutputRecord::from_line(l).unwrap())
        .collect()
}

fn hits(out: &Output) -> Vec<HitRecord> {
    records(out)
        .into_iter()
        .filter_map(|r| match r {
            OutputRecord::Hit(h) => Some(h),
            _ => None,
        })
        .collect()
}

#[test]
fn pell_command() {
    let out = pellrep(&["pell", "--d", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "{\"kind\":\"pell\",\"d\":\"2\",\"n\":3,\"x\":\"99\",\"y\":\"70\"}\n");
    let out = pellrep(&["pell", "--d", "2", "--n", "1"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"x\":\"3\",\"y\":\"2\""));
    assert_eq!(pellrep(&["pell", "--d", "4", "--n", "1"]).status.code(), Some(2));
    assert_eq!(pellrep(&["pell", "--d", "x"]).status.code(), Some(2));
    assert_eq!(pellrep(&["pell", "--d", "2", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn search_command() {
    let out = pellrep(&["search", "--base", "10", "--d-max", "10", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let h = hits(&out);
    assert_eq!(h.iter().map(|h| h.d).collect::<Vec<_>>(), [2, 3, 8]);
    assert_eq!(h[0].reductions.len(), 1);
    assert_eq!(h[0].reductions[0].ell, 2);

    let out = pellrep(&["search", "--base", "10", "--d-max", "3", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(hits(&out).is_empty());

    let out = pellrep(&["search", "--base", "10", "--d-max", "10", "--n-max", "5", "--include-m1", "false"]);
    assert!(hits(&out).is_empty());

    assert_eq!(pellrep(&["search", "--base", "1", "--d-max", "10", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(pellrep(&["search", "--d-max", "10", "--n-max", "5", "--shards", "0"]).status.code(), Some(2));
    assert_eq!(pellrep(&["search", "--d-max", "10"]).status.code(), Some(2));
}

#[test]
fn search_is_deterministic() {
    let args = ["search", "--base", "10", "--d-max", "300", "--n-max", "8"];
    let first = pellrep(&args).stdout;
    assert_eq!(pellrep(&args).stdout, first);
    for shards in ["2", "7"] {
        let mut a = args.to_vec();
        a.extend(["--shards", shards]);
        assert_eq!(pellrep(&a).stdout, first);
    }
}

#[test]
fn search_csv() {
    let out = pellrep(&["search", "--d-max", "10", "--n-max", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rd = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(rd.headers().unwrap(), vec!["base", "d", "n", "digit", "len", "x", "class"]);
    let rows: Vec<csv::StringRecord> = rd.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(&rows[1], vec!["10", "2", "3", "9", "2", "99", "nontrivial"]);
}

#[test]
fn verify_command() {
    let out = pellrep(&["verify", "taylor", "--base", "10", "--m-max", "4", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let out = pellrep(&["verify", "lemma3", "--base-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    for r in records(&out) {
        let OutputRecord::Verify(v) = r else { panic!("non-verify record") };
        assert_eq!(v.suite, "lemma3");
    }
    assert_eq!(pellrep(&["verify", "taylor", "--base", "1"]).status.code(), Some(2));
    assert_eq!(pellrep(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(pellrep(&["verify", "even-case", "--base", "9"]).status.code(), Some(2));
}

#[test]
fn bounds_command() {
    let out = pellrep(&["bounds", "--base", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let OutputRecord::Bound(b) = &records(&out)[0] else { panic!("bound record expected") };
    assert_eq!(b.m_max, "12800000000000000000000");
    assert_eq!(b.n_max, "16000000000000000000");

    let out = pellrep(&["bounds", "--base", "10"]);
    let OutputRecord::Bound(BoundRecord { theorem_exponent: t, .. }) = &records(&out)[0] else {
        panic!("bound record expected")
    };
    assert_eq!((t.mantissa.as_str(), t.base.as_str(), t.exponent.as_str(), t.digits), ("1", "10", "200000", 200_001));
    assert_eq!(pellrep(&["bounds", "--base", "1"]).status.code(), Some(2));
}

#[test]
fn repdigit_command() {
    let out = pellrep(&["repdigit", "7", "--base", "2"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"digits\":[1,1,1],\"digit\":1,\"len\":3"));
    let out = pellrep(&["repdigit", "12"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"digit\":null"));
    assert_eq!(pellrep(&["repdigit", "0"]).status.code(), Some(2));
}

#[test]
fn jsonl_round_trips_byte_for_byte() {
    let runs = [
        vec!["search", "--d-max", "200", "--n-max", "8"],
        vec!["verify", "all", "--d-max", "30", "--n-max", "7", "--m-max", "2"],
        vec!["bounds", "--base", "7"],
        vec!["pell", "--d", "991", "--n", "4"],
        vec!["repdigit", "4444", "--base", "10"],
    ];
    for args in runs {
        let out = pellrep(&args);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(!text.is_empty());
        for line in text.lines() {
            assert_eq!(OutputRecord::from_line(line).unwrap().to_line(), line);
        }
    }
}
