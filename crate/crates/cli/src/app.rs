//! Argument parsing and command dispatch. Exit codes: 0 success, 1 a
//! verification was falsified, 2 usage error.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use pellrep_core::bounds::bound_report;
use pellrep_core::search::{classify_report, SearchConfig};
use pellrep_core::verify::suites::{run_suite, SuiteRange, SUITES};
use pellrep_core::verify::VerifyReport;
use pellrep_core::{as_repdigit, digits, fundamental_solution, Error};

use crate::parallel::search_threaded;
use crate::record::{
    write_jsonl, BoundRecord, HitRecord, OutputRecord, PellRecord, RepdigitRecord, SummaryRecord, VerifyRecord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pellrep", version, about = "Pell equations whose X-coordinates are repdigits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print (X_n, Y_n) for X^2 - d Y^2 = 1.
    Pell {
        #[arg(long, value_parser = parse_biguint)]
        d: BigUint,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Base-b digits of a number and whether it is a repdigit.
    Repdigit {
        #[arg(value_parser = parse_biguint)]
        value: BigUint,
        #[arg(long, default_value_t = 10)]
        base: u64,
    },
    /// Scan nonsquare d for repdigit X-coordinates.
    Search {
        #[arg(long, default_value_t = 10)]
        base: u64,
        #[arg(long)]
        d_max: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 4096)]
        m_cap: u32,
        /// Count single-digit X_n as hits.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set, num_args = 0..=1,
              default_missing_value = "true")]
        include_m1: bool,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long)]
        squarefree_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(suite_names()))]
        suite: String,
        #[arg(long, default_value_t = 10)]
        base: u64,
        #[arg(long)]
        base_max: Option<u64>,
        #[arg(long)]
        d_max: Option<u64>,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long)]
        x_max: Option<u64>,
        #[arg(long)]
        y_max: Option<u64>,
        #[arg(long)]
        k_min: Option<u64>,
        #[arg(long)]
        k_max: Option<u64>,
    },
    /// Explicit bounds for a base.
    Bounds {
        #[arg(long)]
        base: u64,
    },
}

fn suite_names() -> Vec<&'static str> {
    let mut names = SUITES.to_vec();
    names.push("all");
    names
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>().map_err(|e| format!("not a nonnegative integer: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(io::Error::other(e))
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Pell { d, n } => {
            let pair = fundamental_solution(&d)?.nth_solution(n)?;
            write_jsonl(out, &[OutputRecord::Pell(PellRecord::from(&pair))])?;
            Ok(EXIT_OK)
        }
        Command::Repdigit { value, base } => {
            if base < 2 {
                return Err(Error::InvalidBase(base).into());
            }
            if value.bits() == 0 {
                return Err(Failure::Usage("value must be positive".into()));
            }
            let rec = RepdigitRecord::new(value.to_string(), base, digits(&value, base), as_repdigit(&value, base));
            write_jsonl(out, &[OutputRecord::Repdigit(rec)])?;
            Ok(EXIT_OK)
        }
        Command::Search { base, d_max, n_max, m_cap, include_m1, shards, squarefree_only, format } => {
            let config = SearchConfig { base, d_max, n_max, m_cap, include_m1, shards, squarefree_only };
            cmd_search(&config, format, out)
        }
        Command::Verify { suite, base, base_max, d_max, n_max, m_max, x_max, y_max, k_min, k_max } => {
            let def = SuiteRange::default();
            let range = SuiteRange {
                base,
                base_max,
                d_max: d_max.unwrap_or(def.d_max),
                n_max: n_max.unwrap_or(def.n_max),
                m_max: m_max.unwrap_or(def.m_max),
                x_max: x_max.unwrap_or(def.x_max),
                y_max: y_max.unwrap_or(def.y_max),
                k_min: k_min.unwrap_or(def.k_min),
                k_max: k_max.unwrap_or(def.k_max),
            };
            let reports = run_suite(&suite, &range)?;
            let records = verify_records(&reports);
            write_jsonl(out, &records)?;
            Ok(exit_for(&reports))
        }
        Command::Bounds { base } => {
            let report = bound_report(base)?;
            write_jsonl(out, &[OutputRecord::Bound(BoundRecord::from(&report))])?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_search(config: &SearchConfig, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = search_threaded(config)?;
    let classified = classify_report(&report)?;
    let hits: Vec<HitRecord> = classified.hits.iter().map(|c| HitRecord::classified(config.base, c)).collect();
    let reports = [classified.verify];
    match format {
        Format::Jsonl => {
            let mut records: Vec<OutputRecord> = hits.into_iter().map(OutputRecord::Hit).collect();
            records.push(OutputRecord::Summary(SummaryRecord::from(&report)));
            records.extend(verify_records(&reports));
            write_jsonl(out, &records)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["base", "d", "n", "digit", "len", "x", "class"])?;
            for h in &hits {
                for e in &h.hits {
                    w.write_record([
                        h.base.to_string(),
                        h.d.to_string(),
                        e.n.to_string(),
                        e.digit.to_string(),
                        e.len.to_string(),
                        e.x.clone(),
                        h.class.clone(),
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(exit_for(&reports))
}

/// Findings first, then the suite summary, per report.
fn verify_records(reports: &[VerifyReport]) -> Vec<OutputRecord> {
    let mut records = Vec::new();
    for r in reports {
        records.extend(r.findings.iter().map(|f| OutputRecord::Verify(VerifyRecord::finding(r.suite, f))));
        records.push(OutputRecord::Verify(VerifyRecord::summary(r)));
    }
    records
}

fn exit_for(reports: &[VerifyReport]) -> i32 {
    if reports.iter().all(VerifyReport::passed) {
        EXIT_OK
    } else {
        EXIT_FALSIFIED
    }
}
