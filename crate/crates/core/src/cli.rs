//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain or guard errors, 2 on usage errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::count::{census, count_total};
use crate::error::Error;
use crate::expectation::{
    binomial_approximation_report, deficiency_polynomial, expected_length, expected_total, triangle,
};
use crate::montecarlo::{estimate_expected_length, estimate_expected_total, McConfig, DEFAULT_WORKERS, SUMMARY_SCALE};
use crate::output::{triangle_record, write_triangle_csv, OutputRecord};
use crate::string::BitString;
use crate::verify::{run_checks, Bounds};
use crate::ExactRational;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "SUBSEQ_CENSUS_THREADS";

/// Largest `--n-max` accepted by `triangle`.
pub const TRIANGLE_LIMIT: usize = 2000;

/// Fractional digits of the approximate rendering in table output when
/// `--decimal` is not given.
const DEFAULT_TABLE_DIGITS: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "subseq-census", version, about = "Exact distinct-subsequence counts and their expectations")]
struct Cli {
    /// Emit a JSON output record.
    #[arg(long, global = true)]
    json: bool,

    /// Emit `label,value,approx_decimal,approximate` CSV.
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,

    /// Also render exact values as decimals with D fractional digits.
    #[arg(long, global = true, value_name = "D")]
    decimal: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Binary,
    General,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TriangleFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum McTarget {
    Total,
    Length,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Total number of distinct subsequences and the per-length census.
    Count {
        #[arg(long)]
        string: String,
        #[arg(long, value_enum, default_value = "binary")]
        alphabet: AlphabetArg,
    },
    /// Per-length census only.
    Census {
        #[arg(long)]
        string: String,
        #[arg(long, value_enum, default_value = "binary")]
        alphabet: AlphabetArg,
    },
    /// Expected total count for a random binary string of length N.
    Expect {
        #[arg(long)]
        n: usize,
    },
    /// Expected count of length-M subsequences for length N.
    ExpectLength {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The expectation triangle for 0 ≤ m ≤ n ≤ N.
    Triangle {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: TriangleFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coefficients of the polynomial n ↦ Ŝ(n, n - M).
    Poly {
        #[arg(long)]
        m: usize,
    },
    /// 2^-M C(N, M) and its exact error against Ŝ(N, N - M).
    Approx {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Monte Carlo estimate of an expectation.
    Mc {
        #[arg(value_enum)]
        target: McTarget,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_WORKERS)]
        workers: usize,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
    },
}

enum Failure {
    Domain(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Clone, Copy)]
enum Format {
    Table,
    Json,
    Csv,
}

struct Emitter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    digits: Option<u32>,
}

impl Emitter<'_> {
    /// Digits for exact values: the table always shows a rendering.
    fn digits(&self) -> Option<u32> {
        match self.format {
            Format::Table => Some(self.digits.unwrap_or(DEFAULT_TABLE_DIGITS)),
            _ => self.digits,
        }
    }

    fn emit(&mut self, record: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Table => record.write_table(&mut *self.out),
            Format::Json => record.write_json(&mut *self.out),
            Format::Csv => record.write_csv(&mut *self.out),
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Table,
    };
    let mut emitter = Emitter {
        out,
        format,
        digits: cli.decimal,
    };
    let result = configure_threads()
        .map_err(Failure::Domain)
        .and_then(|()| dispatch(cli.command, &mut emitter));
    match result {
        Ok(code) => code,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Sizes the global rayon pool from [`THREADS_ENV`]. Only the first call in a
/// process can take effect.
fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    // already initialized: keep the existing pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn parse_string(text: &str, alphabet: AlphabetArg) -> Result<BitString, Error> {
    match alphabet {
        AlphabetArg::Binary => BitString::binary(text),
        AlphabetArg::General => BitString::general(text),
    }
}

fn int(v: impl Into<num_bigint::BigInt>) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn dispatch(command: Command, emitter: &mut Emitter<'_>) -> Result<i32, Failure> {
    let digits = emitter.digits();
    match command {
        Command::Count { string, alphabet } => {
            let s = parse_string(&string, alphabet)?;
            let mut record = OutputRecord::new("count")
                .param("string", &string)
                .param("alphabet", format!("{alphabet:?}").to_lowercase());
            record.push("total", &int(count_total(&s)), None);
            for (m, c) in census(&s).into_iter().enumerate() {
                record.push(format!("census[{m}]"), &int(c), None);
            }
            emitter.emit(&record)?;
        }
        Command::Census { string, alphabet } => {
            let s = parse_string(&string, alphabet)?;
            let mut record = OutputRecord::new("census")
                .param("string", &string)
                .param("alphabet", format!("{alphabet:?}").to_lowercase());
            for (m, c) in census(&s).into_iter().enumerate() {
                record.push(format!("census[{m}]"), &int(c), None);
            }
            emitter.emit(&record)?;
        }
        Command::Expect { n } => {
            let mut record = OutputRecord::new("expect").param("n", n);
            record.push("expected_total", &expected_total(n), digits);
            emitter.emit(&record)?;
        }
        Command::ExpectLength { n, m } => {
            let mut record = OutputRecord::new("expect-length").param("n", n).param("m", m);
            record.push("expected_length", &expected_length(n, m), digits);
            emitter.emit(&record)?;
        }
        Command::Triangle { n_max, format, out } => {
            if n_max > TRIANGLE_LIMIT {
                return Err(Error::GuardExceeded {
                    what: "triangle --n-max",
                    requested: n_max,
                    limit: TRIANGLE_LIMIT,
                }
                .into());
            }
            let table = triangle(n_max);
            let as_json = matches!(format, TriangleFormat::Json) || matches!(emitter.format, Format::Json);
            let mut sink: Box<dyn Write + '_> = match &out {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(&mut *emitter.out),
            };
            if as_json {
                triangle_record(&table, emitter.digits).write_json(&mut sink)?;
            } else {
                write_triangle_csv(&table, &mut sink)?;
            }
            sink.flush()?;
        }
        Command::Poly { m } => {
            let p = deficiency_polynomial(m)?;
            let mut record = OutputRecord::new("poly").param("m", m);
            for i in 0..=m {
                record.push(format!("alpha[{m},{i}]"), &p.coefficient(i), digits);
            }
            emitter.emit(&record)?;
            if matches!(emitter.format, Format::Table) {
                writeln!(emitter.out, "p_{m}(n) = {p}")?;
            }
        }
        Command::Approx { n, m } => {
            let report = binomial_approximation_report(n, m)?;
            let mut record = OutputRecord::new("approx").param("n", n).param("m", m);
            record.push("approximation", &report.approximation, digits);
            record.push("exact", &report.exact, digits);
            record.push("error", &report.error, digits);
            emitter.emit(&record)?;
        }
        Command::Mc {
            target,
            n,
            m,
            samples,
            seed,
            workers,
        } => {
            let config = McConfig { workers };
            let (estimate, exact) = match (target, m) {
                (McTarget::Total, None) => (estimate_expected_total(n, samples, seed, &config)?, expected_total(n)),
                (McTarget::Total, Some(_)) => {
                    return Err(Failure::Domain("--m is only meaningful for `mc length`".into()));
                }
                (McTarget::Length, Some(m)) => {
                    (estimate_expected_length(n, m, samples, seed, &config)?, expected_length(n, m))
                }
                (McTarget::Length, None) => return Err(Failure::Domain("`mc length` needs --m".into())),
            };
            let mut record = OutputRecord::new("mc")
                .param("target", format!("{target:?}").to_lowercase())
                .param("n", n)
                .param("samples", samples)
                .param("seed", seed)
                .param("workers", workers);
            if let Some(m) = m {
                record = record.param("m", m);
            }
            record.metadata.rng_id = Some(estimate.rng_id.clone());
            record.metadata.seed = Some(seed);
            record.push("mean", &estimate.mean_exact, Some(SUMMARY_SCALE));
            record.push_decimal("std_error", &estimate.std_error);
            record.push_decimal("ci95_low", &estimate.ci95_low);
            record.push_decimal("ci95_high", &estimate.ci95_high);
            record.push("exact", &exact, digits);
            emitter.emit(&record)?;
        }
        Command::Verify { quick, full: _ } => {
            let bounds = if quick { Bounds::quick() } else { Bounds::full() };
            let outcomes = run_checks(&bounds);
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            match emitter.format {
                Format::Table => {
                    for o in &outcomes {
                        writeln!(
                            emitter.out,
                            "{}  {:<24} {:>8.2?}  {}",
                            if o.passed { "PASS" } else { "FAIL" },
                            o.name,
                            o.elapsed,
                            o.detail
                        )?;
                    }
                    writeln!(emitter.out, "{} passed, {failed} failed", outcomes.len() - failed)?;
                }
                _ => {
                    let mut record = OutputRecord::new("verify").param("mode", if quick { "quick" } else { "full" });
                    for o in &outcomes {
                        record.push(o.name, &int(u8::from(o.passed)), None);
                    }
                    emitter.emit(&record)?;
                }
            }
            return Ok(i32::from(failed > 0));
        }
    }
    Ok(0)
}
