//! `negaz4`: exact construction, enumeration, counting and verification of
//! negacyclic and cyclic codes over Z4 + uZ4 from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! or input errors.

use clap::{Parser, Subcommand, ValueEnum};
use negaz4_core as core;
use negaz4_core::{
    bandi_formula, count_cyclic_odd, count_local_ideals, count_negacyclic, dual,
    enumerate_cyclic_odd, enumerate_negacyclic, factor_yn_minus_1, gray_map, lee_weight_enumerator,
    realize_code_spec, self_dual_census, span_upairs, AmbientCtx, ChainRingCtx, CheckReport,
};
use num_bigint::BigUint;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "negaz4",
    about = "Negacyclic and cyclic codes over Z4+uZ4: exact enumeration, counting, verification",
    version
)]
struct Cli {
    /// Suppress non-data metadata (timings) from reports.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Table,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Appendix,
    Selfdual,
    Cyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    #[value(name = "counts-2n")]
    Counts2n,
    #[value(name = "n-list")]
    NList,
}

#[derive(Subcommand)]
enum Command {
    /// Factor y^n - 1 into basic irreducible polynomials over Z4.
    Factor {
        #[arg(long)]
        n: u64,
    },
    /// Print the orthogonal idempotents of the length-(2^k n) ambient
    /// (k = 0 selects the cyclic ambient x^n - 1).
    Idempotents {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
    },
    /// Summary of the local chain ring attached to factor j (1-based).
    Ring {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: usize,
    },
    /// Number of negacyclic codes of length 2^k n (or cyclic codes of odd
    /// length n with --cyclic).
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        cyclic: bool,
    },
    /// Stream every code as one JSON record per line.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        cyclic: bool,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Apply the Gray map to vectors read from a file: each line holds
    /// `[a coefficients]|[b coefficients]` of equal length.
    Gray {
        #[arg(long, value_name = "FILE")]
        r#in: String,
    },
    /// Lee weight distribution of the code described by a JSON record
    /// (as produced by `enumerate`), printed as `weight,count` lines.
    Weights {
        #[arg(long, value_name = "FILE")]
        spec: String,
    },
    /// Euclidean dual of the code described by a JSON record: prints the
    /// cardinality and the canonical rows.
    Dual {
        #[arg(long, value_name = "FILE")]
        spec: String,
    },
    /// Brute-force census of self-dual codes of length 2^k n (small
    /// lengths only).
    #[command(name = "self-dual-census")]
    SelfDualCensus {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Compare the published length-2^k mass formula against the exact
    /// count.
    #[command(name = "compare-bandi")]
    CompareBandi {
        #[arg(long)]
        k: u32,
    },
    /// Reproduce a counting table.
    Report {
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn main() -> ExitCode {
    // enumeration streams are meant to be piped; die silently on a closed
    // pipe instead of panicking
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    if let Ok(threads) = std::env::var("NEGAZ4_THREADS") {
        if let Ok(v) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(v)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> core::Result<ExitCode> {
    match cli.command {
        Command::Factor { n } => {
            let fs = factor_yn_minus_1(n)?;
            for f in fs.factors() {
                println!("{f} degree={}", f.degree().unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Idempotents { n, k } => {
            let amb = AmbientCtx::new(n, k)?;
            for e in amb.idempotents() {
                println!("{e}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ring { n, k, j } => {
            let fs = factor_yn_minus_1(n)?;
            if j == 0 || j > fs.r() {
                return Err(core::Error::OutOfRange(format!(
                    "j must be in 1..={}, got {j}",
                    fs.r()
                )));
            }
            let f = &fs.factors()[j - 1];
            let ctx = ChainRingCtx::new(f, k)?;
            println!("n={n} k={k} j={j}");
            println!("f={f} degree={}", ctx.d());
            println!("modulus={} degree={}", ctx.modulus(), ctx.degree());
            println!("nilpotency={}", ctx.nu());
            println!("theta={}", ctx.theta());
            println!("ring_size={}", ctx.ring_size());
            let mut sizes = String::new();
            for l in 0..=ctx.nu() {
                if l > 0 {
                    sizes.push(' ');
                }
                write!(sizes, "l={l}:{}", ctx.ideal_size(l)?).unwrap();
            }
            println!("ideal_sizes: {sizes}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { n, k, cyclic } => {
            let count = if cyclic {
                count_cyclic_odd(n)?
            } else {
                let k =
                    k.ok_or_else(|| core::Error::Parse("--k is required without --cyclic".into()))?;
                count_negacyclic(n, k)?
            };
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            k,
            cyclic,
            limit,
            format,
        } => {
            if format != Format::Jsonl {
                return Err(core::Error::Parse(
                    "enumerate only supports --format jsonl".into(),
                ));
            }
            let cap = limit.map_or(usize::MAX, |l| l as usize);
            if cyclic {
                let fs = factor_yn_minus_1(n)?;
                let degrees = fs.degrees();
                for spec in enumerate_cyclic_odd(n)?.take(cap) {
                    println!("{}", spec.to_json(&degrees));
                }
            } else {
                let k =
                    k.ok_or_else(|| core::Error::Parse("--k is required without --cyclic".into()))?;
                let amb = AmbientCtx::new(n, k)?;
                let degrees = amb.factors().degrees();
                for spec in enumerate_negacyclic(&amb)?.take(cap) {
                    println!("{}", spec.to_json(&degrees));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gray { r#in } => {
            let text = std::fs::read_to_string(&r#in)
                .map_err(|e| core::Error::Parse(format!("cannot read {}: {e}", r#in)))?;
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let word = parse_pair_vector(line)?;
                println!("{}", bracket_list(&gray_map(&word)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Weights { spec } => {
            let realized = load_spec(&spec)?;
            let code = span_upairs(realized.ambient.modulus(), &realized.generators)?;
            let dist = lee_weight_enumerator(&code)?;
            for (w, c) in dist {
                println!("{w},{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dual { spec } => {
            let realized = load_spec(&spec)?;
            let code = span_upairs(realized.ambient.modulus(), &realized.generators)?;
            let d = dual(&code)?;
            println!("cardinality {}", d.cardinality());
            for row in d.rows() {
                println!("{}", bracket_list(row));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SelfDualCensus { n, k } => {
            let census = self_dual_census(n, k)?;
            println!("count {}", census.len());
            for code in &census {
                let rows: Vec<String> = code.rows().iter().map(|r| bracket_list(r)).collect();
                println!("{}", rows.join(";"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, k } => run_verify(suite, n, k, cli.quiet),
        Command::CompareBandi { k } => {
            let claimed = bandi_formula(k);
            let count = count_local_ideals(1, k);
            println!(
                "k={k} length={} claimed={claimed} count={count} agree={}",
                1u64 << k,
                claimed == count
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { table, format } => {
            run_report(table, format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn bracket_list(v: &[u8]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// Parses `[a0,a1,...]|[b0,b1,...]` into the `[a | b]` slot layout without
/// trimming, so explicit trailing zeros keep their positions.
fn parse_pair_vector(line: &str) -> core::Result<Vec<u8>> {
    let (left, right) = line
        .split_once('|')
        .ok_or_else(|| core::Error::Parse(format!("expected [..]|[..], got {line:?}")))?;
    let a = parse_raw_list(left)?;
    let b = parse_raw_list(right)?;
    if a.len() != b.len() || a.is_empty() {
        return Err(core::Error::Parse(
            "both coefficient lists must have the same nonzero length".into(),
        ));
    }
    let mut word = a;
    word.extend(b);
    Ok(word)
}

fn parse_raw_list(s: &str) -> core::Result<Vec<u8>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| core::Error::Parse(format!("expected [..] list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map(|v| v.rem_euclid(4) as u8)
                .map_err(|_| core::Error::Parse(format!("bad coefficient {p:?}")))
        })
        .collect()
}

fn load_spec(path: &str) -> core::Result<core::RealizedCodeSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| core::Error::Parse(format!("cannot read {path}: {e}")))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| core::Error::Parse("spec file is empty".into()))?;
    let value: serde_json::Value =
        serde_json::from_str(line).map_err(|e| core::Error::Parse(format!("invalid JSON: {e}")))?;
    realize_code_spec(&value)
}

fn run_verify(suite: Suite, n: Option<u64>, k: Option<u32>, quiet: bool) -> core::Result<ExitCode> {
    let start = Instant::now();
    let need_n = || n.ok_or_else(|| core::Error::Parse("--n is required for this suite".into()));
    let need_k = || k.ok_or_else(|| core::Error::Parse("--k is required for this suite".into()));
    let (name, report) = match suite {
        Suite::Oracle => {
            let (n, k) = (need_n()?, need_k()?);
            ("oracle", core::verify_enumeration(n, k)?)
        }
        Suite::Appendix => ("appendix", core::verify_reference_table_length2()?),
        Suite::Selfdual => {
            let (n, k) = (need_n()?, need_k()?);
            ("selfdual", verify_selfdual(n, k)?)
        }
        Suite::Cyclic => {
            let n = need_n()?;
            ("cyclic", verify_cyclic(n)?)
        }
    };
    print!("{report}");
    if !quiet {
        println!("elapsed {:?}", start.elapsed());
    }
    let pass = report.pass();
    println!(
        "RESULT suite={name} n={} k={} pass={pass} checks={} failed={}",
        n.map_or("-".into(), |v| v.to_string()),
        k.map_or("-".into(), |v| v.to_string()),
        report.checks.len(),
        report.failed()
    );
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check(label: &str, pass: bool, detail: String) -> core::oracle::Check {
    core::oracle::Check {
        label: label.to_string(),
        pass,
        detail,
    }
}

/// Census-based self-duality checks: every member must square to the full
/// space size, and at length 2 the census must be the corrected list of 7.
fn verify_selfdual(n: u64, k: u32) -> core::Result<CheckReport> {
    let census = self_dual_census(n, k)?;
    let len = (1usize << k) * n as usize;
    let full = BigUint::from(16u32).pow(len as u32);
    let mut report = CheckReport {
        name: format!("selfdual n={n} k={k}"),
        checks: Vec::new(),
    };
    let squares_ok = census.iter().all(|c| c.cardinality().pow(2u32) == full);
    report.checks.push(check(
        "half dimension",
        squares_ok,
        "every self-dual code satisfies |C|^2 = 16^N".to_string(),
    ));
    if n == 1 && k == 1 {
        report.checks.push(check(
            "census size",
            census.len() == 7,
            format!(
                "found {} self-dual codes, the corrected count is 7",
                census.len()
            ),
        ));
    } else {
        report.checks.push(check(
            "census size",
            true,
            format!(
                "found {} self-dual codes (recorded, no external reference)",
                census.len()
            ),
        ));
    }
    Ok(report)
}

/// Local ideal tables plus, when feasible, a stream length check.
fn verify_cyclic(n: u64) -> core::Result<CheckReport> {
    let mut report = core::verify_cyclic_local_ideals(n)?;
    let count = count_cyclic_odd(n)?;
    if count <= BigUint::from(1_000_000u32) {
        let streamed = enumerate_cyclic_odd(n)?.count();
        report.checks.push(check(
            "stream length",
            BigUint::from(streamed as u64) == count,
            format!("streamed {streamed} codes, formula gives {count}"),
        ));
    }
    Ok(report)
}

fn run_report(table: Table, format: Format) -> core::Result<()> {
    match table {
        Table::Counts2n => {
            let rows: Vec<(u64, BigUint)> = (3..=21u64)
                .step_by(2)
                .map(|n| Ok((n, count_negacyclic(n, 1)?)))
                .collect::<core::Result<_>>()?;
            emit_rows("n", rows, format);
        }
        Table::NList => {
            // length 2^(e-1) for nilpotency exponent e = 1..7; at e = 1 the
            // ambient is the coefficient ring itself with 7 ideals
            let rows: Vec<(u64, BigUint)> = (1..=7u32)
                .map(|e| {
                    let length = 1u64 << (e - 1);
                    let count = if e == 1 {
                        count_cyclic_odd(1).expect("length 1 is odd")
                    } else {
                        count_local_ideals(1, e - 1)
                    };
                    (length, count)
                })
                .collect();
            emit_rows("length", rows, format);
        }
    }
    Ok(())
}

fn emit_rows(key: &str, rows: Vec<(u64, BigUint)>, format: Format) {
    match format {
        Format::Table => {
            println!("{key:<8} count");
            for (v, c) in rows {
                println!("{v:<8} {c}");
            }
        }
        Format::Csv => {
            println!("{key},count");
            for (v, c) in rows {
                println!("{v},{c}");
            }
        }
        Format::Jsonl => {
            for (v, c) in rows {
                println!("{}", serde_json::json!({ key: v, "count": c.to_string() }));
            }
        }
    }
}
