//! Command-line front end.
//!
//! Exit status: `0` when every check passed, `1` when a mathematical
//! discrepancy was found, `2` on a usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::characters::{self, Discrepancy, IdentityReport};
use crate::partitions::count_partitions_at_most;
use crate::qp::{self, BasisKind};
use crate::series::TruncatedSeries;

pub const FORMAT_ENV: &str = "QPBASIS_FORMAT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    L,
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fermionic,
    Product,
    Enumerate,
}

#[derive(Debug, Parser)]
#[command(
    name = "qpbasis",
    version,
    about = "Quasi-particle bases and characters for principal subspaces of B2(1)"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    pub format: Format,

    /// Write the artifact here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for enumeration and fermionic sums.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// Upper limit on the estimated work (pairs of charge-types, or
    /// emitted monomials) a command may take on.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub budget: u128,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a character series.
    Char {
        #[arg(long = "module", value_enum, ignore_case = true)]
        module: ModuleKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        level: Option<u32>,
        #[arg(long)]
        qmax: u32,
        #[arg(long, value_enum, default_value = "fermionic")]
        method: Method,
    },
    /// Dump every basis monomial of weight at most qmax.
    Basis {
        #[arg(long = "module", value_enum, ignore_case = true)]
        module: ModuleKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        level: Option<u32>,
        #[arg(long)]
        qmax: u32,
    },
    /// Check the product/fermionic identity and the level-k characters.
    Verify {
        #[arg(long)]
        qmax: u32,
        #[arg(long, value_delimiter = ',', default_values_t = vec![1u32, 2, 3])]
        levels: Vec<u32>,
    },
    /// Check the charge-type / dual-charge-type exponent identities.
    LemmaCheck {
        #[arg(long)]
        rmax: u32,
    },
    /// Emit the PBW graded dimension table.
    Oracle {
        #[arg(long)]
        qmax: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Discrepancy,
    Usage,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Discrepancy => 1,
            Status::Usage => 2,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] crate::Error),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// Errors never carry a mathematical verdict, so all of them map to the
    /// usage status.
    pub fn status(&self) -> Status {
        Status::Usage
    }
}

#[derive(Debug)]
pub struct RunOutput {
    pub status: Status,
    pub artifact: String,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn basis_kind(module: ModuleKind, level: Option<u32>) -> Result<BasisKind, CliError> {
    match (module, level) {
        (ModuleKind::N, _) => Ok(BasisKind::N),
        (ModuleKind::L, Some(k)) => Ok(BasisKind::L(k)),
        (ModuleKind::L, None) => Err(usage("--module L requires --level")),
    }
}

fn cumulative_partitions(n: u32) -> u128 {
    count_partitions_at_most(n, n as usize).iter().sum()
}

/// Pairs of (dual-)charge-types visited by enumeration and fermionic sums.
fn pair_work(qmax: u32) -> u128 {
    cumulative_partitions(qmax).saturating_mul(cumulative_partitions(2 * qmax))
}

fn check_budget(work: u128, budget: u128) -> Result<(), CliError> {
    if work > budget {
        return Err(usage(format!(
            "estimated work {work} exceeds the budget {budget}; lower the truncation or raise --budget"
        )));
    }
    Ok(())
}

fn series_artifact(s: &TruncatedSeries, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => format!("{s}\n"),
        Format::Json => s.to_json()? + "\n",
        Format::Csv => s.to_csv()?,
    })
}

#[derive(Serialize)]
struct LevelCheck {
    level: u32,
    equal: bool,
    checked_coefficients: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_discrepancy: Option<Discrepancy>,
}

#[derive(Serialize)]
struct VerifyReport {
    #[serde(flatten)]
    identity: IdentityReport,
    levels: Vec<LevelCheck>,
}

fn describe(d: &Option<Discrepancy>) -> String {
    match d {
        None => String::new(),
        Some(d) => format!(
            " (first discrepancy at q^{}*y1^{}*y2^{}: {} vs {})",
            d.m, d.r1, d.r2, d.lhs, d.rhs
        ),
    }
}

fn run_char(
    kind: BasisKind,
    qmax: u32,
    method: Method,
    format: Format,
) -> Result<String, CliError> {
    let s = match (method, kind) {
        (Method::Product, BasisKind::N) => characters::ch_wn_product(qmax),
        (Method::Product, BasisKind::L(_)) => {
            return Err(usage("--method product is only available for --module N"))
        }
        (Method::Fermionic, BasisKind::N) => characters::ch_wn_fermionic(qmax),
        (Method::Fermionic, BasisKind::L(k)) => characters::ch_wl_fermionic(k, qmax)?,
        (Method::Enumerate, kind) => qp::enumerate_basis(kind, qmax).to_series(qmax),
    };
    series_artifact(&s, format)
}

fn run_basis(kind: BasisKind, qmax: u32, format: Format) -> Result<String, CliError> {
    let monomials = qp::basis_monomials(kind, qmax);
    Ok(match format {
        Format::Text => monomials.iter().fold(String::new(), |mut out, b| {
            let _ = writeln!(out, "{b}");
            out
        }),
        Format::Json => {
            let records: Vec<_> = monomials.iter().map(|b| b.to_records()).collect();
            serde_json::to_string_pretty(&records).map_err(crate::Error::from)? + "\n"
        }
        Format::Csv => {
            let mut out = String::from("index,color,charge,mode\n");
            for (i, b) in monomials.iter().enumerate() {
                for r in b.to_records() {
                    let _ = writeln!(out, "{i},{},{},{}", r.color, r.charge, r.mode);
                }
            }
            out
        }
    })
}

fn run_verify(qmax: u32, levels: &[u32], format: Format) -> Result<(Status, String), CliError> {
    if levels.contains(&0) {
        return Err(usage("levels must be at least 1"));
    }
    let identity = characters::verify_rr_identity(qmax);
    let mut checks = Vec::new();
    for &k in levels {
        let fermionic = characters::ch_wl_fermionic(k, qmax)?;
        let enumerated = qp::enumerate_basis(BasisKind::L(k), qmax).to_series(qmax);
        let r = characters::compare_series(qmax, &fermionic, &enumerated);
        checks.push(LevelCheck {
            level: k,
            equal: r.equal,
            checked_coefficients: r.checked_coefficients,
            first_discrepancy: r.first_discrepancy,
        });
    }
    let all_equal = identity.equal && checks.iter().all(|c| c.equal);
    let artifact = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "qmax: {qmax}");
            let _ = writeln!(
                out,
                "identity: equal: {} ({} coefficients){}",
                identity.equal,
                identity.checked_coefficients,
                describe(&identity.first_discrepancy)
            );
            for c in &checks {
                let _ = writeln!(
                    out,
                    "level {}: equal: {} ({} coefficients){}",
                    c.level,
                    c.equal,
                    c.checked_coefficients,
                    describe(&c.first_discrepancy)
                );
            }
            let _ = writeln!(out, "equal: {all_equal}");
            out
        }
        Format::Json => {
            let report = VerifyReport {
                identity,
                levels: checks,
            };
            serde_json::to_string_pretty(&report).map_err(crate::Error::from)? + "\n"
        }
        Format::Csv => return Err(usage("verify supports --format text or json")),
    };
    Ok((
        if all_equal {
            Status::Success
        } else {
            Status::Discrepancy
        },
        artifact,
    ))
}

fn run_lemma(rmax: u32, format: Format) -> Result<(Status, String), CliError> {
    let sweep = characters::lemma41_sweep(rmax);
    let artifact = match format {
        Format::Text => {
            let mut out = format!(
                "rmax: {rmax}\ncases: {}\nfailures: {}\n",
                sweep.cases,
                sweep.failures.len()
            );
            for (a, b) in &sweep.failures {
                let _ = writeln!(out, "  charge1 {a} charge2 {b}");
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&sweep).map_err(crate::Error::from)? + "\n",
        Format::Csv => return Err(usage("lemma-check supports --format text or json")),
    };
    Ok((
        if sweep.passed() {
            Status::Success
        } else {
            Status::Discrepancy
        },
        artifact,
    ))
}

fn run_oracle(qmax: u32, format: Format) -> Result<String, CliError> {
    let t = crate::oracle::pbw_graded_dims(qmax);
    Ok(match format {
        Format::Text => t.to_string(),
        Format::Json => t.to_json()? + "\n",
        Format::Csv => {
            let mut buf = Vec::new();
            t.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("csv output is utf-8")
        }
    })
}

fn dispatch(config: &RunConfig) -> Result<RunOutput, CliError> {
    let ok = |artifact| RunOutput {
        status: Status::Success,
        artifact,
    };
    match &config.command {
        Command::Char {
            module,
            level,
            qmax,
            method,
        } => {
            let kind = basis_kind(*module, *level)?;
            check_budget(pair_work(*qmax), config.budget)?;
            run_char(kind, *qmax, *method, config.format).map(ok)
        }
        Command::Basis {
            module,
            level,
            qmax,
        } => {
            let kind = basis_kind(*module, *level)?;
            check_budget(pair_work(*qmax), config.budget)?;
            // the N basis is the largest; its size bounds the dump
            let size: u128 = crate::oracle::pbw_graded_dims(*qmax)
                .iter()
                .map(|(_, c)| u128::from(c))
                .sum();
            check_budget(size, config.budget)?;
            run_basis(kind, *qmax, config.format).map(ok)
        }
        Command::Verify { qmax, levels } => {
            check_budget(pair_work(*qmax), config.budget)?;
            let (status, artifact) = run_verify(*qmax, levels, config.format)?;
            Ok(RunOutput { status, artifact })
        }
        Command::LemmaCheck { rmax } => {
            let n = cumulative_partitions(*rmax);
            check_budget(n.saturating_mul(n), config.budget)?;
            let (status, artifact) = run_lemma(*rmax, config.format)?;
            Ok(RunOutput { status, artifact })
        }
        Command::Oracle { qmax } => {
            let q = u128::from(*qmax) + 1;
            check_budget(q.pow(4), config.budget)?;
            run_oracle(*qmax, config.format).map(ok)
        }
    }
}

/// Runs one command and returns its artifact without writing it anywhere.
pub fn run(config: &RunConfig) -> Result<RunOutput, CliError> {
    match config.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n as usize)
                .build()
                .map_err(|e| usage(format!("cannot start {n} threads: {e}")))?;
            pool.install(|| dispatch(config))
        }
        None => dispatch(config),
    }
}

/// Runs a command and writes its artifact to `--output` or stdout.
pub fn execute(config: &RunConfig) -> Result<Status, CliError> {
    let out = run(config)?;
    match &config.output {
        Some(path) => std::fs::write(path, &out.artifact).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?,
        None => print!("{}", out.artifact),
    }
    Ok(out.status)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("qpbasis").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn product_character_text() {
        let out = run(&config(&[
            "char", "--module", "N", "--qmax", "1", "--method", "product",
        ]))
        .unwrap();
        assert_eq!(out.artifact, "1 + q(y1 + y2 + y1*y2 + y1*y2^2)\n");
        assert_eq!(out.status, Status::Success);
    }

    #[test]
    fn exit_codes_and_discrepancy_text() {
        let codes: Vec<u8> = [Status::Success, Status::Discrepancy, Status::Usage]
            .iter()
            .map(|s| s.code())
            .collect();
        assert_eq!(codes, [0, 1, 2]);
        let report = characters::verify_rr_identity_perturbed(
            3,
            characters::CrossTermPerturbation {
                s: 1,
                t: 1,
                delta: 1,
            },
        );
        let text = describe(&report.first_discrepancy);
        assert!(text.starts_with(" (first discrepancy at q^"), "{text}");
    }

    #[test]
    fn level_required_for_l() {
        let err = run(&config(&["basis", "--module", "L", "--qmax", "2"])).unwrap_err();
        assert_eq!(err.status(), Status::Usage);
        assert!(err.to_string().contains("--level"));
    }

    #[test]
    fn product_rejected_for_l() {
        let err = run(&config(&[
            "char", "--module", "L", "--level", "1", "--qmax", "2", "--method", "product",
        ]))
        .unwrap_err();
        assert!(matches!(err, CliError::Usage(_)));
    }

    #[test]
    fn budget_rejects_up_front() {
        let err = run(&config(&["verify", "--qmax", "40", "--budget", "1000"])).unwrap_err();
        assert!(err.to_string().contains("budget"));
    }

    #[test]
    fn global_flags_after_subcommand() {
        let c = config(&["oracle", "--qmax", "1", "--format", "csv", "--threads", "2"]);
        assert_eq!(c.format, Format::Csv);
        assert_eq!(c.threads, Some(2));
        let out = run(&c).unwrap();
        assert!(out.artifact.starts_with("m,r1,r2,dim\n0,0,0,1\n"));
    }

    #[test]
    fn verify_rejects_csv() {
        assert!(run(&config(&["verify", "--qmax", "1", "--format", "csv"])).is_err());
    }
}
