//! Command-line front end: ring description files in, component groups,
//! oracle cross-checks, Witt tabulations, and product comparisons out.
//!
//! Exit codes: 0 success, 1 ring axiom failure, 2 unsupported input,
//! 3 internal cross-check mismatch.

mod report;
mod spec_file;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use report::{
    bracket, to_json, ComputeReport, DefectReport, OracleReport, SpanRecord, ValidateReport,
    WittReport,
};
use spec_file::{load_ring, RingSpecFile};
use thrfix::abgroup::IntMatrix;
use thrfix::geomfix::{
    norm_quotient, pi0_with_enumeration_cap, product_defect, relation_subgroup, Method,
    RelationStrategy,
};
use thrfix::oracle::{brute_force_relation_subgroup, coequalizer_pi0, homology_H1};
use thrfix::ring_inv::construct::{
    cyclic_group_table, cyclic_ring, finite_field, gaussian_integers, group_ring, matrix_ring,
    product, quaternion_ring, truncated_polynomial, FieldInvolution,
};
use thrfix::ring_inv::RingWithInvolution;
use thrfix::witt::{compare_with_geomfix, witt_group_structure};
use thrfix::{Error, DEFAULT_ENUMERATION_CAP};

#[derive(Parser)]
#[command(
    name = "thrfix",
    version,
    about = "Component group of the involutive fixed points of a ring with anti-involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a ring file against the ring-with-involution axioms.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute the component group of a ring file (a directory of files
    /// with --batch).
    Compute {
        path: PathBuf,
        /// linear, enumerate, coequalizer, or all.
        #[arg(long, default_value = "all")]
        method: String,
        /// Include pure-tensor representatives of a basis.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
        /// Treat PATH as a directory and process every .json file in it.
        #[arg(long)]
        batch: bool,
        /// Enumeration bound for the exhaustive method (overrides
        /// THRFIX_MAX_ENUM).
        #[arg(long)]
        max_enum: Option<u64>,
    },
    /// Run the independent oracles and report every cross-check.
    Oracle {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        max_enum: Option<u64>,
    },
    /// Tabulate the length-2 Witt group and compare it with the component
    /// group.
    Witt {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the component group of a product with the product of
    /// component groups.
    Defect {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a built-in ring family as a ring file on standard output.
    Builtin {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Z/n, or Z when n = 0.
    #[command(name = "cyclic")]
    Cyclic {
        #[arg(long)]
        n: u64,
    },
    /// The field with p^k elements.
    #[command(name = "finite_field")]
    FiniteField {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Use the order-2 field automorphism instead of the identity.
        #[arg(long)]
        frobenius: bool,
    },
    /// base[x]/(x^k); the base defaults to F2.
    #[command(name = "trunc_poly")]
    TruncPoly {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// k x k matrices over the base with the transpose involution; the
    /// base defaults to F2.
    #[command(name = "matrix")]
    Matrix {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Group ring of the cyclic group of order m with the inversion
    /// involution; the base defaults to F2.
    #[command(name = "group_ring")]
    GroupRing {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Product of two ring files with the componentwise involution.
    #[command(name = "product")]
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// The Gaussian integers with complex conjugation.
    #[command(name = "gaussian")]
    Gaussian,
    /// Quaternions over Z/n (over Z when n = 0) with conjugation.
    #[command(name = "quaternion")]
    Quaternion {
        #[arg(long)]
        n: u64,
    },
}

enum CliError {
    Validation(String),
    Core(Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Core(e) => e.exit_code(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "validation failed: {}", msg),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(e.exit_code());
        }
    }
}

fn run(command: Command) -> CliResult<i32> {
    match command {
        Command::Validate { path, json } => cmd_validate(&path, json),
        Command::Compute {
            path,
            method,
            witness,
            json,
            batch,
            max_enum,
        } => {
            let method = method
                .parse::<Method>()
                .map_err(|msg| CliError::Core(Error::Input(msg)))?;
            let cap = enumeration_cap(max_enum)?;
            if batch {
                cmd_compute_batch(&path, method, cap, witness, json)
            } else {
                let report = compute_one(&path, method, cap, witness)?;
                emit(&report, json, ComputeReport::human);
                Ok(0)
            }
        }
        Command::Oracle {
            path,
            json,
            max_enum,
        } => {
            let cap = enumeration_cap(max_enum)?;
            cmd_oracle(&path, cap, json)
        }
        Command::Witt { path, json } => cmd_witt(&path, json),
        Command::Defect { left, right, json } => cmd_defect(&left, &right, json),
        Command::Builtin { family } => cmd_builtin(family),
    }
}

fn emit<T: Serialize>(report: &T, json: bool, human: impl Fn(&T) -> String) {
    if json {
        write_stdout(&to_json(report));
    } else {
        write_stdout(&format!("{}\n", human(report)));
    }
}

/// Write to stdout; a closed pipe (the reader stopped early) is a quiet
/// success, any other write failure is an environment error.
fn write_stdout(text: &str) {
    let mut out = io::stdout().lock();
    let outcome = out.write_all(text.as_bytes()).and_then(|_| out.flush());
    if let Err(e) = outcome {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to standard output: {}", e);
        std::process::exit(2);
    }
}

/// Enumeration bound: the --max-enum flag wins, then THRFIX_MAX_ENUM, then
/// the library default.
fn enumeration_cap(flag: Option<u64>) -> CliResult<u64> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var("THRFIX_MAX_ENUM") {
        Ok(s) => s.trim().parse::<u64>().map_err(|_| {
            CliError::Core(Error::Input(format!(
                "THRFIX_MAX_ENUM must be a non-negative integer, got {:?}",
                s
            )))
        }),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

/// Load a ring file and require it to satisfy every ring axiom.
fn load_checked(path: &Path) -> CliResult<RingWithInvolution> {
    let ring = load_ring(path)?;
    let report = ring.validate();
    if !report.passed() {
        let summary = report
            .failures
            .iter()
            .map(|f| format!("{:?} at {:?}: {}", f.axiom, f.witness, f.detail))
            .collect::<Vec<_>>()
            .join("; ");
        return Err(CliError::Validation(format!(
            "{}: {}",
            ring.name(),
            summary
        )));
    }
    Ok(ring)
}

fn cmd_validate(path: &Path, json: bool) -> CliResult<i32> {
    let ring = load_ring(path)?;
    let axioms = ring.validate();
    let report = ValidateReport::new(ring.name(), &axioms);
    emit(&report, json, ValidateReport::human);
    Ok(if axioms.passed() { 0 } else { 1 })
}

fn compute_one(path: &Path, method: Method, cap: u64, witness: bool) -> CliResult<ComputeReport> {
    let ring = load_checked(path)?;
    let result = pi0_with_enumeration_cap(&ring, method, cap)?;
    Ok(ComputeReport::new(&ring, &result, witness))
}

#[derive(Serialize)]
#[serde(untagged)]
enum BatchEntry {
    Ok {
        file: String,
        report: ComputeReport,
    },
    Failed {
        file: String,
        error: String,
        exit_code: i32,
    },
}

fn cmd_compute_batch(
    dir: &Path,
    method: Method,
    cap: u64,
    witness: bool,
    json: bool,
) -> CliResult<i32> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::Input(format!("cannot read {}: {}", dir.display(), e)))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort_by_key(|p| p.file_name().map(|s| s.to_owned()));
    if files.is_empty() {
        return Err(Error::Input(format!("no .json files in {}", dir.display())).into());
    }
    let mut worst = 0;
    let mut entries = Vec::new();
    let mut sections = Vec::new();
    for path in &files {
        let file = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match compute_one(path, method, cap, witness) {
            Ok(report) => {
                if json {
                    entries.push(BatchEntry::Ok { file, report });
                } else {
                    sections.push(format!("== {}\n{}", file, report.human()));
                }
            }
            Err(e) => {
                worst = worst.max(e.exit_code());
                if json {
                    entries.push(BatchEntry::Failed {
                        file,
                        error: e.to_string(),
                        exit_code: e.exit_code(),
                    });
                } else {
                    sections.push(format!("== {}\nerror: {}", file, e));
                }
            }
        }
    }
    if json {
        write_stdout(&to_json(&entries));
    } else {
        write_stdout(&format!("{}\n", sections.join("\n\n")));
    }
    Ok(worst)
}

fn cmd_oracle(path: &Path, cap: u64, json: bool) -> CliResult<i32> {
    let ring = load_checked(path)?;
    let h1 = homology_H1(&ring)?;
    let nq = norm_quotient(&ring)?;
    let h1_factors = h1.invariant_factors();
    let q_factors = nq.invariant_factors();
    let linear = pi0_with_enumeration_cap(&ring, Method::Linear, cap)?;
    let coeq = coequalizer_pi0(&ring)?;
    if coeq.invariant_factors != linear.invariant_factors {
        return Err(Error::CrossCheck(format!(
            "{}: coequalizer gives {} but linear gives {}",
            ring.name(),
            bracket(&coeq.invariant_factors),
            bracket(&linear.invariant_factors)
        ))
        .into());
    }
    let enumerable = ring
        .ring_order()
        .is_some_and(|order| order <= BigInt::from(cap));
    let spans = if enumerable {
        let lin_span = relation_subgroup(&nq, RelationStrategy::Linear, cap)?;
        let brute = brute_force_relation_subgroup(&nq, cap)?;
        if !lin_span.same_span(&brute) {
            return Err(Error::CrossCheck(format!(
                "{}: linear relation span (rank {}) differs from the exhaustive one (rank {})",
                ring.name(),
                lin_span.rank(),
                brute.rank()
            ))
            .into());
        }
        Some(SpanRecord {
            linear_rank: lin_span.rank(),
            exhaustive_rank: brute.rank(),
            matches: true,
        })
    } else {
        None
    };
    let report = OracleReport {
        ring: ring.name().to_string(),
        h1: h1_factors.iter().map(Into::into).collect(),
        norm_quotient: q_factors.iter().map(Into::into).collect(),
        homology_matches: h1_factors == q_factors,
        linear: linear.invariant_factors.iter().map(Into::into).collect(),
        coequalizer: coeq.invariant_factors.iter().map(Into::into).collect(),
        coequalizer_matches: true,
        spans,
    };
    emit(&report, json, OracleReport::human);
    Ok(0)
}

fn cmd_witt(path: &Path, json: bool) -> CliResult<i32> {
    let ring = load_checked(path)?;
    let witt = witt_group_structure(&ring)?;
    let comparison = if *ring.involution_matrix() == IntMatrix::identity(ring.rank()) {
        Some(compare_with_geomfix(&ring)?)
    } else {
        None
    };
    let report = WittReport::new(&ring, &witt, comparison.as_ref());
    emit(&report, json, WittReport::human);
    Ok(0)
}

fn cmd_defect(left: &Path, right: &Path, json: bool) -> CliResult<i32> {
    let left = load_checked(left)?;
    let right = load_checked(right)?;
    let defect = product_defect(&left, &right)?;
    let report = DefectReport::new(&left, &right, &defect);
    emit(&report, json, DefectReport::human);
    Ok(0)
}

fn base_or_f2(path: Option<&Path>) -> CliResult<RingWithInvolution> {
    match path {
        Some(p) => load_checked(p),
        None => Ok(finite_field(2, 1, FieldInvolution::Identity).expect("F2 is constructible")),
    }
}

fn cmd_builtin(family: Family) -> CliResult<i32> {
    let ring = match family {
        Family::Cyclic { n } => cyclic_ring(n),
        Family::FiniteField { p, k, frobenius } => {
            let involution = if frobenius {
                FieldInvolution::FrobeniusHalf
            } else {
                FieldInvolution::Identity
            };
            finite_field(p, k, involution)?
        }
        Family::TruncPoly { k, base } => {
            if k == 0 {
                return Err(Error::Input("truncation length must be at least 1".into()).into());
            }
            truncated_polynomial(&base_or_f2(base.as_deref())?, k)
        }
        Family::Matrix { k, base } => {
            if k == 0 {
                return Err(Error::Input("matrix size must be at least 1".into()).into());
            }
            matrix_ring(&base_or_f2(base.as_deref())?, k)
        }
        Family::GroupRing { m, base } => {
            if m == 0 {
                return Err(Error::Input("group order must be at least 1".into()).into());
            }
            group_ring(&base_or_f2(base.as_deref())?, &cyclic_group_table(m))?
        }
        Family::Product { left, right } => product(&load_checked(&left)?, &load_checked(&right)?),
        Family::Gaussian => gaussian_integers(),
        Family::Quaternion { n } => quaternion_ring(n),
    };
    write_stdout(&RingSpecFile::from_ring(&ring).to_json());
    Ok(0)
}
