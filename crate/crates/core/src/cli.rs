//! Command-line front end. `run` returns the process exit code.
//!
//! Exit codes: 0 ok, 1 usage, 2 data error, 3 internal inconsistency,
//! 4 closure cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::catalog::{builtin_catalog, Catalog, TorsionStructure};
use crate::classifier::{
    classify_j, classify_model, consistency_audit, ClassifierReport, ClassifyError, WeierstrassModel,
};
use crate::fixtures::{record_lines, CurveRecord};
use crate::groups::{self, GroupError, Nilpotency, CAP_ENV, DEFAULT_CAP};
use crate::numkernel::Rational;
use crate::selftest;

pub const OK: i32 = 0;
pub const USAGE: i32 = 1;
pub const DATA: i32 = 2;
pub const INCONSISTENT: i32 = 3;
pub const CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "torsion-atlas",
    version,
    about = "Torsion of rational elliptic curves over the compositum of D4 extensions"
)]
struct Cli {
    /// Largest group the closure routines may build (default 2^24).
    #[arg(long, global = true, value_name = "N", env = CAP_ENV, value_parser = clap::value_parser!(u64).range(1..))]
    max_closure: Option<u64>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one curve, given by a-invariants or by j.
    #[command(group = clap::ArgGroup::new("input").required(true).multiple(false))]
    Classify(ClassifyArgs),
    /// Classify a JSON-lines file of curve records.
    Batch(BatchArgs),
    /// Print the j-map catalog as JSON.
    Catalog,
    /// Order, exponent, nilpotency class and the D4-type verdict of a permutation group.
    GroupType {
        /// Generators in cycle notation, separated by ';'.
        #[arg(long)]
        gens: String,
    },
    /// Check the GL2 image claims at one modulus.
    AuditGl2 {
        #[arg(long, value_parser = ["3", "5", "9", "25"])]
        modulus: String,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Use this catalog file instead of the vendored one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Run only these criteria (comma-separated).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=10))]
        only: Vec<u8>,
    },
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// j-invariant as "p/q".
    #[arg(long, allow_hyphen_values = true, group = "input")]
    j: Option<String>,
    /// a1,a2,a3,a4,a6
    #[arg(long, allow_hyphen_values = true, group = "input")]
    ainvs: Option<String>,
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args, Debug)]
struct BatchArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 means one per core.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// Parses arguments and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => OK,
                _ => USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let cap = cli
        .max_closure
        .map_or(DEFAULT_CAP, |c| usize::try_from(c).unwrap_or(usize::MAX));
    let res = match cli.cmd {
        Command::Classify(a) => cmd_classify(a, out),
        Command::Batch(a) => cmd_batch(a, out),
        Command::Catalog => emit(out, builtin_catalog()),
        Command::GroupType { gens } => cmd_group_type(&gens, cap, out),
        Command::AuditGl2 { modulus } => cmd_audit_gl2(modulus.parse().expect("restricted by clap"), cap, out),
        Command::Selftest { catalog, only } => cmd_selftest(catalog, only, cap, out),
    };
    match res {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

struct Failure(i32, String);

type Outcome = Result<i32, Failure>;

fn io(e: std::io::Error) -> Failure {
    Failure(USAGE, e.to_string())
}

fn emit<T: Serialize + ?Sized>(out: &mut dyn Write, v: &T) -> Outcome {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure(INCONSISTENT, e.to_string()))?;
    writeln!(out, "{s}").map_err(io)?;
    Ok(OK)
}

fn classify_error(e: ClassifyError) -> Failure {
    match e {
        ClassifyError::InternalInconsistency(_) => Failure(INCONSISTENT, e.to_string()),
        _ => Failure(DATA, e.to_string()),
    }
}

fn group_error(e: GroupError) -> Failure {
    match e {
        GroupError::CapExceeded { .. } => Failure(CAP, e.to_string()),
        GroupError::UnsupportedModulus(_) => Failure(USAGE, e.to_string()),
        _ => Failure(INCONSISTENT, e.to_string()),
    }
}

fn parse_ainvs(s: &str) -> Result<[Rational; 5], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!("expected 5 comma-separated a-invariants, got {}", parts.len()));
    }
    let v = parts
        .iter()
        .map(|p| p.parse::<Rational>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(v.try_into().expect("length checked"))
}

/// Classifies a record. Models also go through the consistency audit.
pub fn classify_record(r: &CurveRecord, cat: &Catalog) -> Result<ClassifierReport, ClassifyError> {
    let mut rep = match (&r.ainvs, &r.j) {
        (Some(a), None) => {
            let m = WeierstrassModel::new(a.clone())?;
            let rep = classify_model(&m, cat)?;
            let v = consistency_audit(&m, &rep, cat);
            if !v.is_empty() {
                let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
                return Err(ClassifyError::InternalInconsistency(msgs.join("; ")));
            }
            rep
        }
        (None, Some(j)) => classify_j(j, cat)?,
        _ => {
            return Err(ClassifyError::InternalInconsistency(
                "record needs exactly one of ainvs and j".into(),
            ))
        }
    };
    rep.label = r.label.clone();
    Ok(rep)
}

fn cmd_classify(a: ClassifyArgs, out: &mut dyn Write) -> Outcome {
    let mut rec = CurveRecord {
        label: a.label,
        ainvs: None,
        j: None,
        expected: None,
    };
    if let Some(j) = a.j {
        rec.j = Some(j.parse().map_err(|e| Failure(DATA, format!("--j {j:?}: {e}")))?);
    }
    if let Some(s) = a.ainvs {
        rec.ainvs = Some(parse_ainvs(&s).map_err(|e| Failure(DATA, e))?);
    }
    let rep = classify_record(&rec, builtin_catalog()).map_err(classify_error)?;
    emit(out, &rep)
}

#[derive(Serialize)]
struct BatchRow {
    line: usize,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    report: Option<ClassifierReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<TorsionStructure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn batch_row(line: usize, text: &str, cat: &Catalog) -> (BatchRow, Option<i32>) {
    let mut row = BatchRow {
        line,
        report: None,
        label: None,
        expected: None,
        error: None,
    };
    let rec = match CurveRecord::parse(text, line) {
        Ok(r) => r,
        Err(e) => {
            row.error = Some(e.to_string());
            return (row, Some(DATA));
        }
    };
    row.expected = rec.expected;
    match classify_record(&rec, cat) {
        Ok(rep) => {
            let mismatch = rec.expected.filter(|&e| e != rep.chosen);
            row.report = Some(rep);
            if let Some(e) = mismatch {
                row.error = Some(format!("expected {e}"));
                return (row, Some(DATA));
            }
            (row, None)
        }
        Err(e) => {
            row.label = rec.label;
            let code = classify_error(e.clone()).0;
            row.error = Some(e.to_string());
            (row, Some(code))
        }
    }
}

fn cmd_batch(a: BatchArgs, out: &mut dyn Write) -> Outcome {
    let text = fs::read_to_string(&a.input).map_err(|e| Failure(USAGE, format!("{}: {e}", a.input.display())))?;
    let lines: Vec<(usize, &str)> = record_lines(&text).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Failure(INCONSISTENT, e.to_string()))?;
    let cat = builtin_catalog();
    let rows: Vec<(BatchRow, Option<i32>)> =
        pool.install(|| lines.par_iter().map(|&(n, l)| batch_row(n, l, cat)).collect());

    let mut buf = Vec::new();
    for (row, _) in &rows {
        serde_json::to_writer(&mut buf, row).map_err(|e| Failure(INCONSISTENT, e.to_string()))?;
        buf.push(b'\n');
    }
    match &a.out {
        Some(p) => fs::write(p, &buf).map_err(|e| Failure(USAGE, format!("{}: {e}", p.display())))?,
        None => out.write_all(&buf).map_err(io)?,
    }
    // Worst row wins: an inconsistency outranks a bad input line.
    Ok(rows.iter().filter_map(|(_, c)| *c).max().unwrap_or(OK))
}

fn cmd_group_type(gens: &str, cap: usize, out: &mut dyn Write) -> Outcome {
    let g = groups::parse_perm_group(gens).map_err(|e| Failure(DATA, e.to_string()))?;
    let order = groups::close(&g, cap).map_err(group_error)?.len();
    let exponent = groups::exponent(&g, cap).map_err(group_error)?;
    let class = match groups::nilpotency_class(&g, cap).map_err(group_error)? {
        Nilpotency::Class(c) => json!(c),
        Nilpotency::NotNilpotent => json!("NotNilpotent"),
    };
    let gen_d4_type = groups::is_gen_d4_type(&g, cap).map_err(group_error)?;
    emit(
        out,
        &json!({ "order": order, "exponent": exponent, "class": class, "gen_d4_type": gen_d4_type }),
    )
}

fn cmd_audit_gl2(n: u32, cap: usize, out: &mut dyn Write) -> Outcome {
    let a = selftest::gl2_audit(n, cap).map_err(group_error)?;
    emit(out, &a)?;
    Ok(if a.passed { OK } else { INCONSISTENT })
}

fn cmd_selftest(path: Option<PathBuf>, only: Vec<u8>, cap: usize, out: &mut dyn Write) -> Outcome {
    let owned;
    let cat: &Catalog = match path {
        Some(p) => {
            let text = fs::read_to_string(&p).map_err(|e| Failure(USAGE, format!("{}: {e}", p.display())))?;
            owned = Catalog::from_json(&text).map_err(|e| Failure(DATA, format!("catalog: {e}")))?;
            &owned
        }
        None => builtin_catalog(),
    };
    let n = selftest::preflight(cat).map_err(|e| Failure(DATA, format!("catalog integrity: {e}")))?;
    writeln!(out, "catalog integrity PASS ({n} factored forms, 3 spot rows)").map_err(io)?;
    let ids = if only.is_empty() { (1..=10).collect() } else { only };
    let mut all = true;
    for id in ids {
        let o = selftest::run(id, cat, cap).map_err(group_error)?;
        writeln!(out, "{o}").map_err(io)?;
        all &= o.passed;
    }
    Ok(if all { OK } else { INCONSISTENT })
}
