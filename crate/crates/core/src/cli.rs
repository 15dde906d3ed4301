//! Command-line front end. Every command prints one JSON document (DOT or CSV
//! where requested) followed by a newline.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a counterexample, 2 on a
//! usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blocks::{blocks, derived_equivalence_classes, derived_equivalence_classes_up_to, Block};
use crate::casimir::eigenvalue_table;
use crate::characters::{as_multiset, branch_r1, pieri_mult};
use crate::crystal::crystal_graph;
use crate::error::Error;
use crate::fock::{op_matrix, OpKind, SparseMatrix};
use crate::hecke::parse_expression;
use crate::partition::{p_core, p_weight, Modulus, Partition, Residue};
use crate::verify::{verify, Suite, VerifyReport, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "fockspace", version, about = "Exact Fock space, crystal, block and Hecke algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Crystal graph on partitions of size at most d.
    Crystal(CrystalArgs),
    /// Fock space operators.
    Fock {
        #[command(subcommand)]
        command: FockCommand,
    },
    /// Blocks of Λ_d and their grouping by e-weight.
    Blocks(BlocksArgs),
    /// e-core and e-weight of a partition.
    Core(CoreArgs),
    /// Casimir scalar and X/Y eigenvalues.
    Casimir(CasimirArgs),
    /// Branching of a Weyl character from n+1 to n variables (degree-one part).
    Branch(CharacterArgs),
    /// Tensoring a Weyl character with the standard character.
    Pieri(CharacterArgs),
    /// Degenerate affine Hecke algebra.
    Hecke {
        #[command(subcommand)]
        command: HeckeCommand,
    },
    /// Run property suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum FockCommand {
    /// Matrix of e_i, f_i or h_i on the degree-d piece.
    OpMatrix(OpMatrixArgs),
}

#[derive(Debug, Subcommand)]
enum HeckeCommand {
    /// Normal form y^a·w of an expression in y<k>, t<k>, integers, + - * and parentheses.
    NormalForm(NormalFormArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum JsonFormat {
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    E,
    F,
    H,
}

fn parse_modulus(s: &str) -> Result<Modulus, String> {
    s.parse::<Modulus>().map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct CrystalArgs {
    #[arg(long, value_parser = parse_modulus)]
    modulus: Modulus,
    #[arg(long = "max-size", visible_alias = "degree")]
    max_size: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
}

#[derive(Debug, Args)]
struct OpMatrixArgs {
    #[arg(long, value_enum)]
    op: Op,
    #[arg(long, allow_negative_numbers = true)]
    residue: i64,
    #[arg(long, value_parser = parse_modulus)]
    modulus: Modulus,
    #[arg(long, visible_alias = "max-size")]
    degree: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: MatrixFormat,
}

#[derive(Debug, Args)]
struct BlocksArgs {
    #[arg(long, value_parser = parse_modulus)]
    modulus: Modulus,
    #[arg(long, visible_alias = "max-size")]
    degree: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: JsonFormat,
    /// Group blocks of every degree up to d, not just degree d.
    #[arg(long)]
    across_degrees: bool,
}

#[derive(Debug, Args)]
struct CoreArgs {
    #[arg(long, value_parser = parse_modulus)]
    modulus: Modulus,
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
}

#[derive(Debug, Args)]
struct CasimirArgs {
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_modulus, default_value = "0")]
    modulus: Modulus,
}

#[derive(Debug, Args)]
struct CharacterArgs {
    #[arg(long, value_parser = parse_partition)]
    partition: Partition,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct NormalFormArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    expr: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_modulus)]
    modulus: Modulus,
    #[arg(long = "max-size", visible_alias = "degree")]
    max_size: usize,
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Include per-suite wall-clock times (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn matrix_json(m: &SparseMatrix) -> Value {
    json!({
        "rows": m.rows,
        "cols": m.cols,
        "entries": m.entries.iter().map(|(r, c, x)| json!([r, c, int_json(x)])).collect::<Vec<_>>(),
    })
}

fn matrix_csv(m: &SparseMatrix) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(e.to_string());
    w.write_record(["row", "col", "coeff"]).map_err(io)?;
    for (r, c, x) in &m.entries {
        w.write_record([m.rows[*r].to_string(), m.cols[*c].to_string(), x.to_string()]).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

#[derive(Serialize)]
struct BlockRef<'a> {
    degree: usize,
    core: &'a Partition,
    p_weight: usize,
}

fn blocks_json(args: &BlocksArgs) -> Result<String, Failure> {
    let bs = blocks(args.degree, args.modulus);
    let grouping = if args.modulus.is_zero() {
        None
    } else if args.across_degrees {
        Some(derived_equivalence_classes_up_to(args.degree, args.modulus)?)
    } else {
        Some(derived_equivalence_classes(args.degree, args.modulus)?)
    };
    let grouping = grouping.map(|classes: Vec<Vec<Block>>| {
        classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|b| json!(BlockRef { degree: b.degree, core: &b.core, p_weight: b.p_weight }))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    Ok(to_json(&json!({
        "modulus": args.modulus.value(),
        "degree": args.degree,
        "blocks": bs,
        "derived_equivalence": grouping,
    })))
}

/// Command output, and whether it reports a verification failure.
struct Output {
    text: String,
    failed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn execute(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Verify(a) => run_verify(a),
        other => execute_text(other).map(Output::from),
    }
}

fn run_verify(a: VerifyArgs) -> Result<Output, Failure> {
    let suites = Suite::parse(&a.suite).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown suite `{}` (expected one of kacmoody, serre, crystal, blocks, casimir, characters, hecke, all)",
            a.suite
        ))
    })?;
    let mut report = verify(&suites, a.modulus, a.max_size, a.seed);
    if !a.timings {
        report = report.without_timings();
    }
    Ok(report_output(&report))
}

fn report_output(report: &VerifyReport) -> Output {
    Output { text: to_json(report), failed: !report.passed() }
}

fn execute_text(command: Command) -> Result<String, Failure> {
    match command {
        Command::Crystal(a) => {
            let g = crystal_graph(a.modulus, a.max_size);
            Ok(match a.format {
                GraphFormat::Json => to_json(&g),
                GraphFormat::Dot => g.to_dot().trim_end().to_string(),
            })
        }
        Command::Fock { command: FockCommand::OpMatrix(a) } => {
            let i = Residue::new(a.residue, a.modulus)?;
            let kind = match a.op {
                Op::E => OpKind::E,
                Op::F => OpKind::F,
                Op::H => OpKind::H,
            };
            let m = op_matrix(kind, i, a.degree);
            match a.format {
                MatrixFormat::Json => Ok(to_json(&matrix_json(&m))),
                MatrixFormat::Csv => Ok(matrix_csv(&m)?.trim_end().to_string()),
            }
        }
        Command::Blocks(a) => blocks_json(&a),
        Command::Core(a) => Ok(to_json(&json!({
            "core": p_core(&a.partition, a.modulus),
            "p_weight": p_weight(&a.partition, a.modulus),
        }))),
        Command::Casimir(a) => Ok(to_json(&eigenvalue_table(&a.partition, a.n, a.modulus)?)),
        Command::Branch(a) => Ok(to_json(&as_multiset(&branch_r1(&a.partition, a.n)?)?)),
        Command::Pieri(a) => Ok(to_json(&as_multiset(&pieri_mult(&a.partition, a.n)?)?)),
        Command::Hecke { command: HeckeCommand::NormalForm(a) } => {
            if a.rank == 0 {
                return Err(Failure::Usage("rank must be at least 1".into()));
            }
            let h = parse_expression(&a.expr, a.rank)?;
            let terms: Vec<Value> = h
                .terms()
                .map(|(b, c)| {
                    json!({
                        "exponents": b.exponents,
                        "permutation": b.permutation.one_line(),
                        "coeff": int_json(c),
                    })
                })
                .collect();
            Ok(to_json(&terms))
        }
        Command::Verify(_) => unreachable!("handled by run_verify"),
    }
}

/// Parses `argv` (including the program name), runs the command and writes its
/// output. Returns the process exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok(output) => {
            if writeln!(out, "{}", output.text).is_err() {
                return 2;
            }
            i32::from(output.failed)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// [`run_with`] on stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{SuiteOutcome, SuiteParameters};

    #[test]
    fn failing_report_sets_the_failure_flag() {
        let outcome = SuiteOutcome {
            name: "blocks",
            parameters: SuiteParameters { modulus: 3, max_size: 4, seed: 7 },
            passed: false,
            checked: 12,
            counterexample: Some("weight_iff_core: [2] and [1,1]".into()),
            elapsed_ms: None,
        };
        let out = report_output(&VerifyReport { suites: vec![outcome] });
        assert!(out.failed);
        assert!(out.text.contains("\"counterexample\":\"weight_iff_core: [2] and [1,1]\""));
        assert!(!report_output(&VerifyReport { suites: vec![] }).failed);
    }
}
