//! `adreal`: exact reality decisions and reversing certificates from the
//! command line. All numbers travel as exact strings such as `"-3/2+1/2*i"`.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adreal::jc::jordan_chevalley;
use adreal::liecore::algebra_member;
use adreal::matlin::is_semisimple;
use adreal::oracle::{search_reverser, SearchOutcome};
use adreal::selftest::{run_all, run_one, seed_from_env};
use adreal::spfull::{chain_decomposition, reverse_full, sl2_triple};
use adreal::ssreal::{decide_semisimple, witness_general_semisimple};
use adreal::verify::verify_certificate;
use adreal::{
    Algebra, Error, ExactMatrix, LieContext, RealityVerdict, Reason, ReverserCertificate, Tri,
};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "adreal",
    version,
    about = "Exact adjoint-reality decisions and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Element {
    /// Context as JSON, e.g. '{"algebra":"sl","group":"SL","n":2}'
    #[arg(long)]
    ctx: String,
    /// JSON file holding the matrix
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Args)]
struct MatrixOnly {
    /// JSON file holding the matrix
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Decide reality and strong reality of an element
    Decide(Element),
    /// Build a reversing certificate
    Witness {
        #[command(flatten)]
        element: Element,
        /// Require an involutive reverser
        #[arg(long)]
        involution: bool,
        /// Write the certificate here instead of standard output
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file with exact arithmetic
    Verify {
        /// Certificate JSON file
        certificate: PathBuf,
    },
    /// Jordan–Chevalley decomposition
    Jordan(MatrixOnly),
    /// sl2-triple through a nilpotent element of sp(n)
    Sl2(MatrixOnly),
    /// Chain data of a nilpotent element of sp(n)
    Chains(MatrixOnly),
    /// Bounded-height reverser search (evidence only)
    Search {
        #[command(flatten)]
        element: Element,
        /// Coefficient height bound
        #[arg(long, default_value_t = 2)]
        height: u32,
        /// Only accept involutions
        #[arg(long)]
        involution: bool,
    },
    /// Run the acceptance suites (seed from SEED, default 0)
    Selftest {
        /// Run a single criterion (1..=8)
        #[arg(long)]
        criterion: Option<usize>,
    },
}

/// How a command ended, mapped to the process exit code.
enum Outcome {
    Positive,
    Negative,
    Invalid,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Positive => ExitCode::SUCCESS,
            Outcome::Negative => ExitCode::from(1),
            Outcome::Invalid => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => outcome.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Accepts the `{"rows", "cols", "entries"}` form or a bare array of rows;
/// integer entries may be JSON numbers.
fn parse_matrix(value: Value) -> Result<ExactMatrix> {
    let value = match value {
        Value::Array(rows) => {
            let rows: Vec<Value> = rows.into_iter().map(stringify_row).collect::<Result<_>>()?;
            let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
            json!({ "rows": rows.len(), "cols": cols, "entries": rows })
        }
        Value::Object(mut obj) => {
            if let Some(entries) = obj.remove("entries") {
                let rows = match entries {
                    Value::Array(rows) => rows
                        .into_iter()
                        .map(stringify_row)
                        .collect::<Result<Vec<_>>>()?,
                    _ => bail!("`entries` must be an array of rows"),
                };
                obj.insert("entries".into(), Value::Array(rows));
            }
            Value::Object(obj)
        }
        _ => bail!("matrix must be a JSON object or an array of rows"),
    };
    serde_json::from_value(value).context("invalid matrix")
}

fn stringify_row(row: Value) -> Result<Value> {
    let Value::Array(items) = row else {
        bail!("each matrix row must be an array")
    };
    let items = items
        .into_iter()
        .map(|v| match v {
            Value::String(s) => Ok(Value::String(s)),
            Value::Number(n) if n.is_i64() || n.is_u64() => Ok(Value::String(n.to_string())),
            other => bail!("matrix entries must be exact strings or integers, found {other}"),
        })
        .collect::<Result<_>>()?;
    Ok(Value::Array(items))
}

fn load_element(e: &Element) -> Result<(ExactMatrix, LieContext)> {
    let ctx: LieContext = serde_json::from_str(&e.ctx).context("invalid --ctx")?;
    let x = parse_matrix(read_json(&e.matrix)?)?;
    let size = ctx.matrix_size();
    if x.rows() != size || x.cols() != size {
        bail!(
            "matrix is {}x{}, context {ctx} needs {size}x{size}",
            x.rows(),
            x.cols()
        );
    }
    if !algebra_member(&x, &ctx)? {
        bail!("matrix does not lie in the algebra of {ctx}");
    }
    Ok((x, ctx))
}

fn load_matrix(m: &MatrixOnly) -> Result<ExactMatrix> {
    parse_matrix(read_json(&m.matrix)?)
}

fn decide(x: &ExactMatrix, ctx: &LieContext) -> Result<RealityVerdict> {
    if is_semisimple(x)? {
        return Ok(decide_semisimple(x, ctx)?);
    }
    if ctx.algebra() == Algebra::Sp {
        // every element of sp(n) is reversed inside Sp(n)
        let mut cert = reverse_full(x)?;
        cert.context = *ctx;
        return Ok(RealityVerdict {
            real: Tri::Yes,
            strongly_real: Tri::Undetermined,
            reason: Reason::Unclassified,
            witness: Some(cert),
        });
    }
    bail!(Error::NotSemisimple)
}

fn witness(
    x: &ExactMatrix,
    ctx: &LieContext,
    involution: bool,
) -> adreal::Result<ReverserCertificate> {
    if is_semisimple(x)? {
        return witness_general_semisimple(x, ctx, involution);
    }
    if ctx.algebra() == Algebra::Sp && !involution {
        let mut cert = reverse_full(x)?;
        cert.context = *ctx;
        return Ok(cert);
    }
    if ctx.algebra() == Algebra::Sp {
        return Err(Error::NotRealizable(Reason::Unclassified));
    }
    Err(Error::NotSemisimple)
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Decide(e) => {
            let (x, ctx) = load_element(&e)?;
            let verdict = decide(&x, &ctx)?;
            print(&verdict)?;
            Ok(if verdict.real == Tri::Yes {
                Outcome::Positive
            } else {
                Outcome::Negative
            })
        }
        Command::Witness {
            element,
            involution,
            out,
        } => {
            let (x, ctx) = load_element(&element)?;
            let cert = match witness(&x, &ctx, involution) {
                Ok(cert) => cert,
                Err(Error::NotRealizable(reason)) => {
                    print(&json!({ "status": "not_realizable", "reason": reason }))?;
                    return Ok(Outcome::Negative);
                }
                Err(e) => return Err(e.into()),
            };
            if let Err(v) = verify_certificate(&cert) {
                bail!("constructed certificate failed verification: {v}");
            }
            match out {
                Some(path) => {
                    fs::write(&path, serde_json::to_string_pretty(&cert)?)
                        .with_context(|| format!("writing {}", path.display()))?;
                    print(&json!({ "status": "written", "path": path }))?;
                }
                None => print(&cert)?,
            }
            Ok(Outcome::Positive)
        }
        Command::Verify { certificate } => {
            let cert: ReverserCertificate =
                serde_json::from_value(read_json(&certificate)?).context("invalid certificate")?;
            match verify_certificate(&cert) {
                Ok(()) => {
                    print(&json!({ "status": "pass" }))?;
                    Ok(Outcome::Positive)
                }
                Err(v) => {
                    print(&json!({ "status": "fail", "violation": v, "message": v.to_string() }))?;
                    Ok(Outcome::Invalid)
                }
            }
        }
        Command::Jordan(m) => {
            print(&jordan_chevalley(&load_matrix(&m)?)?)?;
            Ok(Outcome::Positive)
        }
        Command::Sl2(m) => {
            print(&sl2_triple(&load_matrix(&m)?)?)?;
            Ok(Outcome::Positive)
        }
        Command::Chains(m) => {
            let triple = sl2_triple(&load_matrix(&m)?)?;
            print(&chain_decomposition(&triple)?)?;
            Ok(Outcome::Positive)
        }
        Command::Search {
            element,
            height,
            involution,
        } => {
            let (x, ctx) = load_element(&element)?;
            let outcome = search_reverser(&x, &ctx, height, involution);
            print(&outcome)?;
            Ok(match outcome {
                SearchOutcome::Found { .. } => Outcome::Positive,
                SearchOutcome::Exhausted { .. } => Outcome::Negative,
            })
        }
        Command::Selftest { criterion } => {
            let seed = seed_from_env();
            let reports = match criterion {
                Some(k) => vec![run_one(k, seed).with_context(|| format!("no criterion {k}"))?],
                None => run_all(seed),
            };
            for r in &reports {
                eprintln!("{}", r.line());
            }
            print(&json!({ "seed": seed, "criteria": reports }))?;
            Ok(if reports.iter().all(|r| r.passed()) {
                Outcome::Positive
            } else {
                Outcome::Negative
            })
        }
    }
}
