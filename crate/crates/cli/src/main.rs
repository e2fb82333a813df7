//! `wreathfock`: command-line driver for the wreath-product Fock space library.
//!
//! Exit codes: 0 when every requested check passes, 1 on a failed check,
//! 2 on invalid input.

use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use wreathfock::fock::{graded_dim, hopf_verify};
use wreathfock::group::builtins::by_name;
use wreathfock::group::io::group_from_json;
use wreathfock::group::FiniteGroup;
use wreathfock::gset::{mckay_table, GSet};
use wreathfock::report::{Report, Status};
use wreathfock::scalars::{euler_product, graded_dim_series, TruncSeries};
use wreathfock::suite::{euler_verify, heisenberg_verify, lambda_verify, mackey_sweep};
use wreathfock::wreath::{brute_force_classes, enumerate_types, type_of, wreath_order};
use wreathfock::{Error, Exec};

/// Version tag carried by every JSON document this tool prints.
const SCHEMA: &str = "wreathfock/1";

#[derive(Parser)]
#[command(
    name = "wreathfock",
    version,
    about = "Exact computations in wreath-product Fock spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// builtin:<name>, a bare builtin name, or a path to a group JSON file.
    #[arg(long, global = true, default_value = "trivial")]
    group: String,
    /// pt, regular, or a path to a G-set JSON file.
    #[arg(long, global = true, default_value = "pt")]
    gset: String,
    #[arg(short = 'N', long = "max-degree", global = true, default_value_t = 4)]
    max_degree: usize,
    #[arg(short = 'M', long = "max-mode", global = true, default_value_t = 3)]
    max_mode: usize,
    /// Largest group (in elements) the brute-force oracles may build.
    #[arg(long, global = true, default_value_t = 50_000)]
    limit: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Add wall-clock timing to the output (makes it run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    /// Run the sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Finite group data.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Types and classes of G_n.
    #[command(subcommand)]
    Wreath(WreathCmd),
    /// Generating series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Info,
    Classes,
}

#[derive(Subcommand)]
enum WreathCmd {
    /// The types P_N(G_*).
    Types,
    /// Z_ρ and the class size |G_N| / Z_ρ for every type.
    Zrho,
    /// Brute-force conjugacy classes of G_N.
    Classes,
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Coefficients of prod (1 - q^r)^-e up to q^N.
    EulerProduct {
        #[arg(short = 'e', allow_negative_numbers = true)]
        e: i64,
    },
    /// dim_q F_G up to q^N, or the super Fock dimension with --d0/--d1.
    GradedDim {
        #[arg(long)]
        d0: Option<usize>,
        #[arg(long)]
        d1: Option<usize>,
    },
    /// McKay correspondence table for the binary polyhedral groups.
    Mckay,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Hopf,
    Lambda,
    Heisenberg,
    Euler,
    Mackey,
    All,
}

enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, &argv) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, argv: &[String]) -> Result<Outcome, Error> {
    let c = &cli.common;
    let start = Instant::now();
    let exec = if c.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match &cli.command {
        Command::Group(cmd) => {
            let g = load_group(&c.group, c.limit)?;
            let value = match cmd {
                GroupCmd::Info => json!({
                    "name": g.name(),
                    "order": g.order(),
                    "classes": g.num_classes(),
                    "exponent": g.exponent(),
                }),
                GroupCmd::Classes => Value::Array(
                    (0..g.num_classes())
                        .map(|k| {
                            json!({
                                "class": k,
                                "size": g.class_size(k),
                                "element_order": g.element_order(g.representative(k)),
                                "centralizer_order": g.centralizer_order(k),
                            })
                        })
                        .collect(),
                ),
            };
            emit(c, argv, value, start);
        }
        Command::Wreath(cmd) => {
            let g = Arc::new(load_group(&c.group, c.limit)?);
            let n = c.max_degree;
            let value = match cmd {
                WreathCmd::Types => Value::Array(
                    enumerate_types(&g, n)
                        .iter()
                        .map(|t| json!({ "label": t.to_string(), "type": t, "z": t.z_rho(&g).to_string() }))
                        .collect(),
                ),
                WreathCmd::Zrho => {
                    let order = wreath_order(&g, n)
                        .ok_or_else(|| Error::InvalidParameter("|G_N| overflows".into()))?;
                    Value::Array(
                        enumerate_types(&g, n)
                            .iter()
                            .map(|t| {
                                let z = t.z_rho(&g);
                                let size = num_bigint::BigInt::from(order) / &z;
                                json!({ "label": t.to_string(), "type": t, "z": z.to_string(), "class_size": size.to_string() })
                            })
                            .collect(),
                    )
                }
                WreathCmd::Classes => Value::Array(
                    brute_force_classes(&g, n, c.limit)?
                        .iter()
                        .map(|(x, size)| {
                            let t = type_of(&g, x);
                            json!({ "label": t.to_string(), "type": t, "size": size })
                        })
                        .collect(),
                ),
            };
            emit(c, argv, value, start);
        }
        Command::Series(cmd) => match cmd {
            SeriesCmd::EulerProduct { e } => {
                emit_series(c, argv, &euler_product(*e, c.max_degree), start);
            }
            SeriesCmd::GradedDim { d0, d1 } => {
                let s = match (d0, d1) {
                    (None, None) => graded_dim(&load_group(&c.group, c.limit)?, c.max_degree),
                    (d0, d1) => graded_dim_series(d0.unwrap_or(0), d1.unwrap_or(0), c.max_degree),
                };
                emit_series(c, argv, &s, start);
            }
            SeriesCmd::Mckay => {
                let (rows, report) = mckay_table(c.max_degree, exec)?;
                if c.format == Format::Table {
                    println!(
                        "{:<20} {:>5} {:>7} {:>5} {:>4}",
                        "group", "order", "classes", "type", "rank"
                    );
                    for r in &rows {
                        println!(
                            "{:<20} {:>5} {:>7} {:>5} {:>4}",
                            r.group, r.order, r.classes, r.label, r.rank
                        );
                    }
                    println!();
                }
                return Ok(emit_report(
                    c,
                    argv,
                    &report,
                    Some(serde_json::to_value(&rows).unwrap()),
                    start,
                ));
            }
        },
        Command::Verify { suite } => {
            let report = verify(c, *suite, exec)?;
            return Ok(emit_report(c, argv, &report, None, start));
        }
    }
    Ok(Outcome::Ok)
}

fn verify(c: &Common, suite: Suite, exec: Exec) -> Result<Report, Error> {
    let g = Arc::new(load_group(&c.group, c.limit)?);
    let (n, m) = (c.max_degree, c.max_mode);
    let mut report = Report::new(String::new());
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Hopf) {
        report.extend(hopf_verify(&g, n, c.limit, exec)?);
    }
    if wants(Suite::Lambda) {
        report.extend(lambda_verify(&g, n, exec)?);
    }
    if wants(Suite::Heisenberg) {
        report.extend(heisenberg_verify(&g, n, m, exec)?);
    }
    if wants(Suite::Euler) {
        let x = load_gset(&c.gset, g.clone())?;
        report.extend(euler_verify(&x, n, c.limit, exec)?);
    }
    if wants(Suite::Mackey) {
        report.extend(mackey_sweep(&g, exec)?);
    }
    Ok(report)
}

fn load_group(arg: &str, limit: usize) -> Result<FiniteGroup, Error> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return by_name(name);
    }
    if Path::new(arg).is_file() {
        let text =
            std::fs::read_to_string(arg).map_err(|e| Error::Input(format!("{arg}: {e}")))?;
        return group_from_json(&text, limit);
    }
    by_name(arg)
}

fn load_gset(arg: &str, group: Arc<FiniteGroup>) -> Result<GSet, Error> {
    match arg {
        "pt" => Ok(GSet::point(group)),
        "regular" => Ok(GSet::regular(group)),
        path => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
            GSet::from_json(group, &text)
        }
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    schema: &'static str,
    command: &'a [String],
    passed: bool,
    checks: &'a [wreathfock::report::Check],
    #[serde(skip_serializing_if = "Option::is_none")]
    data: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn elapsed(c: &Common, start: Instant) -> Option<u128> {
    c.timing.then(|| start.elapsed().as_millis())
}

fn emit(c: &Common, argv: &[String], value: Value, start: Instant) {
    match c.format {
        Format::Json => {
            let mut doc = json!({ "schema": SCHEMA, "command": argv, "data": value });
            if let Some(ms) = elapsed(c, start) {
                doc["elapsed_ms"] = json!(ms);
            }
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Table => {
            print_table(&value);
            if let Some(ms) = elapsed(c, start) {
                println!("elapsed: {ms} ms");
            }
        }
    }
}

fn emit_series(c: &Common, argv: &[String], s: &TruncSeries, start: Instant) {
    match c.format {
        Format::Json => emit(c, argv, serde_json::to_value(s).unwrap(), start),
        Format::Table => {
            let coeffs: Vec<String> = s.coeffs().iter().map(|r| r.to_string()).collect();
            println!("{}", coeffs.join(" "));
            if let Some(ms) = elapsed(c, start) {
                println!("elapsed: {ms} ms");
            }
        }
    }
}

fn emit_report(
    c: &Common,
    argv: &[String],
    report: &Report,
    data: Option<Value>,
    start: Instant,
) -> Outcome {
    let passed = report.passed();
    match c.format {
        Format::Json => {
            let doc = RunReport {
                schema: SCHEMA,
                command: argv,
                passed,
                checks: &report.checks,
                data,
                elapsed_ms: elapsed(c, start),
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Table => {
            for check in &report.checks {
                let tag = match check.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Finding => "NOTE",
                };
                let extra = check.witness.as_ref().or(check.detail.as_ref());
                match extra {
                    Some(x) => println!("{tag}  {}  [{x}]", check.name),
                    None => println!("{tag}  {}", check.name),
                }
            }
            let fails = report.failures().count();
            println!("{} checks, {} failed", report.checks.len(), fails);
            if let Some(ms) = elapsed(c, start) {
                println!("elapsed: {ms} ms");
            }
        }
    }
    if passed {
        Outcome::Ok
    } else {
        Outcome::Failed
    }
}

fn print_table(value: &Value) {
    match value {
        Value::Array(rows) => {
            for row in rows {
                // `label` already renders the structured type.
                let mut row = row.clone();
                if let Value::Object(map) = &mut row {
                    if map.contains_key("label") {
                        map.remove("type");
                    }
                }
                println!("{}", flat(&row));
            }
        }
        Value::Object(map) => {
            for (k, v) in map {
                println!("{k}: {}", flat(v));
            }
        }
        other => println!("{}", flat(other)),
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", flat(v)))
            .collect::<Vec<_>>()
            .join("  "),
        Value::Array(items) => {
            format!("[{}]", items.iter().map(flat).collect::<Vec<_>>().join(" "))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
