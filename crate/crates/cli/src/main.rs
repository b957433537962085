//! Command-line front end for exact subset-sum counts in finite abelian
//! groups: single counts, full tables, the formula-vs-oracle verification
//! sweep, and closed-form-vs-DP benchmarking.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 range or precondition error.

mod bench;
mod report;
mod verify;

use std::process::ExitCode;

use abelian_subsets::counting::{count_subsets, count_subsets_nonzero, count_table, Variant};
use abelian_subsets::group::parse_group;
use abelian_subsets::oracle::{BRUTE_FORCE_CAP, DP_CAP};
use abelian_subsets::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use report::Format;

#[derive(Parser)]
#[command(
    name = "abelian-subsets",
    version,
    about = "Exact counts of fixed-size subsets of a finite abelian group with a prescribed sum"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// N(i, g): subsets of G of size i summing to g
    Count(QueryArgs),
    /// N*(i, g): subsets of G \ {0} of size i summing to g
    CountStar(QueryArgs),
    /// Full table of counts per subset size and e-class
    Table(TableArgs),
    /// Sweep every structural identity against the oracles
    Verify(VerifyArgs),
    /// Time the closed form against the DP oracle on one group
    Bench(BenchArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Group spec, e.g. "4x2" or "Z/4 x Z/2"
    #[arg(long)]
    group: String,
    /// Subset size
    #[arg(long)]
    i: u64,
    /// Target element: comma-separated residues, one per factor of --group
    /// (empty string for the trivial group)
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// Group spec, e.g. "4x2" or "Z/4 x Z/2"
    #[arg(long)]
    group: String,
    /// Count subsets of the whole group or of its nonzero part
    #[arg(long, value_enum, default_value = "all")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Exhaustive bound: every abelian group of order up to this is checked
    #[arg(long, default_value_t = 16)]
    max_order: u64,
    /// Order cap for the 2^n brute-force oracle
    #[arg(long, default_value_t = BRUTE_FORCE_CAP)]
    bf_cap: u64,
    /// Order cap for the DP oracle
    #[arg(long, default_value_t = DP_CAP)]
    dp_cap: u64,
    /// Seed for the randomized Fourier round trip
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Group spec, e.g. "2x128"
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value = "all")]
    variant: VariantArg,
    /// Order cap for the DP oracle
    #[arg(long, default_value_t = DP_CAP)]
    dp_cap: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
enum VariantArg {
    All,
    Nonzero,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::All => Variant::All,
            VariantArg::Nonzero => Variant::Nonzero,
        }
    }
}

enum Failure {
    Core(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        Failure::Core(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(err)) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::Parse(_) => 2,
                Error::Range(_) | Error::CapExceeded { .. } | Error::ArityMismatch { .. } => 3,
                Error::EClassConflict(_) => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_residues(text: &str) -> Result<Vec<i64>, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|token| {
            token
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad residue `{}`", token.trim())))
        })
        .collect()
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Count(args) => run_query(args, Variant::All),
        Command::CountStar(args) => run_query(args, Variant::Nonzero),
        Command::Table(args) => {
            let group = parse_group(&args.group)?;
            let table = count_table(&group, args.variant.into())?;
            print!("{}", report::render_table(&table, args.format));
            Ok(())
        }
        Command::Verify(args) => run_verify(args),
        Command::Bench(args) => run_bench(args),
    }
}

fn run_query(args: QueryArgs, variant: Variant) -> Result<(), Failure> {
    let group = parse_group(&args.group)?;
    let residues = parse_residues(&args.g)?;
    let g = group.element(&residues)?;
    let count = match variant {
        Variant::All => count_subsets(&group, args.i, &g)?,
        Variant::Nonzero => count_subsets_nonzero(&group, args.i, &g)?,
    };
    let query = report::Query {
        group: &group,
        variant,
        i: args.i,
        g: &g,
        e_g: group.e_of(&g),
        count: count.to_string(),
    };
    print!("{}", report::render_query(&query, args.format));
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let cfg = verify::VerifyConfig {
        max_order: args.max_order,
        bf_cap: args.bf_cap,
        dp_cap: args.dp_cap,
        seed: args.seed,
    };
    let reports = verify::run(&cfg);
    let passed = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Json => {
            let properties: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "status": if r.passed { "pass" } else { "fail" },
                        "details": r.details,
                        "counterexample": r.counterexample,
                    })
                })
                .collect();
            let value = json!({
                "max_order": args.max_order,
                "bf_cap": args.bf_cap,
                "dp_cap": args.dp_cap,
                "seed": args.seed,
                "properties": properties,
                "passed": passed,
            });
            print!("{}", report::pretty(&value));
        }
        Format::Csv => {
            println!("property,status,details");
            for r in &reports {
                println!(
                    "{},{},{}",
                    r.name,
                    if r.passed { "pass" } else { "fail" },
                    r.details
                );
            }
        }
        Format::Human => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                println!("{status} {} ({})", r.name, r.details);
                if let Some(ce) = &r.counterexample {
                    println!("     counterexample: {ce}");
                }
            }
            println!(
                "{}: {} of {} properties hold",
                if passed { "ok" } else { "FAILED" },
                reports.iter().filter(|r| r.passed).count(),
                reports.len()
            );
        }
    }
    if passed {
        Ok(())
    } else {
        let failing: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.name)
            .collect();
        Err(Failure::Verification(failing.join(", ")))
    }
}

fn run_bench(args: BenchArgs) -> Result<(), Failure> {
    let group = parse_group(&args.group)?;
    let outcome = bench::run(&group, args.variant.into(), args.dp_cap)?;
    match args.format {
        Format::Json => {
            let value = json!({
                "group": outcome.group.to_string(),
                "invariant_factors": outcome.group.invariant_factors(),
                "order": outcome.group.order(),
                "exponent": outcome.group.exponent(),
                "variant": outcome.variant.as_str(),
                "closed_form": { "wall_ms": outcome.closed_ms, "cells": outcome.closed_cells },
                "dp": {
                    "wall_ms": outcome.dp_ms,
                    "passes": outcome.dp_passes,
                    "updates": outcome.dp_updates,
                },
                "speedup": outcome.speedup,
                "tables_agree": outcome.tables_agree,
            });
            print!("{}", report::pretty(&value));
        }
        Format::Csv => {
            println!("method,wall_ms,operations");
            println!("closed_form,{},{}", outcome.closed_ms, outcome.closed_cells);
            println!("dp,{},{}", outcome.dp_ms, outcome.dp_updates);
            println!("speedup,{},", outcome.speedup);
        }
        Format::Human => {
            println!(
                "group: {} (order {}, exponent {})",
                outcome.group,
                outcome.group.order(),
                outcome.group.exponent()
            );
            println!(
                "closed form: {:.3} ms ({} cells)",
                outcome.closed_ms, outcome.closed_cells
            );
            println!(
                "dp oracle:   {:.3} ms ({} passes, {} state updates)",
                outcome.dp_ms, outcome.dp_passes, outcome.dp_updates
            );
            println!("speedup:     {:.1}x", outcome.speedup);
            println!(
                "tables agree: {}",
                if outcome.tables_agree { "yes" } else { "NO" }
            );
        }
    }
    if outcome.tables_agree {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "closed form and DP disagree on {}",
            outcome.group
        )))
    }
}
