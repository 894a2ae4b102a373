//! Command-line front end for the diameter matrix completion solvers.
//!
//! Exit codes: 0 YES (or success), 1 NO (or failed verification), 2 usage
//! or parse error, 3 inconclusive (search budget exhausted).

pub mod bench;
pub mod format;
pub mod gen;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use dmc_core::{first_violation, solve_with, DmcError, DmcInstance, SearchBudget, SolverChoice, Verdict};

use crate::format::{parse_completion, parse_instance, write_completion, write_instance};
use crate::gen::{generate, GenKind};
use crate::report::{ResultReport, VerdictKind};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "dmc", version, about = "Diameter matrix completion: solve, verify, generate, benchmark")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide instances. Exit 0 YES, 1 NO, 3 inconclusive.
    Solve(SolveArgs),
    /// Check a completion against an instance. Exit 0 iff it passes.
    Verify(VerifyArgs),
    /// Write a generated instance, plus .witness/.label sidecars next to --out.
    Gen(GenArgs),
    /// Run the sweeps in a TOML config and print CSV.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Instance files; more than one are solved independently.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    /// auto, oracle, backtrack, d0b1, d0b2, d0b3, alpha_eq_beta, alpha_plus1, k1, k2eq
    #[arg(long, default_value = "auto")]
    pub solver: SolverChoice,
    /// Search-node budget for the exponential parts.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES)]
    pub budget: u64,
    /// Print the completion for YES answers.
    #[arg(long)]
    pub witness: bool,
    /// One JSON report per line instead of text.
    #[arg(long)]
    pub json: bool,
    /// Solve several files concurrently; output order is unchanged.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    pub completion: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Instance path; stdout if absent (no sidecars then).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    pub config: PathBuf,
    /// Time instances concurrently instead of on one worker.
    #[arg(long)]
    pub parallel: bool,
    /// CSV path; stdout if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn load_instance(path: &Path) -> Result<DmcInstance, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Solves one instance; solver errors other than the budget become usage errors.
pub fn solve_report(inst: &DmcInstance, file: &str, args: &SolveArgs) -> Result<ResultReport, Failure> {
    let start = Instant::now();
    let outcome = solve_with(inst, args.solver, SearchBudget::new(args.budget));
    let ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok((Verdict::Yes(t), route)) => {
            Ok(ResultReport::new(file, VerdictKind::Yes, route, ms).with_witness(&t, inst.offsets(), args.witness))
        }
        Ok((Verdict::No, route)) => Ok(ResultReport::new(file, VerdictKind::No, route, ms)),
        Err(DmcError::BudgetExceeded(b)) => {
            let mut r = ResultReport::new(file, VerdictKind::Inconclusive, args.solver.name(), ms);
            r.note = Some(format!("search budget of {b} nodes exhausted"));
            Ok(r)
        }
        Err(e) => Err(Failure::usage(format!("{file}: {e}"))),
    }
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn std::io::Write) -> Result<i32, Failure> {
    let work = |path: &PathBuf| -> Result<ResultReport, Failure> {
        let inst = load_instance(path)?;
        solve_report(&inst, &path.display().to_string(), args)
    };
    let results: Vec<Result<ResultReport, Failure>> = if args.parallel {
        args.files.par_iter().map(work).collect()
    } else {
        args.files.iter().map(work).collect()
    };
    let many = args.files.len() > 1;
    let mut code = EXIT_YES;
    for res in results {
        let this = match res {
            Ok(report) => {
                let text = if args.json {
                    report.to_json() + "\n"
                } else if many {
                    format!("== {}\n{}", report.file, report.to_text())
                } else {
                    report.to_text()
                };
                out.write_all(text.as_bytes()).map_err(Failure::usage)?;
                report.verdict.exit_code()
            }
            Err(f) => {
                if !many {
                    return Err(f);
                }
                eprintln!("error: {}", f.message);
                f.code
            }
        };
        code = worst(code, this);
    }
    Ok(code)
}

/// Combined exit code for several files: usage > inconclusive > NO > YES.
fn worst(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_USAGE => 3,
        EXIT_INCONCLUSIVE => 2,
        EXIT_NO => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn std::io::Write) -> Result<i32, Failure> {
    let inst = load_instance(&args.instance)?;
    let t = parse_completion(&read(&args.completion)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", args.completion.display())))?;
    let violation = first_violation(&inst, &t).map_err(Failure::usage)?;
    let text = if args.json {
        serde_json::json!({
            "format": report::REPORT_FORMAT,
            "valid": violation.is_none(),
            "violation": violation.map(|v| v.to_string()),
        })
        .to_string()
            + "\n"
    } else {
        match &violation {
            None => "OK\n".to_string(),
            Some(v) => format!("INVALID: {v}\n"),
        }
    };
    out.write_all(text.as_bytes()).map_err(Failure::usage)?;
    Ok(if violation.is_none() { EXIT_YES } else { EXIT_NO })
}

fn sidecar(out: &Path, ext: &str) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn cmd_gen(args: &GenArgs, out: &mut dyn std::io::Write) -> Result<i32, Failure> {
    let g = generate(&args.kind, args.seed).map_err(|e| Failure::usage(format!("{e:#}")))?;
    let text = write_instance(&g.instance);
    match &args.out {
        None => out.write_all(text.as_bytes()).map_err(Failure::usage)?,
        Some(path) => {
            let write_all = || -> Result<()> {
                write_file(path, &text)?;
                if let Some(w) = &g.witness {
                    write_file(&sidecar(path, "witness"), &write_completion(w))?;
                }
                if let Some(l) = &g.label {
                    write_file(&sidecar(path, "label"), l)?;
                }
                Ok(())
            };
            write_all().map_err(|e| Failure::usage(format!("{e:#}")))?;
        }
    }
    Ok(EXIT_YES)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn std::io::Write) -> Result<i32, Failure> {
    let config = bench::parse_config(&read(&args.config)?)
        .map_err(|e| Failure::usage(format!("{}: {e:#}", args.config.display())))?;
    let csv = bench::run_bench(&config, args.parallel).map_err(|e| Failure::usage(format!("{e:#}")))?;
    match &args.out {
        None => out.write_all(csv.as_bytes()).map_err(Failure::usage)?,
        Some(p) => write_file(p, &csv).map_err(|e| Failure::usage(format!("{e:#}")))?,
    }
    Ok(EXIT_YES)
}

/// Runs a parsed command, writing results to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn std::io::Write) -> i32 {
    let res = match &cli.command {
        Command::Solve(a) => cmd_solve(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    };
    let _ = out.flush();
    match res {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
