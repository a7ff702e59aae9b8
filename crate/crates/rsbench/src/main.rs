use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use rsre::bench::{self, BenchConfig, Rate};
use rsre::example::{print_example, verify_exhaustive};
use rsre::{Engine, Mode};

#[derive(Parser)]
#[command(name = "rsbench", version, about = "Reed-Solomon interpolation decoding benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time Welch-Berlekamp decoding over a grid of codes and print CSV.
    Run(RunArgs),
    /// Print every intermediate of the RS[7,2] worked example.
    Example,
    /// Decode every RS[7,2] word within the unique-decoding radius.
    Verify,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Field degrees: a range `4..8` (inclusive) or a list `4,6`.
    #[arg(long, default_value = "4..8")]
    m: String,
    /// Code rates; k = 2^m * rate.
    #[arg(long, value_delimiter = ',', default_value = "1/2,5/8,3/4,7/8")]
    rates: Vec<Rate>,
    #[arg(long, value_delimiter = ',', default_value = "linsys,koetter")]
    engines: Vec<Engine>,
    #[arg(long, value_delimiter = ',', default_value = "none,original,revisited")]
    modes: Vec<Mode>,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Errors injected per trial (default: t of each code).
    #[arg(long)]
    errors: Option<usize>,
    /// Time each decode as the fastest of this many runs.
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Suppress per-row progress on stderr.
    #[arg(long, short)]
    quiet: bool,
}

fn parse_degrees(s: &str) -> Result<Vec<u32>> {
    if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a.trim().parse().context("bad --m range start")?;
        let hi: u32 = b.trim_start_matches('=').trim().parse().context("bad --m range end")?;
        if lo > hi {
            bail!("empty --m range {s}");
        }
        return Ok((lo..=hi).collect());
    }
    s.split(',')
        .map(|v| v.trim().parse().with_context(|| format!("bad field degree {v:?}")))
        .collect()
}

fn run(args: RunArgs) -> Result<()> {
    let config = BenchConfig {
        m: parse_degrees(&args.m)?,
        rates: args.rates,
        engines: args.engines,
        modes: args.modes,
        iters: args.iters,
        seed: args.seed,
        error_weight: args.errors,
        repeats: args.repeats.max(1),
    };
    let quiet = args.quiet;
    let rows = bench::run_with(&config, |row| {
        if !quiet {
            eprintln!(
                "RS[{},{}] {:>7} {:>9}  {:>12.3} us/decode  {} ops",
                row.n,
                row.k,
                row.engine,
                row.mode,
                row.mean_us(),
                row.field_ops
            );
        }
    })?;
    let csv = bench::to_csv(&rows);
    match args.out {
        Some(path) => fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn verify() -> Result<bool> {
    let start = Instant::now();
    let report = verify_exhaustive(&Engine::ALL, &Mode::ALL)?;
    println!(
        "RS[7,2] over GF(8): {} messages x {} error patterns x {} variants = {} decodes, {} failures ({:.2?})",
        report.messages,
        report.patterns,
        Engine::ALL.len() * Mode::ALL.len(),
        report.decodes,
        report.failures,
        start.elapsed()
    );
    Ok(report.failures == 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args).map(|_| true),
        Command::Example => print_example().map(|t| print!("{t}")).map(|_| true).map_err(Into::into),
        Command::Verify => verify(),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("rsbench: {e:#}");
            ExitCode::FAILURE
        }
    }
}
