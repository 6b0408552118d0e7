use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quadstruct_cli::invert::invert;
use quadstruct_cli::table::dump_table;
use quadstruct_cli::{fuzz, load_scenario, run_suite, Backend, CliError, SuiteOptions, VerificationReport};

#[derive(Parser)]
#[command(name = "quadstruct", version, about = "Exact verification of structurable algebras and triple systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check battery for a scenario.
    Verify {
        #[arg(long)]
        scenario: PathBuf,
        /// Override the scenario's field (`rational` or `fp:P`).
        #[arg(long)]
        field: Option<Backend>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Perturb one structure constant to exercise the failure path.
        #[arg(long)]
        debug_mutate: bool,
    },
    /// Seeded sampled checks only.
    Fuzz {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        iterations: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Write the basis multiplication table as CSV.
    Table {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the psi and chi matrices (e8 only).
        #[arg(long)]
        with_maps: bool,
    },
    /// Conjugate inverse of an element given by coordinates, or "1".
    Invert {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long)]
        element: String,
    },
}

fn emit(report: &VerificationReport, format: Format) -> i32 {
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    report.exit_code()
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify { scenario, field, samples, seed, format, debug_mutate } => {
            let mut cfg = load_scenario(&scenario)?;
            if let Some(field) = field {
                cfg = cfg.with_field(field)?;
            }
            cfg.samples = samples.unwrap_or(cfg.samples);
            cfg.seed = seed.unwrap_or(cfg.seed);
            let report = run_suite(&cfg, SuiteOptions { exhaustive: true, debug_mutate })?;
            Ok(emit(&report, format))
        }
        Command::Fuzz { scenario, iterations, seed, format } => {
            let cfg = load_scenario(&scenario)?;
            Ok(emit(&fuzz(&cfg, iterations, seed)?, format))
        }
        Command::Table { scenario, out, with_maps } => {
            let cfg = load_scenario(&scenario)?;
            for path in dump_table(&cfg, &out, with_maps)? {
                println!("wrote {}", path.display());
            }
            Ok(0)
        }
        Command::Invert { scenario, element } => {
            let cfg = load_scenario(&scenario)?;
            let inv = invert(&cfg, &element)?;
            print!("{}", inv.text);
            Ok(if inv.nonzero_residuals == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
