//! `multival`: check, build and search multi-valued algebraic structures.
//!
//! Exit status: 0 when every asserted axiom passes, 1 when one fails,
//! 2 on usage or parse errors.

mod commands;
mod output;
mod specs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use multival_core::{Error, InclusionMode};

use commands::{BialgebraWhat, BuildWhat, CheckKind, CliError, CliResult, SearchWhat, Settings};
use output::{OutputFormat, Report};

#[derive(Debug, Parser)]
#[command(name = "multival", version, about = "Multi-valued groups, racks, quandles and their bialgebras")]
struct Cli {
    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Half-width of the integer window used by checks on infinite carriers.
    #[arg(long, global = true, default_value_t = 20)]
    window: i64,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// How multiset inclusion treats multiplicities.
    #[arg(long, global = true, value_enum, default_value_t = Inclusion::Multiplicity)]
    inclusion: Inclusion,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Inclusion {
    Multiplicity,
    Support,
}

impl From<Inclusion> for InclusionMode {
    fn from(i: Inclusion) -> Self {
        match i {
            Inclusion::Multiplicity => InclusionMode::MultiplicityAware,
            Inclusion::Support => InclusionMode::SupportOnly,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an axiom checker on a file.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
    },
    /// Construct a structure and print it in its file format.
    Build {
        #[command(subcommand)]
        what: BuildWhat,
        /// Also write the payload to this file.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Sweeps and enumerations.
    Search {
        #[command(subcommand)]
        what: SearchWhat,
    },
    /// Tensor-identity checks on structure-constant spaces.
    Bialgebra {
        #[command(subcommand)]
        what: BialgebraWhat,
    },
}

fn run(command: &Command, s: Settings) -> CliResult<Report> {
    match command {
        Command::Check { kind, file } => commands::check(*kind, file, s),
        Command::Build { what, .. } => commands::build(what, s),
        Command::Search { what } => commands::search(what, s),
        Command::Bialgebra { what } => commands::bialgebra(what, s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings { window: cli.window, seed: cli.seed, inclusion: cli.inclusion.into() };
    let report = match run(&cli.command, settings) {
        Ok(r) => r,
        Err(CliError::Core(Error::PreconditionFailed(pre))) => commands::precondition_report(&pre),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                CliError::Core(Error::RepresentativeDependence(_)) => 1,
                _ => 2,
            };
            return ExitCode::from(code);
        }
    };
    if let (Command::Build { out: Some(path), .. }, Some(payload)) = (&cli.command, &report.payload) {
        if let Err(e) = commands::write_payload(path, payload) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    print!("{}", report.render(cli.format));
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
