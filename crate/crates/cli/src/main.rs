use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use galilei_cli::{commands, CliError};
use galilei_core::verify::{RunConfig, DEFAULT_SEED, DEFAULT_TRIALS};

/// Galilei-group phase spaces, two-body barycenter reduction and their
/// numerical verification.
#[derive(Debug, Parser)]
#[command(name = "galilei", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the closed-form flow of a scenario and write a CSV table.
    Simulate {
        /// Scenario file (TOML).
        scenario: PathBuf,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and write a report.
    Verify {
        /// Master seed of the random streams.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Trials per check.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// Report file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use this tolerance for every check instead of the defaults.
        #[arg(long)]
        tolerance_override: Option<f64>,
    },
    /// Print the barycentric decomposition of a two_body scenario.
    Decompose { scenario: PathBuf },
    /// Print momentum components and Casimirs of a scenario's initial state.
    Momentum { scenario: PathBuf },
    /// Print the version and the default tolerances.
    Info,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let mut stdout = std::io::stdout().lock();
    let code = match cli.command {
        Command::Simulate { scenario, out } => {
            commands::simulate(&scenario, out.as_deref(), &mut stdout)
        }
        Command::Verify {
            seed,
            trials,
            out,
            tolerance_override,
        } => {
            let config = RunConfig {
                seed,
                trials,
                tolerance_override,
            };
            commands::verify(&config, out.as_deref(), &mut stdout, &mut std::io::stderr())
        }
        Command::Decompose { scenario } => commands::decompose(&scenario, &mut stdout),
        Command::Momentum { scenario } => commands::momentum(&scenario, &mut stdout),
        Command::Info => commands::info(&mut stdout),
    }?;
    stdout.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
