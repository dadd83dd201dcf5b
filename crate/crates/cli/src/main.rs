use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use xdiscord::oracle::DEFAULT_RESOLUTION;
use xdiscord_cli::commands::{self, AuditOptions, SweepOutput};

/// Correlations and quantum discord of two-qubit X-states.
#[derive(Parser, Debug)]
#[command(name = "xdiscord", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a state file and print its spectrum
    Validate { file: PathBuf },
    /// Print I, C, Q, concurrence and the winning measurement branch
    Report {
        file: PathBuf,
        /// Cross-check the analytic minimum against a numerical search
        #[arg(long)]
        oracle: bool,
        /// Exit with status 3 if the oracle finds a lower conditional entropy
        #[arg(long, requires = "oracle")]
        strict: bool,
    },
    /// Evaluate a named family on a uniform grid and write CSV and/or SVG
    Sweep {
        /// bell-mix, psi-plus-noise, phi-plus-noise, werner or symmetric-noise
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 201)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = SweepOutput::Csv)]
        out: SweepOutput,
        /// Output directory
        #[arg(long, default_value = ".")]
        path: PathBuf,
    },
    /// Compare the analytic minimum with the numerical oracle on many states
    Audit {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Audit members of a family instead of random states
        #[arg(long)]
        family: Option<String>,
        /// Write per-state results to this CSV file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Validate { file } => commands::validate(&file, &mut out),
        Command::Report {
            file,
            oracle,
            strict,
        } => commands::report(&file, oracle, strict, &mut out),
        Command::Sweep {
            family,
            steps,
            out: format,
            path,
        } => commands::sweep(&family, steps, format, &path, &mut out),
        Command::Audit {
            count,
            resolution,
            seed,
            family,
            csv,
        } => commands::audit(
            &AuditOptions {
                count: count as usize,
                seed,
                resolution,
                family,
                csv,
            },
            &mut out,
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
