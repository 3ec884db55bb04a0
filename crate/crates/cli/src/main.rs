mod commands;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{CliError, CountMode, OracleTarget, DEFAULT_MEM_CAP_MB};
use report::Format;

/// Exact checks of odd-degree character counts for Sp_2n(2) and of the
/// local fixed-character analysis for Sp_4(2^m).
#[derive(Parser, Debug)]
#[command(name = "mckay", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads for commands that range over several inputs.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Include wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Odd-degree unipotent characters of Sp_2n(2) via symbols, n = 2..=max-n.
    Prop1 {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=16))]
        max_n: u64,
    },
    /// Number of odd-degree characters of Sp_2n(2) from the semisimple class census.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = CountMode::Formula)]
        mode: CountMode,
    },
    /// Abelianization of the Sylow 2-subgroup of Sp_2n(2).
    Sylow {
        #[arg(long)]
        n: u64,
        /// Also close U and [U, U] explicitly (n <= 4).
        #[arg(long)]
        brute: bool,
    },
    /// Brute-force checks in Sp_4(2) or Sp_6(2).
    Oracle {
        #[arg(value_enum)]
        target: OracleTarget,
        /// Required for sp6f2.
        #[arg(long)]
        confirm_sp6: bool,
    },
    /// Local analysis of Sp_4(q) at the prime ell (all relevant primes if omitted).
    Sp4 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: Option<u64>,
    },
}

fn mem_cap_mb() -> Result<usize, CliError> {
    match std::env::var("MCKAY_MEM_CAP_MB") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("MCKAY_MEM_CAP_MB must be a whole number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MEM_CAP_MB),
    }
}

fn run(cli: &Cli) -> Result<report::Report, CliError> {
    match &cli.command {
        Command::Prop1 { max_n } => commands::prop1(*max_n),
        Command::Count { n, mode } => commands::count(*n, *mode),
        Command::Sylow { n, brute } => commands::sylow(*n, *brute),
        Command::Oracle { target, confirm_sp6 } => commands::oracle(*target, *confirm_sp6, mem_cap_mb()?),
        Command::Sp4 { q, ell } => commands::sp4(*q, *ell),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build_global()
        .expect("thread pool is configured once");
    let start = Instant::now();
    let result = run(&cli);
    match result {
        Ok(mut report) => {
            if cli.timing {
                report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            let mut out = io::stdout().lock();
            if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if report.pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
