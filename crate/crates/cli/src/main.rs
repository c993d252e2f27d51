use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use prekosmos_cli::{cmd_check, cmd_reconstruct, cmd_suite, cmd_twist, seed_from_env, CliError, Options, Side};

#[derive(Parser)]
#[command(name = "prekosmos", version, about = "Law checks, reconstruction and torsor twists for finite group objects")]
struct Cli {
    /// Print the JSON report (default)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print a human-readable summary instead of JSON
    #[arg(long, global = true)]
    text: bool,
    /// Maximum number of probe representations per object
    #[arg(long, global = true, default_value_t = 5)]
    probe_limit: usize,
    /// Members of larger order skip the expensive criteria
    #[arg(long, global = true, default_value_t = 8)]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate one JSON document
    Check { path: PathBuf },
    /// Reconstruct a group or Hopf object from its representation category
    Reconstruct {
        #[arg(long)]
        object: PathBuf,
    },
    /// Twist by a torsor and run the round trip
    Twist {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        torsor: PathBuf,
    },
    /// Run the acceptance suite over a roster
    Suite {
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
        #[arg(long)]
        roster: PathBuf,
        /// Also write the JSON report to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Galois,
    Grothendieck,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("prekosmos: {e}");
            ExitCode::from(CliError::EXIT_CODE as u8)
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let opts = Options { probe_limit: cli.probe_limit, max_order: cli.max_order, seed: seed_from_env()? };
    let (report, out) = match &cli.command {
        Command::Check { path } => (cmd_check(path, &opts)?, None),
        Command::Reconstruct { object } => (cmd_reconstruct(object, &opts)?, None),
        Command::Twist { group, torsor } => (cmd_twist(group, torsor, &opts)?, None),
        Command::Suite { side, roster, report } => {
            let side = match side {
                SideArg::Galois => Side::Galois,
                SideArg::Grothendieck => Side::Grothendieck,
                SideArg::Both => Side::Both,
            };
            (cmd_suite(roster, side, &opts)?, report.clone())
        }
    };
    let json = report.to_json();
    if let Some(path) = out {
        std::fs::write(&path, &json)
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    }
    if cli.text {
        print!("{}", report.to_text());
    } else {
        print!("{json}");
    }
    Ok(report.exit_code())
}
