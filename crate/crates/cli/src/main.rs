use std::path::PathBuf;
use std::process::ExitCode;

use ab_realism_cli::{cmd_figure, cmd_sweep, cmd_verify, verify, CliError};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "ab-realism", version, about = "Realism sweeps for charged interferometers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the measures of a TOML config over θ and write a CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run seeded property checks (a suite name, or `all`).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Regenerate a named figure dataset (fig2a ... fig4b).
    Figure {
        name: String,
        #[arg(long)]
        outdir: PathBuf,
        /// Also render an SVG.
        #[arg(long)]
        plot: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep { config, out } => {
            let rows = cmd_sweep(&config, &out)?;
            println!("wrote {rows} rows to {}", out.display());
        }
        Command::Verify { suite, seed } => println!("{}", cmd_verify(&suite, seed)?),
        Command::Figure { name, outdir, plot } => {
            for path in cmd_figure(&name, &outdir, plot)? {
                println!("wrote {}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(report)) => {
            println!("{report}");
            eprintln!("error: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
