mod algebra;
mod config;
mod loops;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use config::{CliError, Format, Outcome, RunConfig};

#[derive(Parser)]
#[command(
    name = "ahopf",
    version,
    about = "Exhaustive checks for almost groups, almost Hopf algebras and loop factorizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report (or emitted structure) here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Residual tolerance for numerical checks.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Real sample points per identity instance.
    #[arg(long, global = true, default_value_t = 10)]
    samples: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check the almost group axioms of an `.agrp` file.
    VerifyGroup { path: PathBuf },
    /// Build k(G) or kG from an `.agrp` file and check the almost Hopf axioms.
    VerifyHopf {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Construction::Fn)]
        construction: Construction,
    },
    /// Build the bicrossproduct of a matched pair given as an `.mpair` file.
    Bicross {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
        /// Work with the dual bicrossproduct.
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum)]
        check: Option<BicrossCheck>,
    },
    /// Meromorphic loop factorizations.
    #[command(subcommand)]
    Loop(LoopCommand),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Construction {
    /// The function algebra k(G).
    Fn,
    /// The almost group algebra kG.
    Grp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Structure,
    Report,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BicrossCheck {
    Duality,
    Star,
    Selfdual,
}

#[derive(Subcommand)]
enum LoopCommand {
    /// Reverse two single-factor loops with poles in opposite half planes.
    Reverse { first: PathBuf, second: PathBuf },
    /// Compute s▷u and s◁u.
    Act { s: PathBuf, u: PathBuf },
    /// Check the matched pair rules on loops s t u v, or on random samples.
    VerifyMatched {
        #[arg(num_args = 0..=4)]
        loops: Vec<PathBuf>,
        #[command(flatten)]
        random: loops::RandomArgs,
    },
    /// Check the mutual inverse identities on loops s u, or on random samples.
    VerifyMutinv {
        #[arg(num_args = 0..=2)]
        loops: Vec<PathBuf>,
        #[command(flatten)]
        random: loops::RandomArgs,
    },
}

fn dispatch(command: Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    match command {
        Command::VerifyGroup { path } => algebra::verify_group(cfg, &path),
        Command::VerifyHopf { path, construction } => {
            algebra::verify_hopf(cfg, &path, construction)
        }
        Command::Bicross {
            path,
            emit,
            dual,
            check,
        } => algebra::bicross(cfg, &path, emit, dual, check),
        Command::Loop(LoopCommand::Reverse { first, second }) => {
            loops::reverse(cfg, &first, &second)
        }
        Command::Loop(LoopCommand::Act { s, u }) => loops::act(cfg, &s, &u),
        Command::Loop(LoopCommand::VerifyMatched { loops, random }) => {
            loops::verify_matched(cfg, &loops, &random)
        }
        Command::Loop(LoopCommand::VerifyMutinv { loops, random }) => {
            loops::verify_mutinv(cfg, &loops, &random)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let run = RunConfig::new(cli.format, cli.output, cli.seed, cli.tol, cli.samples)
        .and_then(|cfg| dispatch(cli.command, &cfg)?.write(cfg.output.as_deref()));
    match run {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
