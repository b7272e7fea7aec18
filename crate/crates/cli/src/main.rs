use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hurwitz_cli::commands::{
    cmd_annihilator, cmd_check, cmd_idempotent_jets, cmd_radicals, cmd_reproduce, parse_mode, CliError, Flags, Outcome,
    EXIT_USAGE,
};
use hurwitz_core::properties::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Check ring properties over Hurwitz series and polynomial rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one property of a ring
    Check {
        /// reduced, semiprime, abelian, ifp, armendariz, hurwitz-armendariz, baer, pp,
        /// radical-chain, baer-transfer, pp-transfer or annihilator-maps
        property: String,
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a registered scenario, or `all`
    Reproduce {
        id: String,
        /// Overrides the scenario's own seed
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Nilpotent elements and the nil radicals of a finite ring
    Radicals {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Left and right annihilators of a set such as "{2,3}"
    Annihilator {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        set: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Idempotent Hurwitz jets of a given order
    IdempotentJets {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Largest polynomial degree searched
    #[arg(long, default_value_t = 1)]
    deg: usize,
    /// Jet truncation order; 0 searches exact polynomials
    #[arg(long, default_value_t = 0)]
    trunc: usize,
    /// exhaustive, random or directed
    #[arg(long, default_value = "directed")]
    mode: String,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidate cap for exhaustive searches
    #[arg(long, env = "HURWITZ_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long)]
    json: bool,
    /// Report wall-clock time (otherwise timing_ms is 0)
    #[arg(long)]
    timing: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn flags(search: Option<&SearchArgs>, common: &CommonArgs) -> Result<Flags, CliError> {
    let mut f = Flags { json: common.json, timing: common.timing, ..Flags::default() };
    if let Some(s) = search {
        f.deg = s.deg;
        f.trunc = s.trunc;
        f.mode = parse_mode(&s.mode)?;
        f.samples = s.samples;
        f.seed = s.seed;
        f.budget = s.budget;
    }
    Ok(f)
}

fn run(cli: Cli) -> (Result<Outcome, CliError>, Option<PathBuf>) {
    match cli.command {
        Command::Check { property, ring, search, common } => {
            let r = flags(Some(&search), &common).and_then(|f| cmd_check(&property, &ring, &f));
            (r, common.out)
        }
        Command::Reproduce { id, seed, common } => {
            (flags(None, &common).and_then(|f| cmd_reproduce(&id, seed, &f)), common.out)
        }
        Command::Radicals { ring, common } => (flags(None, &common).and_then(|f| cmd_radicals(&ring, &f)), common.out),
        Command::Annihilator { ring, set, common } => {
            (flags(None, &common).and_then(|f| cmd_annihilator(&ring, &set, &f)), common.out)
        }
        Command::IdempotentJets { ring, order, common } => {
            (flags(None, &common).and_then(|f| cmd_idempotent_jets(&ring, order, &f)), common.out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let (result, out) = run(cli);
    match result {
        Ok(outcome) => {
            let written = match out {
                Some(path) => std::fs::write(&path, &outcome.output).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout().write_all(outcome.output.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
