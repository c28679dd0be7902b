use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use capmix::cli_io::{cap_from_env, parse_act_pair, run, Command, Options};
use capmix::{Error, Mix};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Average,
    Expected,
    Pf,
    Compare,
    Check,
    ExportMilp,
    Plot,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Average => Command::Average,
            Cmd::Expected => Command::Expected,
            Cmd::Pf => Command::Pf,
            Cmd::Compare => Command::Compare,
            Cmd::Check => Command::Check,
            Cmd::ExportMilp => Command::ExportMilp,
            Cmd::Plot => Command::Plot,
        }
    }
}

/// Average and expected mixtures of capability sets.
#[derive(Debug, Parser)]
#[command(name = "capmix", version)]
struct Cli {
    /// Operation to run.
    #[arg(value_enum)]
    command: Cmd,
    /// Scenario file.
    scenario: PathBuf,
    /// Act to operate on (default: the first act).
    #[arg(long)]
    act: Option<String>,
    /// Two acts `A,B` for compare and set monotonicity.
    #[arg(long)]
    acts: Option<String>,
    /// Mix: expected or average.
    #[arg(long)]
    mix: Option<String>,
    /// Single property to check.
    #[arg(long)]
    property: Option<String>,
    /// Exit with status 1 when a property does not hold.
    #[arg(long)]
    strict: bool,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Enumeration cap; overrides CAPMIX_CAP.
    #[arg(long)]
    cap: Option<u64>,
}

fn options(cli: &Cli) -> Result<Options, Error> {
    Ok(Options {
        act: cli.act.clone(),
        acts: cli.acts.as_deref().map(parse_act_pair).transpose()?,
        mix: cli.mix.as_deref().map(str::parse::<Mix>).transpose()?,
        property: cli.property.as_deref().map(str::parse).transpose()?,
        cap: match cli.cap {
            Some(c) => Some(c),
            None => cap_from_env()?,
        },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let text = match std::fs::read_to_string(&cli.scenario) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.scenario.display());
            return ExitCode::from(2);
        }
    };
    let output = match options(&cli).and_then(|o| run(cli.command.into(), &text, &o)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", output.text),
    }
    if cli.strict && output.violation_found {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
