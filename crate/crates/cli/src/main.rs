use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fairdiv::mechanisms::Mechanism;
use fairdiv::properties::DeviationFamily;
use fairdiv_cli::config::DEFAULT_GRID;
use fairdiv_cli::{run, Command, Format, RunConfig};

/// Exact truthful cake cutting and chore division.
///
/// Exit status: 0 when everything holds, 1 when a violation or corpus
/// difference is found, 2 for usage and input errors.
#[derive(Parser)]
#[command(name = "fairdiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,

    /// `text` for people, `machine` for one JSON object per line.
    #[arg(long, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for searches and sweeps.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    mechanism: Mechanism,
    /// JSON instance file.
    #[arg(long)]
    instance: PathBuf,
}

#[derive(Args)]
struct Search {
    /// Grid denominator D for deviation reports.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// `prefix` or `subsets`; defaults to prefix for deadline-only
    /// mechanisms and subsets otherwise.
    #[arg(long)]
    family: Option<DeviationFamily>,
}

#[derive(Subcommand)]
enum Sub {
    /// Print the allocation and each agent's value.
    Allocate(Target),
    /// Run every property check on one instance.
    Verify {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        search: Search,
        /// Second instance with the same indicator vector, for the
        /// position-obliviousness check.
        #[arg(long)]
        paired: Option<PathBuf>,
    },
    /// Search for profitable misreports.
    Deviate {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        search: Search,
        /// Agent id; all agents when omitted.
        #[arg(long)]
        agent: Option<String>,
    },
    /// Replay the built-in corpus of worked examples.
    Reproduce,
    /// Sweep every deadline instance on a grid through a mechanism and all
    /// checks.
    Enumerate {
        #[arg(long)]
        mechanism: Mechanism,
        #[arg(long, default_value_t = 2)]
        agents: usize,
        #[command(flatten)]
        search: Search,
    },
}

fn config(cli: Cli) -> RunConfig {
    let mut config = RunConfig::new(match &cli.command {
        Sub::Allocate(_) => Command::Allocate,
        Sub::Verify { .. } => Command::Verify,
        Sub::Deviate { .. } => Command::Deviate,
        Sub::Reproduce => Command::Reproduce,
        Sub::Enumerate { .. } => Command::Enumerate,
    });
    config.format = cli.format;
    config.workers = cli.workers;
    let mut take_search = |search: Search| {
        config.grid = search.grid;
        config.family = search.family;
    };
    let (target, agent, agents, paired) = match cli.command {
        Sub::Allocate(target) => (Some(target), None, None, None),
        Sub::Verify {
            target,
            search,
            paired,
        } => {
            take_search(search);
            (Some(target), None, None, paired)
        }
        Sub::Deviate {
            target,
            search,
            agent,
        } => {
            take_search(search);
            (Some(target), agent, None, None)
        }
        Sub::Reproduce => (None, None, None, None),
        Sub::Enumerate {
            mechanism,
            agents,
            search,
        } => {
            take_search(search);
            config.mechanism = Some(mechanism);
            (None, None, Some(agents), None)
        }
    };
    if let Some(target) = target {
        config.mechanism = Some(target.mechanism);
        config.instance = Some(target.instance);
    }
    config.agent = agent;
    config.paired = paired;
    if let Some(n) = agents {
        config.agents = n;
    }
    config
}

fn main() -> ExitCode {
    let outcome = run(&config(Cli::parse()));
    let mut out = std::io::stdout().lock();
    for line in &outcome.lines {
        if writeln!(out, "{line}").is_err() {
            break;
        }
    }
    ExitCode::from(outcome.code as u8)
}
