use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use fairdiv::mechanisms::Mechanism;
use fairdiv::properties::DeviationFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Allocate,
    Verify,
    Deviate,
    Reproduce,
    Enumerate,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    /// One JSON object per line.
    Machine,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "machine" => Ok(Format::Machine),
            other => Err(format!(
                "unknown format `{other}` (expected text or machine)"
            )),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Machine => "machine",
        })
    }
}

pub const DEFAULT_GRID: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub mechanism: Option<Mechanism>,
    pub instance: Option<PathBuf>,
    /// Second instance for the position-obliviousness check.
    pub paired: Option<PathBuf>,
    pub grid: usize,
    /// `None` picks prefix for deadline-only mechanisms, subsets otherwise.
    pub family: Option<DeviationFamily>,
    pub format: Format,
    /// `None` lets rayon decide.
    pub workers: Option<usize>,
    /// Agent id to search deviations for; all agents when absent.
    pub agent: Option<String>,
    /// Number of agents for `enumerate`.
    pub agents: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            mechanism: None,
            instance: None,
            paired: None,
            grid: DEFAULT_GRID,
            family: None,
            format: Format::Text,
            workers: None,
            agent: None,
            agents: 2,
        }
    }

    pub fn family_for(&self, mechanism: Mechanism) -> DeviationFamily {
        self.family.unwrap_or(if mechanism.needs_prefix_form() {
            DeviationFamily::Prefix
        } else {
            DeviationFamily::Subsets
        })
    }
}
