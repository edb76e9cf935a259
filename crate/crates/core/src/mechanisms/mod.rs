//! Deterministic division mechanisms, each a pure function from an
//! instance to an allocation.

mod baseline;
mod prefix;
mod two_agent;

use std::fmt;
use std::str::FromStr;

pub use baseline::{connected_free_disposal, cut_and_choose};
pub use prefix::{prefix_cake, prefix_cake_rounds, prefix_chore, CakeRound};
pub use two_agent::{crossing_point, two_agent_cake, two_agent_chore};

use crate::error::{Error, Result};
use crate::model::{Allocation, Instance, Resource};
use crate::properties::Property;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mechanism {
    /// Crossing-point cake cutting for two agents.
    TwoAgentCake,
    /// Swapped crossing-point division of a chore between two agents.
    TwoAgentChore,
    /// Equal-strip rounds for any number of deadline valuations.
    PrefixCake,
    /// Quota-and-tail chore division for deadline valuations.
    PrefixChore,
    /// The classic two-agent protocol; manipulable.
    CutAndChoose,
    /// Connected and envy-free, but discards part of the cake.
    ConnectedFreeDisposal,
}

impl Mechanism {
    pub const ALL: [Mechanism; 6] = [
        Mechanism::TwoAgentCake,
        Mechanism::TwoAgentChore,
        Mechanism::PrefixCake,
        Mechanism::PrefixChore,
        Mechanism::CutAndChoose,
        Mechanism::ConnectedFreeDisposal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mechanism::TwoAgentCake => "two-agent-cake",
            Mechanism::TwoAgentChore => "two-agent-chore",
            Mechanism::PrefixCake => "prefix-cake",
            Mechanism::PrefixChore => "prefix-chore",
            Mechanism::CutAndChoose => "cut-and-choose",
            Mechanism::ConnectedFreeDisposal => "connected-free-disposal",
        }
    }

    pub fn resource(&self) -> Resource {
        match self {
            Mechanism::TwoAgentChore | Mechanism::PrefixChore => Resource::Chore,
            _ => Resource::Cake,
        }
    }

    /// `Some(2)` for two-agent mechanisms, `None` for any number.
    pub fn agent_count(&self) -> Option<usize> {
        match self {
            Mechanism::PrefixCake | Mechanism::PrefixChore => None,
            _ => Some(2),
        }
    }

    pub fn needs_prefix_form(&self) -> bool {
        matches!(
            self,
            Mechanism::PrefixCake | Mechanism::PrefixChore | Mechanism::ConnectedFreeDisposal
        )
    }

    pub fn allocates_everything(&self) -> bool {
        !matches!(self, Mechanism::ConnectedFreeDisposal)
    }

    /// Properties the mechanism is known to satisfy on its whole domain.
    pub fn guarantees(&self) -> &'static [Property] {
        use Property::*;
        match self {
            Mechanism::TwoAgentCake | Mechanism::TwoAgentChore | Mechanism::PrefixCake => &[
                EnvyFree,
                Proportional,
                ParetoOptimal,
                FullAllocation,
                Truthful,
            ],
            Mechanism::PrefixChore => &[Proportional, ParetoOptimal, FullAllocation, Truthful],
            Mechanism::CutAndChoose => &[EnvyFree, Proportional, FullAllocation, Connected],
            Mechanism::ConnectedFreeDisposal => &[EnvyFree, Connected],
        }
    }

    /// Checks the instance fits the mechanism, then divides it.
    pub fn allocate<T: Scalar>(&self, instance: &Instance<T>) -> Result<Allocation<T>> {
        if instance.resource() != self.resource() {
            return Err(Error::WrongResource {
                mechanism: self.name(),
                expected: self.resource().as_str(),
                found: instance.resource().as_str(),
            });
        }
        if let Some(expected) = self.agent_count() {
            if instance.agent_count() != expected {
                return Err(Error::ShapeMismatch {
                    expected,
                    found: instance.agent_count(),
                });
            }
        }
        let v = instance.valuations();
        Ok(match self {
            Mechanism::TwoAgentCake => two_agent_cake(&v[0], &v[1]),
            Mechanism::TwoAgentChore => two_agent_chore(&v[0], &v[1]),
            Mechanism::CutAndChoose => cut_and_choose(&v[0], &v[1]),
            Mechanism::PrefixCake => prefix_cake(&instance.prefix_endpoints()?)?,
            Mechanism::PrefixChore => prefix_chore(&instance.prefix_endpoints()?)?,
            Mechanism::ConnectedFreeDisposal => {
                let xs = instance.prefix_endpoints()?;
                connected_free_disposal(&xs[0], &xs[1])
            }
        })
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mechanism {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Mechanism::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Mechanism::ALL.iter().map(|m| m.name()).collect();
                format!(
                    "unknown mechanism `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}
