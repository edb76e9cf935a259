use std::fmt;

use crate::error::Result;
use crate::interval::{Interval, IntervalSet};
use crate::mechanisms::Mechanism;
use crate::model::{Allocation, Instance, Valuation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    EnvyFree,
    Proportional,
    ParetoOptimal,
    FullAllocation,
    Connected,
    Anonymous,
    PositionOblivious,
    Truthful,
}

impl Property {
    pub fn name(&self) -> &'static str {
        match self {
            Property::EnvyFree => "envy-free",
            Property::Proportional => "proportional",
            Property::ParetoOptimal => "pareto-optimal",
            Property::FullAllocation => "full-allocation",
            Property::Connected => "connected",
            Property::Anonymous => "anonymous",
            Property::PositionOblivious => "position-oblivious",
            Property::Truthful => "truthful",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Violated,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        }
    }
}

/// Evidence for a violation. Agent indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<T> {
    /// `agent` prefers the piece of `other`.
    Envy {
        agent: usize,
        other: usize,
        own_value: T,
        other_value: T,
    },
    /// `agent` gets less (cake) or more (chore) than `threshold`.
    BelowShare {
        agent: usize,
        value: T,
        threshold: T,
    },
    /// `atom` is held by `holder`, but moving it to `claimant` helps
    /// `claimant` without hurting `holder`.
    Misallocated {
        atom: Interval<T>,
        holder: usize,
        claimant: usize,
    },
    /// Part of the resource nobody received.
    Uncovered { gap: IntervalSet<T> },
    Overlap {
        first: usize,
        second: usize,
        shared: IntervalSet<T>,
    },
    /// A piece made of more than one interval.
    Disconnected { agent: usize, intervals: usize },
    /// Relabeling agents changed what `agent` receives.
    Relabeling {
        permutation: Vec<usize>,
        agent: usize,
        original_values: Vec<T>,
        permuted_values: Vec<T>,
    },
    /// Two instances with the same indicator vector give `agent` different
    /// values.
    PositionDependence {
        agent: usize,
        first_values: Vec<T>,
        second_values: Vec<T>,
    },
    /// Reporting `report` instead of the truth pays off for `agent`.
    Deviation {
        agent: usize,
        report: Valuation<T>,
        truthful_value: T,
        deviation_value: T,
    },
}

impl<T: Scalar> Witness<T> {
    /// Re-derives an allocation-level witness from scratch.
    pub fn recheck_allocation(&self, instance: &Instance<T>, alloc: &Allocation<T>) -> bool {
        let resource = instance.resource();
        let value_of = |agent: usize, piece: usize| -> Option<T> {
            Some(
                instance
                    .valuation(agent)
                    .ok()?
                    .value(alloc.piece(piece).ok()?),
            )
        };
        match self {
            Witness::Envy {
                agent,
                other,
                own_value,
                other_value,
            } => {
                value_of(*agent, *agent).as_ref() == Some(own_value)
                    && value_of(*agent, *other).as_ref() == Some(other_value)
                    && resource.prefers(other_value, own_value)
            }
            Witness::BelowShare {
                agent,
                value,
                threshold,
            } => {
                let Ok(v) = instance.valuation(*agent) else {
                    return false;
                };
                let share = v.total() / T::from_count(instance.agent_count());
                value_of(*agent, *agent).as_ref() == Some(value)
                    && &share == threshold
                    && resource.prefers(threshold, value)
            }
            Witness::Misallocated {
                atom,
                holder,
                claimant,
            } => {
                let mid = atom.midpoint();
                let (Ok(held), Ok(h), Ok(c)) = (
                    alloc.piece(*holder),
                    instance.valuation(*holder),
                    instance.valuation(*claimant),
                ) else {
                    return false;
                };
                let holder_wants = h.desired().contains(&mid);
                let claimant_wants = c.desired().contains(&mid);
                held.contains(&mid)
                    && holder != claimant
                    && match resource {
                        crate::model::Resource::Cake => claimant_wants && !holder_wants,
                        crate::model::Resource::Chore => holder_wants && !claimant_wants,
                    }
            }
            Witness::Uncovered { gap } => !gap.is_empty() && alloc.unallocated() == *gap,
            Witness::Overlap {
                first,
                second,
                shared,
            } => match (alloc.piece(*first), alloc.piece(*second)) {
                (Ok(a), Ok(b)) => !shared.is_empty() && a.intersect(b) == *shared,
                _ => false,
            },
            Witness::Disconnected { agent, intervals } => alloc
                .piece(*agent)
                .map(|p| p.interval_count() == *intervals && *intervals > 1)
                .unwrap_or(false),
            _ => false,
        }
    }

    /// Re-runs the mechanism for a relabeling or deviation witness.
    pub fn recheck_mechanism(&self, mechanism: Mechanism, instance: &Instance<T>) -> Result<bool> {
        match self {
            Witness::Relabeling {
                permutation,
                agent,
                original_values,
                permuted_values,
            } => {
                let original = mechanism.allocate(instance)?;
                let permuted = mechanism.allocate(&instance.permuted(permutation)?)?;
                let position = permutation
                    .iter()
                    .position(|k| k == agent)
                    .expect("agent appears in the permutation");
                let v = instance.valuation(*agent)?;
                let before = v.value(original.piece(*agent)?);
                let after = v.value(permuted.piece(position)?);
                Ok(before == original_values[*agent]
                    && after == permuted_values[*agent]
                    && before != after)
            }
            Witness::Deviation {
                agent,
                report,
                truthful_value,
                deviation_value,
            } => {
                let truth = instance.valuation(*agent)?;
                let honest = truth.value(mechanism.allocate(instance)?.piece(*agent)?);
                let lied = mechanism.allocate(&instance.with_report(*agent, report.clone())?)?;
                let gained = truth.value(lied.piece(*agent)?);
                Ok(&honest == truthful_value
                    && &gained == deviation_value
                    && instance.resource().prefers(&gained, &honest))
            }
            _ => Ok(false),
        }
    }

    /// Re-runs the mechanism on both instances of a position-dependence
    /// witness.
    pub fn recheck_pair(
        &self,
        mechanism: Mechanism,
        first: &Instance<T>,
        second: &Instance<T>,
    ) -> Result<bool> {
        let Witness::PositionDependence {
            agent,
            first_values,
            second_values,
        } = self
        else {
            return Ok(false);
        };
        let a = mechanism.allocate(first)?.values(first)?;
        let b = mechanism.allocate(second)?.values(second)?;
        Ok(&a == first_values && &b == second_values && a[*agent] != b[*agent])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport<T> {
    pub property: Property,
    pub verdict: Verdict,
    pub witness: Option<Witness<T>>,
}

impl<T: Scalar> PropertyReport<T> {
    pub fn holds(property: Property) -> Self {
        Self {
            property,
            verdict: Verdict::Holds,
            witness: None,
        }
    }

    pub fn violated(property: Property, witness: Witness<T>) -> Self {
        Self {
            property,
            verdict: Verdict::Violated,
            witness: Some(witness),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}
