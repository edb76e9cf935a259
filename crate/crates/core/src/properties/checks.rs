use crate::error::{Error, Result};
use crate::interval::{atoms, IntervalSet};
use crate::model::{Allocation, Instance, Resource};
use crate::scalar::Scalar;

use super::report::{Property, PropertyReport, Witness};

fn check_shape<T: Scalar>(instance: &Instance<T>, alloc: &Allocation<T>) -> Result<()> {
    if instance.agent_count() != alloc.agent_count() {
        return Err(Error::ShapeMismatch {
            expected: instance.agent_count(),
            found: alloc.agent_count(),
        });
    }
    Ok(())
}

/// Cake: nobody values another piece more than her own. Chore: nobody
/// values another piece less.
pub fn check_envy_free<T: Scalar>(
    instance: &Instance<T>,
    alloc: &Allocation<T>,
) -> Result<PropertyReport<T>> {
    check_shape(instance, alloc)?;
    let resource = instance.resource();
    for (agent, v) in instance.valuations().iter().enumerate() {
        let own_value = v.value(&alloc.pieces()[agent]);
        for (other, piece) in alloc.pieces().iter().enumerate() {
            let other_value = v.value(piece);
            if other != agent && resource.prefers(&other_value, &own_value) {
                return Ok(PropertyReport::violated(
                    Property::EnvyFree,
                    Witness::Envy {
                        agent,
                        other,
                        own_value,
                        other_value,
                    },
                ));
            }
        }
    }
    Ok(PropertyReport::holds(Property::EnvyFree))
}

/// Every agent gets at least (cake) or at most (chore) `1/n` of her total.
pub fn check_proportional<T: Scalar>(
    instance: &Instance<T>,
    alloc: &Allocation<T>,
) -> Result<PropertyReport<T>> {
    check_shape(instance, alloc)?;
    let n = T::from_count(instance.agent_count());
    for (agent, v) in instance.valuations().iter().enumerate() {
        let value = v.value(&alloc.pieces()[agent]);
        let threshold = v.total() / n.clone();
        if instance.resource().prefers(&threshold, &value) {
            return Ok(PropertyReport::violated(
                Property::Proportional,
                Witness::BelowShare {
                    agent,
                    value,
                    threshold,
                },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::Proportional))
}

/// Pareto optimality through the atom characterization, exact for 0/1
/// densities under full allocation. Cake: an atom someone wants must sit
/// with someone who wants it. Chore: an atom someone does not mind must
/// sit with someone who does not mind it.
pub fn check_pareto<T: Scalar>(
    instance: &Instance<T>,
    alloc: &Allocation<T>,
) -> Result<PropertyReport<T>> {
    check_shape(instance, alloc)?;
    if alloc.is_free_disposal() {
        return Err(Error::PreconditionUnmet(
            "pareto check needs a full allocation".into(),
        ));
    }
    let desired = instance.valuations().iter().map(|v| v.desired());
    let cuts = atoms(desired.chain(alloc.pieces()));
    for atom in cuts {
        let mid = atom.midpoint();
        let wants: Vec<bool> = instance
            .valuations()
            .iter()
            .map(|v| v.desired().contains(&mid))
            .collect();
        let Some(holder) = alloc.pieces().iter().position(|p| p.contains(&mid)) else {
            return Err(Error::Incomplete);
        };
        let claimant = match instance.resource() {
            Resource::Cake if !wants[holder] => wants.iter().position(|&w| w),
            Resource::Chore if wants[holder] => wants.iter().position(|&w| !w),
            _ => None,
        };
        if let Some(claimant) = claimant {
            return Ok(PropertyReport::violated(
                Property::ParetoOptimal,
                Witness::Misallocated {
                    atom,
                    holder,
                    claimant,
                },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::ParetoOptimal))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullAndConnected<T> {
    pub full: PropertyReport<T>,
    pub connected: PropertyReport<T>,
}

/// Full allocation and the connected-piece property. An empty piece counts
/// as connected.
pub fn check_full_and_connected<T: Scalar>(alloc: &Allocation<T>) -> FullAndConnected<T> {
    let pieces = alloc.pieces();
    let mut full = PropertyReport::holds(Property::FullAllocation);
    'outer: for (first, a) in pieces.iter().enumerate() {
        for (second, b) in pieces.iter().enumerate().skip(first + 1) {
            let shared = a.intersect(b);
            if !shared.is_empty() {
                full = PropertyReport::violated(
                    Property::FullAllocation,
                    Witness::Overlap {
                        first,
                        second,
                        shared,
                    },
                );
                break 'outer;
            }
        }
    }
    if full.is_holds() {
        let gap: IntervalSet<T> = alloc.unallocated();
        if !gap.is_empty() {
            full = PropertyReport::violated(Property::FullAllocation, Witness::Uncovered { gap });
        }
    }
    let connected = pieces
        .iter()
        .enumerate()
        .find(|(_, p)| !p.is_connected())
        .map(|(agent, p)| {
            PropertyReport::violated(
                Property::Connected,
                Witness::Disconnected {
                    agent,
                    intervals: p.interval_count(),
                },
            )
        })
        .unwrap_or_else(|| PropertyReport::holds(Property::Connected));
    FullAndConnected { full, connected }
}
