//! Valuations, instances and allocations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Resource {
    /// Desirable: agents want as much value as possible.
    Cake,
    /// Undesirable: agents want as little value as possible.
    Chore,
}

impl Resource {
    pub fn as_str(&self) -> &'static str {
        match self {
            Resource::Cake => "cake",
            Resource::Chore => "chore",
        }
    }

    /// Whether an agent strictly prefers a piece worth `candidate` over
    /// one worth `current`.
    pub fn prefers<T: Scalar>(&self, candidate: &T, current: &T) -> bool {
        match self {
            Resource::Cake => candidate > current,
            Resource::Chore => candidate < current,
        }
    }
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Resource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "cake" => Ok(Resource::Cake),
            "chore" => Ok(Resource::Chore),
            other => Err(format!(
                "unknown resource `{other}` (expected cake or chore)"
            )),
        }
    }
}

/// Piecewise uniform valuation: density 1 on `desired`, 0 elsewhere.
/// Not normalized, so the value of the whole resource is the length of
/// `desired`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Valuation<T> {
    desired: IntervalSet<T>,
}

impl<T: Scalar> Valuation<T> {
    pub fn new(desired: IntervalSet<T>) -> Self {
        Self { desired }
    }

    pub fn from_pairs<I: IntoIterator<Item = (T, T)>>(pairs: I) -> Result<Self> {
        IntervalSet::from_pairs(pairs).map(Self::new)
    }

    /// Values exactly `[0, x]`.
    pub fn prefix(x: T) -> Result<Self> {
        IntervalSet::prefix(x).map(Self::new)
    }

    pub fn desired(&self) -> &IntervalSet<T> {
        &self.desired
    }

    pub fn value(&self, piece: &IntervalSet<T>) -> T {
        self.desired.intersect(piece).total_length()
    }

    /// Value of the whole resource.
    pub fn total(&self) -> T {
        self.desired.total_length()
    }

    /// The `x` of a `[0, x]` valuation; `0` for an empty one. `None` for
    /// anything else.
    pub fn prefix_endpoint(&self) -> Option<PrefixEndpoint<T>> {
        match self.desired.intervals() {
            [] => Some(PrefixEndpoint(T::zero())),
            [only] if only.left().is_zero() => Some(PrefixEndpoint(only.right().clone())),
            _ => None,
        }
    }
}

/// Right end `x` of a prefix valuation `[0, x]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrefixEndpoint<T>(T);

impl<T: Scalar> PrefixEndpoint<T> {
    pub fn new(x: T) -> Result<Self> {
        if x < T::zero() || x > T::one() {
            return Err(Error::OutOfRange(x.to_string()));
        }
        Ok(Self(x))
    }

    pub fn get(&self) -> &T {
        &self.0
    }

    pub fn into_inner(self) -> T {
        self.0
    }

    pub fn valuation(&self) -> Valuation<T> {
        Valuation::new(IntervalSet::span(T::zero(), self.0.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance<T> {
    resource: Resource,
    valuations: Vec<Valuation<T>>,
}

impl<T: Scalar> Instance<T> {
    pub fn new(resource: Resource, valuations: Vec<Valuation<T>>) -> Result<Self> {
        if valuations.is_empty() {
            return Err(Error::NoAgents);
        }
        Ok(Self {
            resource,
            valuations,
        })
    }

    pub fn cake(valuations: Vec<Valuation<T>>) -> Result<Self> {
        Self::new(Resource::Cake, valuations)
    }

    pub fn chore(valuations: Vec<Valuation<T>>) -> Result<Self> {
        Self::new(Resource::Chore, valuations)
    }

    /// Every agent values `[0, x_i]`.
    pub fn prefix(resource: Resource, xs: &[T]) -> Result<Self> {
        let valuations = xs
            .iter()
            .map(|x| PrefixEndpoint::new(x.clone()).map(|x| x.valuation()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(resource, valuations)
    }

    pub fn resource(&self) -> Resource {
        self.resource
    }

    pub fn agent_count(&self) -> usize {
        self.valuations.len()
    }

    pub fn valuations(&self) -> &[Valuation<T>] {
        &self.valuations
    }

    pub fn valuation(&self, agent: usize) -> Result<&Valuation<T>> {
        self.valuations.get(agent).ok_or(Error::NoSuchAgent(agent))
    }

    pub fn prefix_endpoints(&self) -> Result<Vec<PrefixEndpoint<T>>> {
        self.valuations
            .iter()
            .enumerate()
            .map(|(agent, v)| v.prefix_endpoint().ok_or(Error::NotPrefixForm { agent }))
            .collect()
    }

    pub fn is_prefix_form(&self) -> bool {
        self.valuations
            .iter()
            .all(|v| v.prefix_endpoint().is_some())
    }

    /// The same instance with `agent` reporting `report` instead.
    pub fn with_report(&self, agent: usize, report: Valuation<T>) -> Result<Self> {
        let mut next = self.clone();
        *next
            .valuations
            .get_mut(agent)
            .ok_or(Error::NoSuchAgent(agent))? = report;
        Ok(next)
    }

    /// Position `k` of the result holds the valuation of agent
    /// `permutation[k]`.
    pub fn permuted(&self, permutation: &[usize]) -> Result<Self> {
        check_permutation(permutation, self.agent_count())?;
        Ok(Self {
            resource: self.resource,
            valuations: permutation
                .iter()
                .map(|&k| self.valuations[k].clone())
                .collect(),
        })
    }
}

pub(crate) fn check_permutation(permutation: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if permutation.len() != n {
        return Err(Error::InvalidPermutation(permutation.to_vec()));
    }
    for &k in permutation {
        if k >= n || std::mem::replace(&mut seen[k], true) {
            return Err(Error::InvalidPermutation(permutation.to_vec()));
        }
    }
    Ok(())
}

/// One piece per agent. Unless built with [`Allocation::partial`], the
/// pieces have pairwise measure-zero overlap and cover `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Allocation<T> {
    pieces: Vec<IntervalSet<T>>,
    free_disposal: bool,
}

impl<T: Scalar> Allocation<T> {
    /// Validates the full-allocation invariant.
    pub fn new(pieces: Vec<IntervalSet<T>>) -> Result<Self> {
        check_disjoint(&pieces)?;
        let covered = pieces
            .iter()
            .fold(IntervalSet::empty(), |acc, piece| acc.union(piece));
        if covered != IntervalSet::unit() {
            return Err(Error::Incomplete);
        }
        Ok(Self {
            pieces,
            free_disposal: false,
        })
    }

    /// Disjoint pieces that may leave part of the resource unallocated.
    pub fn partial(pieces: Vec<IntervalSet<T>>) -> Result<Self> {
        check_disjoint(&pieces)?;
        Ok(Self {
            pieces,
            free_disposal: true,
        })
    }

    pub fn pieces(&self) -> &[IntervalSet<T>] {
        &self.pieces
    }

    pub fn piece(&self, agent: usize) -> Result<&IntervalSet<T>> {
        self.pieces.get(agent).ok_or(Error::NoSuchAgent(agent))
    }

    pub fn agent_count(&self) -> usize {
        self.pieces.len()
    }

    /// Built without the full-allocation guarantee.
    pub fn is_free_disposal(&self) -> bool {
        self.free_disposal
    }

    pub fn unallocated(&self) -> IntervalSet<T> {
        self.pieces
            .iter()
            .fold(IntervalSet::unit(), |rest, piece| rest.subtract(piece))
    }

    /// Each agent's value for her own piece.
    pub fn values(&self, instance: &Instance<T>) -> Result<Vec<T>> {
        if instance.agent_count() != self.agent_count() {
            return Err(Error::ShapeMismatch {
                expected: instance.agent_count(),
                found: self.agent_count(),
            });
        }
        Ok(instance
            .valuations()
            .iter()
            .zip(&self.pieces)
            .map(|(v, piece)| v.value(piece))
            .collect())
    }

    /// Reorders pieces: position `k` of the result holds piece
    /// `order[k]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        check_permutation(order, self.agent_count())?;
        Ok(Self {
            pieces: order.iter().map(|&k| self.pieces[k].clone()).collect(),
            free_disposal: self.free_disposal,
        })
    }
}

fn check_disjoint<T: Scalar>(pieces: &[IntervalSet<T>]) -> Result<()> {
    for (first, a) in pieces.iter().enumerate() {
        for (offset, b) in pieces[first + 1..].iter().enumerate() {
            if !a.intersect(b).is_empty() {
                return Err(Error::OverlappingPieces {
                    first,
                    second: first + 1 + offset,
                });
            }
        }
    }
    Ok(())
}
