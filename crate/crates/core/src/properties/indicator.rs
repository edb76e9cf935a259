use std::collections::BTreeMap;

use crate::interval::atoms;
use crate::model::Instance;
use crate::scalar::Scalar;

/// A set of agents as a sorted list of zero-based indices.
pub type AgentSet = Vec<usize>;

/// Length of cake desired by exactly each subset of agents. Subsets with
/// length zero are absent, so two vectors compare equal exactly when
/// they agree on all `2^n` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndicatorVector<T> {
    agents: usize,
    entries: BTreeMap<AgentSet, T>,
}

impl<T: Scalar> IndicatorVector<T> {
    pub fn agent_count(&self) -> usize {
        self.agents
    }

    /// Zero for subsets nobody desires exclusively.
    pub fn entry(&self, subset: &[usize]) -> T {
        self.entries.get(subset).cloned().unwrap_or_else(T::zero)
    }

    /// The nonzero entries in subset order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&AgentSet, &T)> {
        self.entries.iter()
    }

    pub fn sum(&self) -> T {
        self.entries
            .values()
            .fold(T::zero(), |acc, x| acc + x.clone())
    }
}

pub fn indicator_vector<T: Scalar>(instance: &Instance<T>) -> IndicatorVector<T> {
    let mut entries: BTreeMap<AgentSet, T> = BTreeMap::new();
    for atom in atoms(instance.valuations().iter().map(|v| v.desired())) {
        let mid = atom.midpoint();
        let subset: AgentSet = instance
            .valuations()
            .iter()
            .enumerate()
            .filter(|(_, v)| v.desired().contains(&mid))
            .map(|(i, _)| i)
            .collect();
        let slot = entries.entry(subset).or_insert_with(T::zero);
        *slot = slot.clone() + atom.length();
    }
    IndicatorVector {
        agents: instance.agent_count(),
        entries,
    }
}
