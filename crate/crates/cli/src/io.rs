//! JSON documents: instances in, allocations and reports out.
//!
//! Rationals travel as strings, `"p/q"` on output and `"p/q"`, integers or
//! finite decimals on input, so nothing ever passes through a float.

use std::collections::HashSet;

use fairdiv::properties::Witness;
use fairdiv::Interval;
use fairdiv::{
    Allocation, Instance, IntervalSet, PropertyReport, Rational, Resource, Scalar, Valuation,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    resource: String,
    agents: Vec<RawAgent>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawAgent {
    id: String,
    intervals: Vec<[String; 2]>,
}

/// An instance together with the agent ids it was read with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub ids: Vec<String>,
    pub instance: Instance,
}

impl Document {
    /// Ids `a1, a2, ...`.
    pub fn with_default_ids(instance: Instance) -> Self {
        let ids = (1..=instance.agent_count())
            .map(|k| format!("a{k}"))
            .collect();
        Self { ids, instance }
    }

    pub fn id(&self, agent: usize) -> &str {
        &self.ids[agent]
    }
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    Rational::parse_exact(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn parse_instance(document: &[u8]) -> Result<Document, CliError> {
    let raw: RawInstance =
        serde_json::from_slice(document).map_err(|e| CliError::Parse(e.to_string()))?;
    let resource: Resource = raw.resource.parse().map_err(CliError::Parse)?;
    if raw.agents.is_empty() {
        return Err(CliError::Parse(
            "an instance needs at least one agent".into(),
        ));
    }
    let mut seen = HashSet::new();
    let mut ids = Vec::with_capacity(raw.agents.len());
    let mut valuations = Vec::with_capacity(raw.agents.len());
    for agent in raw.agents {
        if !seen.insert(agent.id.clone()) {
            return Err(CliError::DuplicateAgentId(agent.id));
        }
        let pairs = agent
            .intervals
            .iter()
            .map(|[l, r]| Ok((parse_rational(l)?, parse_rational(r)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        valuations.push(Valuation::from_pairs(pairs)?);
        ids.push(agent.id);
    }
    let instance = Instance::new(resource, valuations)?;
    Ok(Document { ids, instance })
}

pub fn intervals_json(set: &IntervalSet) -> Value {
    Value::Array(
        set.intervals()
            .iter()
            .map(|i| json!([i.left().to_fraction(), i.right().to_fraction()]))
            .collect(),
    )
}

fn interval_json(i: &Interval) -> Value {
    json!([i.left().to_fraction(), i.right().to_fraction()])
}

pub fn instance_json(doc: &Document) -> Value {
    let agents: Vec<Value> = doc
        .ids
        .iter()
        .zip(doc.instance.valuations())
        .map(|(id, v)| json!({"id": id, "intervals": intervals_json(v.desired())}))
        .collect();
    json!({"resource": doc.instance.resource().as_str(), "agents": agents})
}

pub fn allocation_json(doc: &Document, alloc: &Allocation) -> Value {
    let pieces: Vec<Value> = alloc
        .pieces()
        .iter()
        .zip(doc.instance.valuations())
        .zip(&doc.ids)
        .map(|((piece, v), id)| {
            json!({
                "id": id,
                "intervals": intervals_json(piece),
                "value": v.value(piece).to_fraction(),
            })
        })
        .collect();
    json!({"pieces": pieces})
}

fn fractions(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| json!(v.to_fraction())).collect())
}

pub fn witness_json(doc: &Document, witness: &Witness<Rational>) -> Value {
    let id = |agent: &usize| doc.id(*agent).to_string();
    match witness {
        Witness::Envy {
            agent,
            other,
            own_value,
            other_value,
        } => json!({
            "kind": "envy",
            "agent": id(agent),
            "other": id(other),
            "own_value": own_value.to_fraction(),
            "other_value": other_value.to_fraction(),
        }),
        Witness::BelowShare {
            agent,
            value,
            threshold,
        } => json!({
            "kind": "below-share",
            "agent": id(agent),
            "value": value.to_fraction(),
            "threshold": threshold.to_fraction(),
        }),
        Witness::Misallocated {
            atom,
            holder,
            claimant,
        } => json!({
            "kind": "misallocated",
            "atom": interval_json(atom),
            "holder": id(holder),
            "claimant": id(claimant),
        }),
        Witness::Uncovered { gap } => json!({"kind": "uncovered", "gap": intervals_json(gap)}),
        Witness::Overlap {
            first,
            second,
            shared,
        } => json!({
            "kind": "overlap",
            "first": id(first),
            "second": id(second),
            "shared": intervals_json(shared),
        }),
        Witness::Disconnected { agent, intervals } => json!({
            "kind": "disconnected",
            "agent": id(agent),
            "intervals": intervals,
        }),
        Witness::Relabeling {
            permutation,
            agent,
            original_values,
            permuted_values,
        } => json!({
            "kind": "relabeling",
            "permutation": permutation.iter().map(id).collect::<Vec<_>>(),
            "agent": id(agent),
            "original_values": fractions(original_values),
            "permuted_values": fractions(permuted_values),
        }),
        Witness::PositionDependence {
            agent,
            first_values,
            second_values,
        } => json!({
            "kind": "position-dependence",
            "agent": id(agent),
            "first_values": fractions(first_values),
            "second_values": fractions(second_values),
        }),
        Witness::Deviation {
            agent,
            report,
            truthful_value,
            deviation_value,
        } => json!({
            "kind": "deviation",
            "agent": id(agent),
            "report": intervals_json(report.desired()),
            "truthful_value": truthful_value.to_fraction(),
            "deviation_value": deviation_value.to_fraction(),
        }),
    }
}

pub fn report_json(doc: &Document, report: &PropertyReport) -> Value {
    json!({
        "property": report.property.name(),
        "verdict": report.verdict.as_str(),
        "witness": report.witness.as_ref().map(|w| witness_json(doc, w)),
    })
}
