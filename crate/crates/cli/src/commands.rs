use std::fs;
use std::path::Path;

use fairdiv::mechanisms::Mechanism;
use fairdiv::properties::{
    check_anonymity, check_envy_free, check_full_and_connected, check_pareto,
    check_position_oblivious, check_proportional, search_deviations, DeviationFamily,
    DeviationSearch, Property, Witness,
};
use fairdiv::{Instance, PropertyReport, Rational, Scalar};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{Command, Format, RunConfig};
use crate::corpus;
use crate::error::CliError;
use crate::io::{allocation_json, parse_instance, report_json, Document};

/// What a command printed and how it wants the process to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub lines: Vec<String>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub fn run(config: &RunConfig) -> Outcome {
    let result = match config.workers {
        Some(0) => Err(CliError::Usage("--workers must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))
            .and_then(|pool| pool.install(|| dispatch(config))),
        None => dispatch(config),
    };
    result.unwrap_or_else(|e| Outcome {
        code: EXIT_USAGE,
        lines: vec![match config.format {
            Format::Text => format!("error: {e}"),
            Format::Machine => json!({"error": e.to_string()}).to_string(),
        }],
    })
}

fn dispatch(config: &RunConfig) -> Result<Outcome, CliError> {
    if config.grid == 0 {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    match config.command {
        Command::Allocate => allocate(config),
        Command::Verify => verify(config),
        Command::Deviate => deviate(config),
        Command::Reproduce => Ok(reproduce(config.format)),
        Command::Enumerate => enumerate(config),
    }
}

fn mechanism(config: &RunConfig) -> Result<Mechanism, CliError> {
    config
        .mechanism
        .ok_or_else(|| CliError::Usage("--mechanism is required".into()))
}

fn read_document(path: Option<&Path>) -> Result<Document, CliError> {
    let path = path.ok_or_else(|| CliError::Usage("--instance is required".into()))?;
    let bytes = fs::read(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&bytes)
}

fn report_line(format: Format, doc: &Document, report: &PropertyReport) -> String {
    let value = report_json(doc, report);
    match format {
        Format::Machine => value.to_string(),
        Format::Text => match &value["witness"] {
            Value::Null => format!("{}: {}", report.property, report.verdict.as_str()),
            w => format!("{}: {} {}", report.property, report.verdict.as_str(), w),
        },
    }
}

fn allocate(config: &RunConfig) -> Result<Outcome, CliError> {
    let mech = mechanism(config)?;
    let doc = read_document(config.instance.as_deref())?;
    let alloc = mech.allocate(&doc.instance)?;
    let lines = match config.format {
        Format::Machine => vec![allocation_json(&doc, &alloc).to_string()],
        Format::Text => {
            let mut lines: Vec<String> = alloc
                .pieces()
                .iter()
                .zip(doc.instance.valuations())
                .zip(&doc.ids)
                .map(|((piece, v), id)| format!("{id}: {piece} value {}", v.value(piece)))
                .collect();
            if alloc.is_free_disposal() {
                lines.push(format!("unallocated: {}", alloc.unallocated()));
            }
            lines
        }
    };
    Ok(Outcome {
        code: EXIT_OK,
        lines,
    })
}

/// Envy-freeness, proportionality, Pareto optimality, full allocation,
/// connectedness and truthfulness for one instance, in that order. Pareto
/// is skipped for free-disposal outputs.
pub fn evaluate(
    mech: Mechanism,
    instance: &Instance,
    search: &DeviationSearch,
) -> Result<Vec<PropertyReport>, CliError> {
    let alloc = mech.allocate(instance)?;
    let mut reports = vec![
        check_envy_free(instance, &alloc)?,
        check_proportional(instance, &alloc)?,
    ];
    if !alloc.is_free_disposal() {
        reports.push(check_pareto(instance, &alloc)?);
    }
    let fc = check_full_and_connected(&alloc);
    reports.push(fc.full);
    reports.push(fc.connected);
    reports.push(truthfulness(mech, instance, search)?);
    Ok(reports)
}

/// The first agent with a profitable deviation, if any.
pub fn truthfulness(
    mech: Mechanism,
    instance: &Instance,
    search: &DeviationSearch,
) -> Result<PropertyReport, CliError> {
    for agent in 0..instance.agent_count() {
        let report = search_deviations(mech, instance, agent, search)?;
        if report.is_violated() {
            return Ok(report);
        }
    }
    Ok(PropertyReport::holds(Property::Truthful))
}

/// Permutations of `0..n` in lexicographic order, identity first.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// Largest agent count for which `verify` tries every relabeling; beyond
/// it only the reversal is tried.
const ALL_PERMUTATIONS_UP_TO: usize = 5;

fn anonymity(mech: Mechanism, instance: &Instance) -> Result<PropertyReport, CliError> {
    let n = instance.agent_count();
    let candidates = if n <= ALL_PERMUTATIONS_UP_TO {
        permutations(n)
    } else {
        vec![(0..n).rev().collect()]
    };
    for p in candidates {
        let report = check_anonymity(mech, instance, &p)?;
        if report.is_violated() {
            return Ok(report);
        }
    }
    Ok(PropertyReport::holds(Property::Anonymous))
}

fn verify(config: &RunConfig) -> Result<Outcome, CliError> {
    let mech = mechanism(config)?;
    let doc = read_document(config.instance.as_deref())?;
    let search = DeviationSearch::new(config.grid, config.family_for(mech));
    let mut reports = evaluate(mech, &doc.instance, &search)?;
    reports.push(anonymity(mech, &doc.instance)?);
    if config.paired.is_some() {
        let other = read_document(config.paired.as_deref())?;
        reports.push(check_position_oblivious(
            mech,
            &doc.instance,
            &other.instance,
        )?);
    }
    let code = if reports.iter().any(|r| r.is_violated()) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let lines = reports
        .iter()
        .map(|r| report_line(config.format, &doc, r))
        .collect();
    Ok(Outcome { code, lines })
}

fn deviate(config: &RunConfig) -> Result<Outcome, CliError> {
    let mech = mechanism(config)?;
    let doc = read_document(config.instance.as_deref())?;
    let search = DeviationSearch::new(config.grid, config.family_for(mech));
    let agents: Vec<usize> = match &config.agent {
        Some(id) => vec![doc
            .ids
            .iter()
            .position(|x| x == id)
            .ok_or_else(|| CliError::Usage(format!("no agent with id `{id}`")))?],
        None => (0..doc.instance.agent_count()).collect(),
    };
    let mut code = EXIT_OK;
    let mut lines = vec![];
    for agent in agents {
        let report = search_deviations(mech, &doc.instance, agent, &search)?;
        if report.is_violated() {
            code = EXIT_VIOLATION;
        }
        lines.push(match config.format {
            Format::Machine => {
                let mut value = report_json(&doc, &report);
                value["agent"] = json!(doc.id(agent));
                value.to_string()
            }
            Format::Text => format!(
                "{}: {}",
                doc.id(agent),
                report_line(Format::Text, &doc, &report)
            ),
        });
    }
    Ok(Outcome { code, lines })
}

fn reproduce(format: Format) -> Outcome {
    let cases = corpus::run_corpus();
    let code = if cases.iter().all(|c| c.matches()) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    let mut lines: Vec<String> = cases
        .iter()
        .map(|c| match format {
            Format::Machine => json!({
                "case": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "status": if c.matches() { "match" } else { "diff" },
            })
            .to_string(),
            Format::Text if c.matches() => format!("match {}: {}", c.name, c.actual),
            Format::Text => format!("DIFF  {}: expected {} got {}", c.name, c.expected, c.actual),
        })
        .collect();
    let matched = cases.iter().filter(|c| c.matches()).count();
    lines.push(match format {
        Format::Machine => json!({"cases": cases.len(), "matched": matched}).to_string(),
        Format::Text => format!("{matched}/{} cases match", cases.len()),
    });
    Outcome { code, lines }
}

/// Tally of one property over a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub property: Property,
    pub guaranteed: bool,
    pub checked: usize,
    pub violated: usize,
    /// Deadlines and witness of the first violating instance.
    pub first: Option<(Vec<Rational>, Witness<Rational>)>,
}

/// Every deadline vector with entries in `{0, 1/D, ..., 1}`, in
/// lexicographic order.
pub fn prefix_grid(agents: usize, grid: usize) -> Vec<Vec<Rational>> {
    let d = Rational::from_count(grid);
    let count = (grid + 1).pow(agents as u32);
    (0..count)
        .map(|mut code| {
            let mut digits = vec![0; agents];
            for slot in digits.iter_mut().rev() {
                *slot = code % (grid + 1);
                code /= grid + 1;
            }
            digits
                .into_iter()
                .map(|k| Rational::from_count(k) / d.clone())
                .collect()
        })
        .collect()
}

/// Runs `evaluate` on every prefix instance of the grid. The tally only
/// depends on the instances, never on scheduling.
pub fn sweep_prefix(
    mech: Mechanism,
    agents: usize,
    grid: usize,
    family: DeviationFamily,
) -> Result<Vec<SweepRow>, CliError> {
    if let Some(n) = mech.agent_count() {
        if n != agents {
            return Err(CliError::Usage(format!("{mech} needs exactly {n} agents")));
        }
    }
    if agents == 0 {
        return Err(CliError::Usage("--agents must be at least 1".into()));
    }
    let search = DeviationSearch::new(grid, family);
    let instances = prefix_grid(agents, grid);
    let results: Vec<Vec<PropertyReport>> = instances
        .par_iter()
        .map(|xs| evaluate(mech, &Instance::prefix(mech.resource(), xs)?, &search))
        .collect::<Result<_, _>>()?;
    let mut rows: Vec<SweepRow> = vec![];
    for (xs, reports) in instances.iter().zip(results) {
        for report in reports {
            let row = match rows.iter_mut().find(|r| r.property == report.property) {
                Some(row) => row,
                None => {
                    rows.push(SweepRow {
                        property: report.property,
                        guaranteed: mech.guarantees().contains(&report.property),
                        checked: 0,
                        violated: 0,
                        first: None,
                    });
                    rows.last_mut().unwrap()
                }
            };
            row.checked += 1;
            if let Some(w) = report.witness {
                row.violated += 1;
                row.first.get_or_insert((xs.clone(), w));
            }
        }
    }
    Ok(rows)
}

fn enumerate(config: &RunConfig) -> Result<Outcome, CliError> {
    let mech = mechanism(config)?;
    let family = config.family_for(mech);
    let rows = sweep_prefix(mech, config.agents, config.grid, family)?;
    let instances = (config.grid + 1).pow(config.agents as u32);
    let code = if rows.iter().any(|r| r.guaranteed && r.violated > 0) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let mut lines = vec![];
    for row in &rows {
        let first = row.first.as_ref().map(|(xs, w)| {
            let doc = Document::with_default_ids(
                Instance::prefix(mech.resource(), xs).expect("grid deadlines lie in [0, 1]"),
            );
            json!({
                "deadlines": xs.iter().map(|x| x.to_fraction()).collect::<Vec<_>>(),
                "witness": crate::io::witness_json(&doc, w),
            })
        });
        lines.push(match config.format {
            Format::Machine => json!({
                "property": row.property.name(),
                "guaranteed": row.guaranteed,
                "checked": row.checked,
                "violated": row.violated,
                "first_violation": first,
            })
            .to_string(),
            Format::Text => {
                let tag = if row.guaranteed {
                    "guaranteed"
                } else {
                    "not guaranteed"
                };
                let mut line = format!(
                    "{}: {} of {} violated ({tag})",
                    row.property, row.violated, row.checked
                );
                if let Some(first) = first {
                    line.push_str(&format!(", first {first}"));
                }
                line
            }
        });
    }
    lines.push(match config.format {
        Format::Machine => json!({
            "mechanism": mech.name(),
            "agents": config.agents,
            "grid": config.grid,
            "family": family.as_str(),
            "instances": instances,
        })
        .to_string(),
        Format::Text => format!(
            "{mech}: {instances} instances, {} agents, grid 1/{}",
            config.agents, config.grid
        ),
    });
    Ok(Outcome { code, lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_lexicographic() {
        assert_eq!(
            permutations(3),
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn prefix_grid_counts() {
        let g = prefix_grid(2, 2);
        assert_eq!(g.len(), 9);
        assert_eq!(
            g[1],
            vec![Rational::from_ratio(0, 1), Rational::from_ratio(1, 2)]
        );
    }

    #[test]
    fn zero_grid_is_a_usage_error() {
        let mut config = RunConfig::new(Command::Reproduce);
        config.grid = 0;
        assert_eq!(run(&config).code, EXIT_USAGE);
    }
}
