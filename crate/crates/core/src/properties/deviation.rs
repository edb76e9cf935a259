use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::mechanisms::Mechanism;
use crate::model::{Instance, Valuation};
use crate::scalar::Scalar;

use super::report::{Property, PropertyReport, Witness};

pub const DEFAULT_SUBSET_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeviationFamily {
    /// Reports `[0, x']` for every grid point `x'`.
    Prefix,
    /// Every union of grid cells.
    Subsets,
}

impl DeviationFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            DeviationFamily::Prefix => "prefix",
            DeviationFamily::Subsets => "subsets",
        }
    }
}

impl fmt::Display for DeviationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DeviationFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "prefix" => Ok(DeviationFamily::Prefix),
            "subsets" => Ok(DeviationFamily::Subsets),
            other => Err(format!(
                "unknown family `{other}` (expected prefix or subsets)"
            )),
        }
    }
}

/// The grid is `{0, 1/D, ..., 1}` plus every endpoint appearing in the
/// instance, so the instance's own reports are always candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeviationSearch {
    pub grid: usize,
    pub family: DeviationFamily,
    /// Largest number of cells the subsets family will enumerate.
    pub subset_cap: usize,
}

impl DeviationSearch {
    pub fn new(grid: usize, family: DeviationFamily) -> Self {
        Self {
            grid,
            family,
            subset_cap: DEFAULT_SUBSET_CAP,
        }
    }

    pub fn points<T: Scalar>(&self, instance: &Instance<T>) -> Result<Vec<T>> {
        if self.grid == 0 {
            return Err(Error::PreconditionUnmet(
                "grid denominator must be positive".into(),
            ));
        }
        let d = T::from_count(self.grid);
        let mut points: Vec<T> = (0..=self.grid)
            .map(|k| T::from_count(k) / d.clone())
            .collect();
        for v in instance.valuations() {
            points.extend(v.desired().endpoints().cloned());
        }
        points.sort();
        points.dedup();
        Ok(points)
    }

    /// Every report in the family, in enumeration order. For subsets,
    /// candidate `m` is the union of the cells whose bit is set in `m`,
    /// the leftmost cell being the lowest bit.
    pub fn reports<T: Scalar>(&self, instance: &Instance<T>) -> Result<Vec<Valuation<T>>> {
        let points = self.points(instance)?;
        match self.family {
            DeviationFamily::Prefix => points.into_iter().map(Valuation::prefix).collect(),
            DeviationFamily::Subsets => {
                let cells = points.len() - 1;
                if cells > self.subset_cap {
                    return Err(Error::SearchSpaceTooLarge {
                        cells,
                        cap: self.subset_cap,
                    });
                }
                Ok((0u64..1 << cells)
                    .map(|mask| {
                        let pairs = (0..cells)
                            .filter(|k| mask >> k & 1 == 1)
                            .map(|k| (points[k].clone(), points[k + 1].clone()));
                        Valuation::new(
                            IntervalSet::from_pairs(pairs).expect("grid cells lie in [0, 1]"),
                        )
                    })
                    .collect())
            }
        }
    }
}

/// Tries every report in the family for `agent` and scores it under her
/// true valuation. The witness is the best deviation, earliest in
/// enumeration order among equally good ones, whatever the thread count.
pub fn search_deviations<T: Scalar>(
    mechanism: Mechanism,
    instance: &Instance<T>,
    agent: usize,
    search: &DeviationSearch,
) -> Result<PropertyReport<T>> {
    let truth = instance.valuation(agent)?;
    if search.family == DeviationFamily::Prefix && !instance.is_prefix_form() {
        return Err(Error::PreconditionUnmet(
            "the prefix family needs a prefix-form instance".into(),
        ));
    }
    if search.family == DeviationFamily::Subsets && mechanism.needs_prefix_form() {
        return Err(Error::PreconditionUnmet(format!(
            "{mechanism} only accepts prefix reports"
        )));
    }
    let truthful_value = truth.value(mechanism.allocate(instance)?.piece(agent)?);
    let reports = search.reports(instance)?;
    let resource = instance.resource();
    let scored: Vec<T> = reports
        .par_iter()
        .map(|report| {
            let lied = mechanism.allocate(&instance.with_report(agent, report.clone())?)?;
            Ok(truth.value(lied.piece(agent)?))
        })
        .collect::<Result<_>>()?;
    let mut best: Option<usize> = None;
    for (k, value) in scored.iter().enumerate() {
        let incumbent = best.map_or(&truthful_value, |b| &scored[b]);
        if resource.prefers(value, incumbent) {
            best = Some(k);
        }
    }
    Ok(match best {
        Some(k) => PropertyReport::violated(
            Property::Truthful,
            Witness::Deviation {
                agent,
                report: reports[k].clone(),
                truthful_value,
                deviation_value: scored[k].clone(),
            },
        ),
        None => PropertyReport::holds(Property::Truthful),
    })
}
