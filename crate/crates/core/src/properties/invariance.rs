use crate::error::{Error, Result};
use crate::mechanisms::Mechanism;
use crate::model::{check_permutation, Instance};
use crate::scalar::Scalar;

use super::indicator::indicator_vector;
use super::report::{Property, PropertyReport, Witness};

/// Runs `mechanism` on `instance` and on the instance whose position `k`
/// holds agent `permutation[k]`, then checks every agent values her piece
/// the same in both runs.
///
/// In the witness, `permuted_values[i]` is what agent `i` of the original
/// instance gets in the permuted run.
pub fn check_anonymity<T: Scalar>(
    mechanism: Mechanism,
    instance: &Instance<T>,
    permutation: &[usize],
) -> Result<PropertyReport<T>> {
    check_permutation(permutation, instance.agent_count())?;
    let original = mechanism.allocate(instance)?;
    let permuted = mechanism.allocate(&instance.permuted(permutation)?)?;
    let mut position = vec![0; permutation.len()];
    for (k, &agent) in permutation.iter().enumerate() {
        position[agent] = k;
    }
    let original_values = original.values(instance)?;
    let permuted_values: Vec<T> = instance
        .valuations()
        .iter()
        .enumerate()
        .map(|(agent, v)| v.value(&permuted.pieces()[position[agent]]))
        .collect();
    match (0..original_values.len()).find(|&i| original_values[i] != permuted_values[i]) {
        Some(agent) => Ok(PropertyReport::violated(
            Property::Anonymous,
            Witness::Relabeling {
                permutation: permutation.to_vec(),
                agent,
                original_values,
                permuted_values,
            },
        )),
        None => Ok(PropertyReport::holds(Property::Anonymous)),
    }
}

/// Compares two instances with equal indicator vectors. Errors with
/// [`Error::PreconditionUnmet`] when the vectors differ.
pub fn check_position_oblivious<T: Scalar>(
    mechanism: Mechanism,
    first: &Instance<T>,
    second: &Instance<T>,
) -> Result<PropertyReport<T>> {
    if first.resource() != second.resource() || indicator_vector(first) != indicator_vector(second)
    {
        return Err(Error::PreconditionUnmet(
            "instances have different indicator vectors".into(),
        ));
    }
    let first_values = mechanism.allocate(first)?.values(first)?;
    let second_values = mechanism.allocate(second)?.values(second)?;
    match (0..first_values.len()).find(|&i| first_values[i] != second_values[i]) {
        Some(agent) => Ok(PropertyReport::violated(
            Property::PositionOblivious,
            Witness::PositionDependence {
                agent,
                first_values,
                second_values,
            },
        )),
        None => Ok(PropertyReport::holds(Property::PositionOblivious)),
    }
}
