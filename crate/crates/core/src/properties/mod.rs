//! Exact fairness, efficiency and incentive checks.
//!
//! Every checker returns a [`PropertyReport`]. A `Violated` verdict always
//! carries a [`Witness`] that can be rechecked on its own.

mod checks;
mod deviation;
mod indicator;
mod invariance;
mod report;

pub use checks::{
    check_envy_free, check_full_and_connected, check_pareto, check_proportional, FullAndConnected,
};
pub use deviation::{search_deviations, DeviationFamily, DeviationSearch, DEFAULT_SUBSET_CAP};
pub use indicator::{indicator_vector, AgentSet, IndicatorVector};
pub use invariance::{check_anonymity, check_position_oblivious};
pub use report::{Property, PropertyReport, Verdict, Witness};
