//! Truthful cake cutting and chore division with exact rational arithmetic.
//!
//! The resource is `[0, 1]`. Every agent has a piecewise uniform valuation,
//! so her value for a piece is the length of the part she desires. All
//! mechanisms hand out the whole resource except the one explicitly built
//! with free disposal.
//!
//! ```
//! use fairdiv::{Instance, Rational, Scalar};
//! use fairdiv::mechanisms::Mechanism;
//!
//! let inst = Instance::prefix(
//!     fairdiv::Resource::Cake,
//!     &[Rational::from_ratio(1, 1), Rational::from_ratio(1, 2)],
//! )?;
//! let alloc = Mechanism::TwoAgentCake.allocate(&inst)?;
//! assert_eq!(
//!     alloc.values(&inst)?,
//!     vec![Rational::from_ratio(3, 4), Rational::from_ratio(1, 4)]
//! );
//! # Ok::<(), fairdiv::Error>(())
//! ```
//!
//! Everything is generic over [`Scalar`]; the aliases at the crate root fix
//! it to [`num_rational::BigRational`].

pub mod eating;
mod error;
pub mod interval;
pub mod mechanisms;
pub mod model;
pub mod properties;
mod scalar;

pub use error::{Error, Result};
pub use model::Resource;
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Interval = interval::Interval<Rational>;
pub type IntervalSet = interval::IntervalSet<Rational>;
pub type Valuation = model::Valuation<Rational>;
pub type PrefixEndpoint = model::PrefixEndpoint<Rational>;
pub type Instance = model::Instance<Rational>;
pub type Allocation = model::Allocation<Rational>;
pub type PropertyReport = properties::PropertyReport<Rational>;
