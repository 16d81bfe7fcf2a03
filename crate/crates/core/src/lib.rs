//! Self-avoiding walks on Cayley graphs of finitely presented groups.
//!
//! The pipeline: parse a [`GroupSpec`], build a [`Normalizer`] that solves
//! its word problem, enumerate walks from the identity ([`saw`]), and turn
//! the counts into connective-constant brackets ([`estimate`]).
//!
//! Counts are generic over [`Count`] and estimates over [`Real`]; the
//! aliases below fix the usual choices.

pub mod cayley;
pub mod error;
pub mod estimate;
pub mod normalform;
pub mod parallel;
pub mod presentation;
pub mod saw;
pub mod scalar;

pub use error::{Error, Result};
pub use normalform::{normalizer_for, Element, Normalizer};
pub use parallel::EnumOptions;
pub use presentation::{GeneratorSymbol, GroupSpec, Sign, Word};
pub use scalar::{Count, Real};

/// Counts table with arbitrary-precision entries.
pub type Counts = saw::CountsTable<num_bigint::BigUint>;

/// Bracket in double precision.
pub type Bracket = estimate::MuBracket<f64>;

/// Locality row in double precision.
pub type Locality = estimate::LocalityRow<f64>;

/// Version stamp of the enumeration engine, used to invalidate caches.
pub const ENGINE_VERSION: &str = concat!("sawlab-", env!("CARGO_PKG_VERSION"));
