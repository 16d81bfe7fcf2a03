//! Connective-constant brackets, coordinate lattices and the quotient
//! locality experiment.

mod bracket;
mod lattice;
mod locality;

pub use bracket::{bracket, mu_lower, mu_upper, MuBracket};
pub use lattice::{lattice_counts, Lattice, LatticeAdapter, SPOT_CHECK_ROOTS};
pub use locality::{locality_experiment, LocalityRow, LocalityTable, QuotientFamily};

/// `√(2+√2)`, the connective constant of the honeycomb lattice.
pub const HONEYCOMB_MU: f64 = 1.847_759_065_022_573_5;
