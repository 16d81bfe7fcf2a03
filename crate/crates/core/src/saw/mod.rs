//! Self-avoiding walk enumeration with heights along a distinguished
//! generator: SAW, bridge and half-space counts, the span decomposition and
//! reflection of half-space walks, and the inequality verifiers built on
//! them.

mod counts;
mod partitions;
mod space;
mod verify;
mod walk;

pub use counts::{count_bridges, count_saws, count_walks, CountsRow, CountsTable};
pub use partitions::{partitions_distinct, partitions_distinct_table};
pub use space::{edge_weight, CayleySpace, WalkSpace};
pub use verify::{
    verify_hw_inequality, verify_quotient_counts, verify_reflection, verify_step2_inequality,
    verify_supermultiplicativity, Check, CheckVerdict, HwReport, Report, FLOAT_SLACK,
    HW_THRESHOLD,
};
pub use walk::{
    classify_heights, classify_walk, decompose_half_space, decompose_profile, heights_of, reflect,
    span_of, walk_words, Decomposition, ReflectionWitness, WalkClass, WalkKind, WalkRecord,
};
