//! Group specifications: words, presentations, the spec-language parser,
//! the relator exponent matrix and the class-𝒢 certificate.

mod matrix;
mod parse;
mod spec;
mod validate;
mod word;

pub use matrix::{
    check_rank_condition, exponent_matrix, fraction_free_rank, integer_rank, ExponentMatrix,
};
pub use parse::{parse_group_spec, parse_word, parse_words};
pub use spec::{GroupExpr, GroupPresentation, GroupSpec, LeafKind, NormalizerHint, Presented};
pub(crate) use spec::{commutator_pair, has_all_commutators};
pub use validate::{validate_class_g, validate_class_g_with, ValidationReport, Verdict, DEFAULT_CLASS_CUTOFF};
pub use word::{GeneratorSymbol, Sign, Word};
