use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("distinguished marker `!` at position {0} is on a finite-order generator")]
    FiniteOrderDistinguished(usize),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("generator index {index} out of range for {rank} generators")]
    SymbolOutOfRange { index: usize, rank: usize },

    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),

    #[error("unsupported quotient: {0}")]
    UnsupportedQuotient(String),

    #[error("no distinguished generator is set")]
    NoDistinguished,

    #[error("not a quotient: identity word `{witness}` of the base is not trivial in the quotient")]
    QuotientRelationViolated { witness: String },

    #[error("mismatched inputs: {0}")]
    Mismatch(String),

    #[error("constant B = {0} does not exceed pi*sqrt(2/3)")]
    ConstantTooSmall(f64),

    #[error("counts table is empty")]
    EmptyTable,

    #[error("counts table has no bridge/half-space data")]
    MissingHeights,

    #[error("walk is not a half-space walk")]
    NotHalfSpace,

    #[error("walk revisits a vertex at step {0}")]
    NotSelfAvoiding(usize),

    #[error("distinguished generator fails the class-G check up to length {cutoff}: `{witness}`")]
    ClassCheckFailed { cutoff: usize, witness: String },

    #[error("lattice counts depend on the root: {0}")]
    RootDependent(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }
}
