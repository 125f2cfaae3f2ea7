use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("path `{0}` is not composable")]
    NotComposable(String),
    #[error("relation {index}: non-parallel terms")]
    NonParallelTerms { index: usize },
    #[error("relation {index}: term `{term}` has length < 2")]
    ShortRelationTerm { index: usize, term: String },
    #[error("relation {index} is empty")]
    EmptyRelation { index: usize },
    #[error("not finite-dimensional within length cap {0}")]
    NotFiniteDimensional(usize),
    #[error("more than {0} paths below the length cap")]
    TooManyPaths(usize),
    #[error("multiplication table is not associative")]
    NonAssociative,
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("vector does not lie in the module: {0}")]
    OutsideModule(String),
    #[error("resolution too short for the requested degree")]
    ResolutionTooShort,
    #[error("the field must be finite for this operation")]
    InfiniteField,
    #[error("non-split endomorphism quotient: {0}; retry over a different field")]
    NonSplit(String),
    #[error("isomorphism test inconclusive")]
    Inconclusive,
    #[error("enumeration would exceed the budget of {0} candidates")]
    BudgetExceeded(u64),
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("algebra has no arrow words; module cannot be given by arrow matrices")]
    NoArrowWords,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
