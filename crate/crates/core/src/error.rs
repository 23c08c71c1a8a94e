use thiserror::Error;

/// Errors produced by partition construction, the class bijections and the
/// series arithmetic. Display strings start with the variant name so the CLI
/// diagnostics name the violated predicate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InvalidPartition: {0}")]
    InvalidPartition(String),
    #[error("EmptyShape: an odd Ferrers graph needs at least one cell")]
    EmptyShape,
    #[error("NotSelfConjugate: {0} is not self-conjugate")]
    NotSelfConjugate(String),
    #[error("InvalidHookList: hook arms must be positive and strictly decreasing, got {0:?}")]
    InvalidHookList(Vec<u64>),
    #[error("NotDistinctOdd: {0} does not have distinct odd parts")]
    NotDistinctOdd(String),
    #[error("MalformedSClass: {0}")]
    MalformedSClass(String),
    #[error("MalformedDClass: {0}")]
    MalformedDClass(String),
    #[error("MalformedDOClass: {0}")]
    MalformedDOClass(String),
    #[error("PostconditionViolated: {0}")]
    PostconditionViolated(String),
    #[error("TruncationMismatch: truncation orders {left} and {right} differ")]
    TruncationMismatch { left: usize, right: usize },
    #[error("NonUnitConstantTerm: constant term {0} is not invertible over the integers")]
    NonUnitConstantTerm(i64),
    #[error("Overflow: 64-bit integer overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
