use thiserror::Error;

use crate::scalar::Backend;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("truncation {requested} exceeds the configured ceiling {ceiling}")]
    ResourceLimit { requested: usize, ceiling: usize },

    #[error("set is not closed under multiplication: {a} * {b} = {product} is missing")]
    ClosureViolation { a: u64, b: u64, product: u64 },

    #[error("{0} is not in the semigroup")]
    NotInSemigroup(u64),

    #[error("backend mismatch: {left:?} vs {right:?}")]
    BackendMismatch { left: Backend, right: Backend },

    #[error("nonzero coefficient at n = {0} lies outside the declared support")]
    SupportViolation(u64),

    #[error("constant term is zero; the series is not a unit")]
    NonUnitConstantTerm,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} has no factorization over the basis")]
    NoFactorization(u64),

    #[error("{0} has more than one factorization over the generators")]
    AmbiguousFactorization(u64),

    #[error("monomial image {image} exceeds truncation {bound}")]
    TruncationOverflow { image: u64, bound: usize },

    #[error("polynomial bases differ")]
    BasisMismatch,

    #[error("truncation {given} is below the required {required}")]
    InsufficientTruncation { given: usize, required: u64 },

    #[error("generators must be distinct integers >= 2")]
    GeneratorsNotDistinct,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error report.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ResourceLimit { .. } => "resource_limit",
            Error::ClosureViolation { .. } => "closure_violation",
            Error::NotInSemigroup(_) => "not_in_semigroup",
            Error::BackendMismatch { .. } => "backend_mismatch",
            Error::SupportViolation(_) => "support_violation",
            Error::NonUnitConstantTerm => "non_unit_constant_term",
            Error::Domain(_) => "domain_error",
            Error::NoFactorization(_) => "no_factorization",
            Error::AmbiguousFactorization(_) => "ambiguous_factorization",
            Error::TruncationOverflow { .. } => "truncation_overflow",
            Error::BasisMismatch => "basis_mismatch",
            Error::InsufficientTruncation { .. } => "insufficient_truncation",
            Error::GeneratorsNotDistinct => "generators_not_distinct",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::Parse(_) => "parse",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }

    /// Configuration and I/O problems as opposed to mathematical precondition failures.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit { .. } | Error::Parse(_) | Error::Json(_) | Error::Io(_)
        )
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
