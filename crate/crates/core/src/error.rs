use std::fmt;

use thiserror::Error;

/// Defining property of an equivalence relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceProperty {
    Reflexive,
    Symmetric,
    Transitive,
}

impl fmt::Display for EquivalenceProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceProperty::Reflexive => "reflexive",
            EquivalenceProperty::Symmetric => "symmetric",
            EquivalenceProperty::Transitive => "transitive",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid carrier size {0}: must be between 1 and {max}", max = crate::relation::MAX_CARRIER)]
    InvalidCarrier(usize),

    #[error("carrier size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("pair ({row}, {col}) out of range for carrier size {size}")]
    PairOutOfRange { row: usize, col: usize, size: usize },

    #[error("invalid environment for law `{law}`: {reason}")]
    InvalidEnvironment { law: &'static str, reason: String },

    #[error("not an equivalence: relation is not {0}")]
    NotAnEquivalence(EquivalenceProperty),

    #[error("exhaustive check needs 2^{required_log2} instances, budget is {budget}")]
    BudgetExceeded { required_log2: u32, budget: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: endpoint {endpoint} out of range for {nodes} nodes")]
    Range {
        line: usize,
        endpoint: usize,
        nodes: usize,
    },

    #[error("header declares {declared} edges but body has {found}")]
    EdgeCount { declared: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
