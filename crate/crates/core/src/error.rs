use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("element is not a unit in {ring}")]
    NotAUnit { ring: String },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("{n} is not in the weight set of {k}")]
    NotInWeightSet { k: u64, n: u64 },

    #[error("oracle search space of {size} multisets exceeds the bound {bound}")]
    OracleTooLarge { size: u128, bound: u128 },

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("v does not satisfy v*u*v^-1 = omega^-1 * u")]
    NotACyclicConjugator,

    #[error("identity failed: {0}")]
    InvariantFailed(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// Strips any stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
