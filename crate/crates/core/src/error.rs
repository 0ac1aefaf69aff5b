use std::path::PathBuf;

use thiserror::Error;

use crate::logic::Variable;
use crate::notation::ParseError;
use crate::semantics::Valuation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("truth-table oracle capped at {cap} variables, formula has {found}")]
    OracleCap { cap: usize, found: usize },

    #[error("valuation does not assign variable {0}")]
    UnassignedVariable(Variable),

    #[error("variable {0} has no complementary pair across distinct clauses")]
    NotEliminable(Variable),

    #[error("scripted elimination order exhausted while complementary pairs remain")]
    ScriptExhausted,

    #[error("X -> Y is not valid; falsified by {0}")]
    NotValid(Valuation),

    #[error("both sides of the implication are empty")]
    BothSidesEmpty,

    #[error("split point {split} exceeds clause count {len}")]
    SplitOutOfRange { split: usize, len: usize },

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("no valid pair found within {0} attempts")]
    AttemptLimit(u64),

    #[error("instance {instance} (seed {seed}): interpolant failed the oracle")]
    VerificationFailed { instance: usize, seed: u64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
