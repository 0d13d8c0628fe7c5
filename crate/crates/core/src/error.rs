use std::fmt;

use thiserror::Error;

/// Why a set of quantum numbers cannot describe any coefficient at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Malformed {
    NegativeJ { name: &'static str },
    ProjectionOutOfRange { name: &'static str },
    Parity { name: &'static str },
}

impl fmt::Display for Malformed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Malformed::NegativeJ { name } => write!(f, "{name} must be non-negative"),
            Malformed::ProjectionOutOfRange { name } => {
                write!(f, "|{name}| exceeds its angular momentum")
            }
            Malformed::Parity { name } => {
                write!(
                    f,
                    "{name} has the wrong half-integer parity for its angular momentum"
                )
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("square root of negative rational {0}")]
    NegativeRadicand(String),

    #[error("cannot canonicalize radicand: cofactor {cofactor} has prime factors above the sieve bound {bound}")]
    KernelBeyondPrimeBound { cofactor: String, bound: u64 },

    #[error("malformed arguments: {0}")]
    Malformed(Malformed),

    #[error("{0}")]
    Domain(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
