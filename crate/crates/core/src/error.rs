use crate::exactla::LinAlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{family}: {bound}")]
    InvalidFamily { family: String, bound: String },
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("weight is not k-dominant: coefficient at compact simple root psi_{node} is negative")]
    NotKDominant { node: usize },
    #[error("psi_{node} is the noncompact simple root and does not define an element of the involution group")]
    NoncompactInSigma { node: usize },
    #[error("unclassifiable factor: {0}")]
    Unclassifiable(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
