use thiserror::Error;

use crate::matrix::MatrixKind;

/// Errors produced by graph construction, spectra and the twin machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid vertex id `{0}` (must be nonempty and contain no whitespace)")]
    InvalidVertexId(String),
    #[error("negative weight {weight} on {target}")]
    NegativeWeight { target: String, weight: String },
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),
    #[error(
        "vertex `{vertex}` has degree 0; the {kind} matrix needs positive degrees \
         (zeroing the D^-1/2 entry is not supported on the exact path)"
    )]
    ZeroDegree { vertex: String, kind: MatrixKind },
    #[error("no exact characteristic polynomial for the {0} matrix; use the transition matrix")]
    ExactUnsupported(MatrixKind),
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("invalid multiplicity: {0}")]
    InvalidMultiplicity(String),
    #[error("invalid twin class: {0}")]
    InvalidTwinClass(String),
    #[error("twin classes failed pairwise re-verification: {0}")]
    TwinClassInconsistent(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("harmonic vector has no value for vertex `{0}`")]
    MissingValue(String),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{name}` failed validation: {reason}")]
    FixtureValidation { name: String, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
