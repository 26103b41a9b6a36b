use crate::exactlin::Field;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("representation carries no invariant form")]
    MissingForm,

    #[error("invalid invariant form: {0}")]
    InvalidForm(String),

    #[error("not a valid representation: {0}")]
    NotHomomorphism(String),

    #[error("element does not lie in {0}")]
    NotInSpace(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A computed object failed an identity it must satisfy by construction.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
