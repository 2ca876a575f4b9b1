use thiserror::Error;

/// Errors raised by constructions, solvers and parsers.
///
/// Law violations of an otherwise well-formed category or functor are not
/// errors; they are reported through [`crate::ValidationReport`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),

    #[error("unknown object `{name}` in `{context}`")]
    UnknownObject { name: String, context: String },

    #[error("unknown morphism `{name}` in `{context}`")]
    UnknownMorphism { name: String, context: String },

    #[error("unknown {kind} `{name}`")]
    UnknownEntity { kind: &'static str, name: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("quiver `{0}` has a directed cycle; its free category is infinite")]
    CyclicQuiver(String),

    #[error("enumeration cap exceeded: about {estimate:.3e} candidates, cap is {cap}")]
    CapExceeded { estimate: f64, cap: u64 },

    #[error("refused: {0}")]
    Refused(String),

    #[error("invalid {kind} `{name}`: {details}")]
    Invalid {
        kind: &'static str,
        name: String,
        details: String,
    },

    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }
}
