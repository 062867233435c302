use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The document could not be read as the expected schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// The document parsed but violates an invariant; `field` names the culprit.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    #[error("etalon store is empty")]
    EmptyStore,

    #[error(
        "etalon in lane {lane} has length {found}, expected {expected} (correction is disabled)"
    )]
    UnequalLengthsWithoutCorrection {
        lane: usize,
        expected: usize,
        found: usize,
    },

    #[error("automaton exhausted: distributor at {position}, matrix depth {depth}")]
    AutomatonExhausted { position: usize, depth: usize },

    #[error("input {value} for variable '{variable}' lies outside [{lo}, {hi}]")]
    UniverseViolation {
        variable: String,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("expected {expected} inputs, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("no control word for class '{0}'")]
    UnknownClass(String),

    #[error("malformed trace line {line}: {message}")]
    Trace { line: usize, message: String },
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}
