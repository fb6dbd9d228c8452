use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of the supplied data do not fit together.
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("matrix is not invertible ({context})")]
    NotInvertible { context: String },

    #[error("scalars from different fields were combined: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// An input that must satisfy its axioms does not; the failing report is attached.
    #[error("{what} is not certified: {}", .report.summary())]
    Uncertified { what: String, report: AxiomReport },

    #[error("hypotheses not met: {condition} (witness {witness})")]
    HypothesesNotMet { condition: String, witness: String },

    #[error("no structure-map-intertwining retraction of the inclusion exists")]
    NoEquivariantRetraction,

    #[error("unknown builtin '{name}'; available: {}", .available.join(", "))]
    UnknownBuiltin {
        name: String,
        available: Vec<String>,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A construction that is guaranteed by theory failed its own certification.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn dims(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
