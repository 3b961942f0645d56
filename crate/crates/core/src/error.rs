use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An element was handed to an algebra that does not own it.
    #[error("element `{element}` is not in the carrier of `{algebra}`")]
    NotInCarrier { algebra: String, element: String },

    /// The algebra does not provide the requested operation.
    #[error("`{algebra}` does not support {operation}")]
    Unsupported { algebra: String, operation: String },

    /// Malformed operation tables, duplicate tokens and similar.
    #[error("invalid structure: {0}")]
    Structure(String),

    #[error("not a partial order: cycle through `{0}` and `{1}`")]
    NotAPoset(String, String),

    #[error("not a lattice: `{x}` and `{y}` have no unique {missing}")]
    NotALattice {
        x: String,
        y: String,
        missing: &'static str,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{what} = {value} is outside {range}")]
    Bounds {
        what: &'static str,
        value: usize,
        range: String,
    },

    #[error("modern sets are defined over different algebra families")]
    IncompatibleFamily,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn unsupported(algebra: &str, operation: &str) -> Self {
        Error::Unsupported {
            algebra: algebra.to_string(),
            operation: operation.to_string(),
        }
    }
}
