use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector has no hyperplane")]
    ZeroVector,
    #[error("normal with a sqrt(5) coordinate in a rational arrangement")]
    MixedField,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("flat is not in the intersection lattice of this arrangement")]
    FlatNotInLattice,
    #[error("intersection lattice too large: {0}")]
    LatticeTooLarge(String),
    #[error("characteristic polynomial {0} does not split over the integers")]
    NotIntegerSplit(String),
    #[error("too many chambers: {0}")]
    TooManyChambers(String),
    #[error("base is not a chamber of the arrangement")]
    BaseNotAChamber,
    #[error("group too large: {0}")]
    GroupTooLarge(String),
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("preset {name}: simple roots {roots:?} do not generate type {expected}")]
    PresetTypeMismatch {
        name: String,
        roots: Vec<usize>,
        expected: String,
    },
    #[error("invalid region code: {0}")]
    CodeInvalid(String),
    #[error("too many region codes: {0}")]
    TooManyCodes(String),
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    /// True for errors raised by a size guard.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::LatticeTooLarge(_)
                | Error::TooManyChambers(_)
                | Error::GroupTooLarge(_)
                | Error::TooManyCodes(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
