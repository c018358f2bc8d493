use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Every variant carries a stable name (see [`Error::name`]) that the command
/// line front end prints on standard error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not Hermitian: {0}")]
    NonHermitianInput(String),
    #[error("variable index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("polynomial is not real-valued: {0}")]
    NotRealValued(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("syntax error at byte {offset}: expected {}", expected.join(" | "))]
    SyntaxError { offset: usize, expected: Vec<String> },
    #[error("variable index 0 at byte {offset}; indices start at 1")]
    IndexError { offset: usize },
    #[error("cannot read {path}: {message}")]
    IoError { path: String, message: String },
    #[error("invalid field `{field}`: {message}")]
    ValidationError { field: String, message: String },
    #[error("point is not on the manifold: rho_{index} evaluates to {value}")]
    PointNotOnManifold { index: usize, value: String },
    #[error("real differentials are linearly dependent (real rank {rank} < {expected})")]
    DegenerateDifferentials { rank: usize, expected: usize },
    #[error("Gram matrix of gradients is singular")]
    GramSingular,
    #[error("map is not an inverse: {0}")]
    NotAnInverse(String),
    #[error("map is not holomorphic: {0}")]
    NotHolomorphic(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("q is not closed under brackets: [b{0}, b{1}] leaves the span")]
    NotSubalgebra(usize, usize),
    #[error("bad complement: {0}")]
    BadComplement(String),
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    #[error("real parameter `{0}` received a non-real value")]
    NonRealValueForRealParam(String),
}

impl Error {
    /// Stable identifier used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NonHermitianInput(_) => "NonHermitianInput",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotRealValued(_) => "NotRealValued",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::IndexError { .. } => "IndexError",
            Error::IoError { .. } => "IoError",
            Error::ValidationError { .. } => "ValidationError",
            Error::PointNotOnManifold { .. } => "PointNotOnManifold",
            Error::DegenerateDifferentials { .. } => "DegenerateDifferentials",
            Error::GramSingular => "GramSingular",
            Error::NotAnInverse(_) => "NotAnInverse",
            Error::NotHolomorphic(_) => "NotHolomorphic",
            Error::InvalidFrame(_) => "InvalidFrame",
            Error::DependentBasis => "DependentBasis",
            Error::NotSubalgebra(..) => "NotSubalgebra",
            Error::BadComplement(_) => "BadComplement",
            Error::MissingParameter(_) => "MissingParameter",
            Error::NonRealValueForRealParam(_) => "NonRealValueForRealParam",
        }
    }

    /// True for errors caused by malformed input rather than by the analysis.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::SyntaxError { .. }
                | Error::IndexError { .. }
                | Error::IoError { .. }
                | Error::ValidationError { .. }
        )
    }

    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::ValidationError {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
