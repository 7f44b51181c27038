use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operator is not a Rota-Baxter operator of the requested weight")]
    NotRotaBaxter,
    #[error("algebra kinds differ: {0}")]
    KindMismatch(String),
    #[error("form is not symplectic on this Poisson algebra")]
    NotSymplectic,
    #[error("data does not form a pre-Poisson bialgebra")]
    NotABialgebra,
    #[error("skew-symmetric part of r is not (L,R)-invariant")]
    NotLRInvariant,
    #[error("r-matrix is not factorizable")]
    NotFactorizable,
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("not a quadratic Rota-Baxter pre-Poisson algebra")]
    NotQuadraticRB,
    #[error("not a Rota-Baxter symplectic Poisson algebra")]
    NotRBSymplectic,
    #[error("malformed input at line {line}, column {column}: {message}")]
    MalformedInput {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("not a rational scalar: {0:?}")]
    NonRationalScalar(String),
    #[error("unknown check: {0}")]
    UnknownCheck(String),
    #[error("document has no {0}")]
    MissingField(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Stable variant name, used in CLI reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::InvalidInput(_) => "InvalidInput",
            Error::NotRotaBaxter => "NotRotaBaxter",
            Error::KindMismatch(_) => "KindMismatch",
            Error::NotSymplectic => "NotSymplectic",
            Error::NotABialgebra => "NotABialgebra",
            Error::NotLRInvariant => "NotLRInvariant",
            Error::NotFactorizable => "NotFactorizable",
            Error::ZeroWeight => "ZeroWeight",
            Error::NotQuadraticRB => "NotQuadraticRB",
            Error::NotRBSymplectic => "NotRBSymplectic",
            Error::MalformedInput { .. } => "MalformedInput",
            Error::NonRationalScalar(_) => "NonRationalScalar",
            Error::UnknownCheck(_) => "UnknownCheck",
            Error::MissingField(_) => "MissingField",
            Error::Usage(_) => "Usage",
        }
    }
}

pub(crate) fn dim_err(what: impl Into<String>) -> Error {
    Error::DimensionMismatch(what.into())
}
