use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable tables are incompatible: neither embeds into the other ({left} vs {right})")]
    IncompatibleVars { left: String, right: String },
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("fraction-free elimination hit an inexact division at step {step}; this is an internal bug")]
    BareissDivision { step: usize },
    #[error("cofactor expansion limited to size {ceiling}, got {size}; use the Bareiss engine")]
    CofactorCeiling { size: usize, ceiling: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("bracket [{0}, {1}] leaves the span of the basis")]
    NotClosed(String, String),
    #[error("basis elements are linearly dependent")]
    LinearlyDependent,
    #[error("matrix is singular")]
    Singular,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("ansatz is underdetermined: {0}")]
    Underdetermined(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by the configured size or degree caps.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded(_) | Error::CofactorCeiling { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
