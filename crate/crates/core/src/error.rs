use thiserror::Error;

/// Errors surfaced by the exact kernel and the family/asymptotics layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not square-free (gcd with derivative is nonconstant)")]
    NotSquareFree,

    #[error("interval endpoint {0} is a zero of the polynomial")]
    EndpointIsZero(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("certified intervals overlap; refine with a smaller relative tolerance")]
    InsufficientRefinement,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("signature polynomial vanishes at the positive integer {0}")]
    AssumptionViolated(u32),

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
