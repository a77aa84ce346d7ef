use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have a nonzero constant term")]
    ZeroConstantTerm,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("prime {0} divides the leading coefficient")]
    PrimeDividesLeading(u64),
    #[error("modular factors are not pairwise coprime modulo {0}")]
    NotCoprime(u64),
    #[error("modular factors do not multiply to the input modulo {0}")]
    FactorMismatch(u64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("root iteration did not converge after {iterations} steps (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        partial_min_modulus: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
