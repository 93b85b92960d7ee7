use alloc::string::String;

use num_bigint::BigInt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(BigInt),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigInt),

    #[error("divisor polynomial must be monic")]
    NotMonic,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("could not factor {0}: residual is composite and has no factor below the trial-division bound")]
    FactorizationFailed(BigInt),

    #[error("degree of the (p^l)-minimal polynomials did not stabilize within the safety cap l <= {cap}")]
    StabilizationCapExceeded { cap: u32 },

    #[error("polynomial does not annihilate the matrix modulo {0}: not a null polynomial")]
    NotNullPolynomial(BigInt),

    #[error("ladder has height {height}, level {requested} requested")]
    LadderTooShort { requested: u32, height: u32 },

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
