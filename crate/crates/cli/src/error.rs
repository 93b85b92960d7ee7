//! Command-line errors and their exit codes.

use nullideal_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed input: bad JSON, non-prime `p`, invalid modulus. Exit 2.
    #[error("input error: {0}")]
    Input(String),

    /// A budget, factorization or stabilization refusal. Exit 3.
    #[error("refused: {0}")]
    Refused(String),

    /// An internal invariant failed. Exit 1.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refused(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::NotPrime(_)
            | Error::InvalidModulus(_)
            | Error::NotMonic
            | Error::DimensionMismatch(_)
            | Error::InvalidArgument(_)
            | Error::NotNullPolynomial(_)
            | Error::LadderTooShort { .. } => CliError::Input(msg),
            Error::FactorizationFailed(_)
            | Error::StabilizationCapExceeded { .. }
            | Error::BudgetExceeded(_) => CliError::Refused(msg),
            Error::Invariant(_) => CliError::Internal(msg),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn exit_codes() {
        assert_eq!(
            CliError::from(Error::NotPrime(BigInt::from(4))).exit_code(),
            2
        );
        assert_eq!(
            CliError::from(Error::BudgetExceeded("x".into())).exit_code(),
            3
        );
        assert_eq!(
            CliError::from(Error::StabilizationCapExceeded { cap: 9 }).exit_code(),
            3
        );
        assert_eq!(CliError::from(Error::Invariant("x".into())).exit_code(), 1);
    }
}
