//! Exact arithmetic foundation: integers, p-adic valuations, primality,
//! factorization and dense polynomials over `Z`.

pub(crate) mod integer;
mod poly;
mod prime;

pub use integer::{
    crt_pair, max_bit_length, mod_inverse, p_adic_valuation, pow_at_most, pow_usize, residue,
    Valuation,
};
pub use poly::IntPolynomial;
pub use prime::{factorize, is_prime, primality, Primality, PrimePower, TRIAL_DIVISION_BOUND};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Reduced fraction of [`Integer`]s with a positive denominator.
pub type Rational = num_rational::BigRational;
