use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matz::{powers, solve_rational, IntMatrix, Matrix};
use crate::ringcore::IntPolynomial;

/// The monic `mu_A in Z[X]` of least degree with `mu_A(A) = 0`.
///
/// Finds the least `d` for which `vec(A^d)` lies in the rational span of
/// `vec(A^0), ..., vec(A^(d-1))`. The coefficients of that relation are
/// integers because `Z` is integrally closed; this is checked.
pub fn minimal_polynomial(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let pows = powers(a, n + 1);
    for d in 1..=n {
        let cols: Vec<Vec<BigInt>> = pows[..d].iter().map(|p| p.vec().to_vec()).collect();
        let stack = Matrix::from_columns(n * n, &cols).expect("consistent sizes");
        let Some(sol) = solve_rational(&stack, pows[d].vec()).expect("consistent sizes") else {
            continue;
        };
        let mut coeffs: Vec<BigInt> = sol
            .into_iter()
            .map(|c| {
                assert!(
                    c.is_integer(),
                    "minimal polynomial over Q must have integral coefficients"
                );
                -c.to_integer()
            })
            .collect();
        coeffs.push(BigInt::one());
        let mu = IntPolynomial::new(coeffs);
        debug_assert!(a.evaluate(&mu).is_zero());
        return mu;
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Whether every entry of `f(A)` is divisible by `m`.
pub fn null_membership(f: &IntPolynomial, a: &IntMatrix, m: &BigInt) -> Result<bool> {
    if m < &BigInt::from(2) {
        return Err(Error::InvalidModulus(m.clone()));
    }
    Ok(a.annihilated_mod(f, m))
}
