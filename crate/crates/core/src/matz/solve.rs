use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matz::{smith_normal_form, Matrix};
use crate::ringcore::mod_inverse;

fn check_modulus(m: &BigInt) -> Result<()> {
    if m < &BigInt::from(2) {
        return Err(Error::InvalidModulus(m.clone()));
    }
    Ok(())
}

/// Some `x` with `M x = b (mod m)`, or `None` when no solution exists.
///
/// `M` and `b` are reduced modulo `m`, brought to Smith form, and the
/// diagonal congruences `d_i y_i = c_i (mod m)` are solved one by one.
/// Entries of the returned vector lie in `[0, m)`.
pub fn solve_mod(mat: &Matrix, b: &[BigInt], m: &BigInt) -> Result<Option<Vec<BigInt>>> {
    check_modulus(m)?;
    if b.len() != mat.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            mat.rows()
        )));
    }
    let reduced = mat.reduce_mod(m);
    let snf = smith_normal_form(&reduced);
    let rhs: Vec<BigInt> = b.iter().map(|v| v.mod_floor(m)).collect();
    let c = snf.u.mul_vec(&rhs)?;

    let mut y = vec![BigInt::zero(); mat.cols()];
    for (i, ci) in c.iter().enumerate() {
        let ci = ci.mod_floor(m);
        let Some(d) = snf.divisors.get(i) else {
            if !ci.is_zero() {
                return Ok(None);
            }
            continue;
        };
        let g = d.gcd(m);
        if !ci.is_multiple_of(&g) {
            return Ok(None);
        }
        let mg = m / &g;
        if mg.is_one() {
            continue;
        }
        let inv = mod_inverse(&(d / &g), &mg).expect("coprime after dividing out the gcd");
        y[i] = ((ci / &g) * inv).mod_floor(&mg);
    }
    let x: Vec<BigInt> = snf.v.mul_vec(&y)?.iter().map(|v| v.mod_floor(m)).collect();

    let check = mat.mul_vec(&x)?;
    if check.iter().zip(b).any(|(l, r)| !(l - r).is_multiple_of(m)) {
        return Err(Error::Invariant("solve_mod produced a non-solution".into()));
    }
    Ok(Some(x))
}

/// Some `x in Z^cols` with `M x = b` exactly, or `None`.
pub fn solve_int(mat: &Matrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != mat.rows() {
        return Err(Error::DimensionMismatch("right-hand side length".into()));
    }
    let snf = smith_normal_form(mat);
    let c = snf.u.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); mat.cols()];
    for (i, ci) in c.iter().enumerate() {
        match snf.divisors.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = ci.div_rem(d);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            }
            _ if !ci.is_zero() => return Ok(None),
            _ => {}
        }
    }
    let x = snf.v.mul_vec(&y)?;
    debug_assert_eq!(mat.mul_vec(&x)?, b);
    Ok(Some(x))
}

/// Column basis of the lattice `{ c in Z^cols : M c = 0 (mod m) }`.
///
/// With `U M V = D` the lattice is `V * diag(m / gcd(d_i, m))`, where
/// columns past the divisor count are free.
pub fn relation_lattice_basis(mat: &Matrix, m: &BigInt) -> Result<Matrix> {
    check_modulus(m)?;
    let snf = smith_normal_form(&mat.reduce_mod(m));
    let mut basis = snf.v.clone();
    for j in 0..mat.cols() {
        let scale = match snf.divisors.get(j) {
            Some(d) => m / d.gcd(m),
            None => BigInt::one(),
        };
        for i in 0..basis.rows() {
            basis[(i, j)] *= &scale;
        }
    }
    Ok(basis)
}
