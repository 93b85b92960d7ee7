use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ringcore::prime::is_prime;

/// A natural number or `+inf`; the value of `val_p(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `self >= l` for a natural `l`.
    pub fn at_least(self, l: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= l,
            Valuation::Infinite => true,
        }
    }
}

/// `inf + x = inf`.
impl core::ops::Add for Valuation {
    type Output = Valuation;

    fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// The exponent of the largest power of `p` dividing `x`, or `Infinite` for `x = 0`.
pub fn p_adic_valuation(x: &BigInt, p: &BigInt) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(valuation_unchecked(x, p))
}

pub(crate) fn valuation_unchecked(x: &BigInt, p: &BigInt) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        x = q;
        v += 1;
    }
}

/// Canonical representative of `x mod m` in `[0, m)` for `m > 0`.
pub fn residue(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// The unique `x in [0, m1*m2)` with `x = a1 mod m1`, `x = a2 mod m2`, for coprime moduli.
pub fn crt_pair(a1: &BigInt, m1: &BigInt, a2: &BigInt, m2: &BigInt) -> Option<BigInt> {
    let inv = mod_inverse(m1, m2)?;
    let m = m1 * m2;
    let t = ((a2 - a1) * inv).mod_floor(m2);
    Some((a1 + m1 * t).mod_floor(&m))
}

pub fn pow_usize(base: &BigInt, e: u32) -> BigInt {
    num_traits::pow(base.clone(), e as usize)
}

/// Largest bit length over a collection of integers.
pub fn max_bit_length<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> u64 {
    values.into_iter().map(|v| v.bits()).max().unwrap_or(0)
}

/// Whether `base^e` stays at or below `limit`, computed without overflow.
pub fn pow_at_most(base: u64, e: u32, limit: u64) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = match acc.checked_mul(base) {
            Some(v) if v <= limit => v,
            _ => return false,
        };
    }
    acc <= limit
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn valuation_is_additive(x in -100_000i64..100_000, y in -100_000i64..100_000, pi in 0usize..4) {
            prop_assume!(x != 0 && y != 0);
            let p = BigInt::from([2, 3, 5, 7][pi]);
            let vx = p_adic_valuation(&BigInt::from(x), &p).unwrap();
            let vy = p_adic_valuation(&BigInt::from(y), &p).unwrap();
            let vxy = p_adic_valuation(&(BigInt::from(x) * BigInt::from(y)), &p).unwrap();
            prop_assert_eq!(vxy, vx + vy);
        }
    }
}
