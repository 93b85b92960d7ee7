use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::{Integer as _, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ringcore::integer::pow_usize;

/// Trial division covers every prime below this bound before the residual is tested.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Outcome of a primality test.
///
/// Inputs below `2^64` are decided by a deterministic Miller-Rabin witness
/// set. Larger inputs go through Baillie-PSW, which has no known
/// counterexample but is not a proof, hence `ProbablePrime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }
}

const SMALL_PRIMES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn primality(n: &BigInt) -> Primality {
    if n < &BigInt::from(2) {
        return Primality::Composite;
    }
    for &q in &SMALL_PRIMES {
        let q = BigInt::from(q);
        if n == &q {
            return Primality::Prime;
        }
        if n.is_multiple_of(&q) {
            return Primality::Composite;
        }
    }
    if n.bits() <= 64 {
        // The first twelve primes are a complete witness set below 2^64.
        if SMALL_PRIMES
            .iter()
            .all(|&a| miller_rabin(n, &BigInt::from(a)))
        {
            Primality::Prime
        } else {
            Primality::Composite
        }
    } else if miller_rabin(n, &BigInt::from(2)) && strong_lucas(n) {
        Primality::ProbablePrime
    } else {
        Primality::Composite
    }
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n).is_prime()
}

/// Strong probable-prime test to base `a`; `n` odd and greater than `a`.
fn miller_rabin(n: &BigInt, a: &BigInt) -> bool {
    let one = BigInt::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    let three = BigInt::from(3);
    let four = BigInt::from(4);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                result = -result;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = x.mod_floor(n);
    if x.is_odd() {
        (x + n) >> 1
    } else {
        x >> 1
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigInt) -> bool {
    let root = Roots::sqrt(n);
    if &root * &root == *n {
        return false;
    }
    let mut d_param = BigInt::from(5);
    loop {
        match jacobi(&d_param, n) {
            -1 => break,
            0 if d_param.abs() != *n => return false,
            _ => {}
        }
        let two = BigInt::from(2);
        d_param = if d_param.is_positive() {
            -(d_param + two)
        } else {
            two - d_param
        };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d_param) / BigInt::from(4);

    let n1 = n + 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    let bits = d.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if d.bit(i) {
            let nu = half_mod(&p * &u + &v, n);
            let nv = half_mod(&d_param * &u + &p * &v, n);
            u = nu;
            v = nv;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// Prime factorization of `|n|` as ascending `(prime, exponent)` pairs.
///
/// Trial division runs up to [`TRIAL_DIVISION_BOUND`]; a residual that is
/// neither 1 nor prime is reported as [`Error::FactorizationFailed`].
pub fn factorize(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut rest = n.abs();
    let mut out = Vec::new();
    let mut push = |rest: &mut BigInt, q: &BigInt| {
        let mut e = 0;
        while rest.is_multiple_of(q) {
            *rest /= q;
            e += 1;
        }
        if e > 0 {
            out.push((q.clone(), e));
        }
    };
    push(&mut rest, &BigInt::from(2));
    let mut q: u64 = 3;
    while q < TRIAL_DIVISION_BOUND {
        if rest.is_one() {
            break;
        }
        let qb = BigInt::from(q);
        if &qb * &qb > rest {
            break;
        }
        push(&mut rest, &qb);
        q += 2;
    }
    if !rest.is_one() {
        if is_prime(&rest) {
            out.push((rest, 1));
        } else {
            return Err(Error::FactorizationFailed(n.abs()));
        }
    }
    Ok(out)
}

/// The modulus context `p^l` with `p` prime. `l = 0` is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: BigInt,
    ell: u32,
}

impl PrimePower {
    pub fn new(p: BigInt, ell: u32) -> Result<Self> {
        if !is_prime(&p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimePower { p, ell })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `p^l`.
    pub fn modulus(&self) -> BigInt {
        pow_usize(&self.p, self.ell)
    }

    pub fn with_ell(&self, ell: u32) -> PrimePower {
        PrimePower {
            p: self.p.clone(),
            ell,
        }
    }

    pub fn p_u64(&self) -> Option<u64> {
        self.p.to_u64()
    }
}
