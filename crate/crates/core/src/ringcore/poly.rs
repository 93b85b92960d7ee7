use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial over `Z`, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `X`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c * X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `X - r`.
    pub fn linear(r: &BigInt) -> Self {
        Self::new(vec![-r, BigInt::one()])
    }

    /// `prod (X - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a BigInt>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `X^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    /// gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `c`, `None` unless `c` divides the content.
    pub fn divide_exact(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    /// Multiplication by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Division with remainder by a monic `g`: `self = q*g + r`, `deg r < deg g`.
    pub fn monic_division(&self, g: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let dg = g.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dg];
        for k in (dg..rem.len()).rev() {
            let c = core::mem::take(&mut rem[k]);
            if c.is_zero() {
                continue;
            }
            for (i, gi) in g.coeffs[..dg].iter().enumerate() {
                rem[k - dg + i] -= &c * gi;
            }
            quot[k - dg] = c;
        }
        rem.truncate(dg);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Coefficientwise reduction into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> Result<IntPolynomial> {
        if m < &BigInt::from(2) {
            return Err(Error::InvalidModulus(m.clone()));
        }
        Ok(self.reduce_mod_unchecked(m))
    }

    pub(crate) fn reduce_mod_unchecked(&self, m: &BigInt) -> IntPolynomial {
        Self::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Reduces the non-leading coefficients into `[0, m)` and keeps the leading one.
    ///
    /// Used for the canonical form of monic minimal polynomials.
    pub fn canonical_monic(&self, m: &BigInt) -> IntPolynomial {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs: Vec<BigInt> = self.coeffs[..d].iter().map(|c| c.mod_floor(m)).collect();
        coeffs.push(self.coeffs[d].clone());
        Self::new(coeffs)
    }

    /// True when every coefficient is divisible by `m`.
    pub fn divisible_by(&self, m: &BigInt) -> bool {
        self.coeffs.iter().all(|c| c.is_multiple_of(m))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Renders as `X^2 - 20*X + 64`, highest degree first.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn monic_division_examples() {
        let (q, r) = p(&[64, -20, 1]).monic_division(&p(&[-4, 1])).unwrap();
        assert_eq!((q, r), (p(&[-16, 1]), IntPolynomial::zero()));
        let (q, r) = p(&[0, 0, 1]).monic_division(&p(&[-4, 1])).unwrap();
        assert_eq!((q, r), (p(&[4, 1]), p(&[16])));
        let (q, r) = p(&[5]).monic_division(&p(&[-1, 1])).unwrap();
        assert_eq!((q, r), (IntPolynomial::zero(), p(&[5])));
    }

    #[test]
    fn monic_division_rejects_non_monic() {
        assert_eq!(
            p(&[1, 2, 3]).monic_division(&p(&[1, 2])),
            Err(Error::NotMonic)
        );
        assert_eq!(
            p(&[1]).monic_division(&IntPolynomial::zero()),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn reduce_mod_examples() {
        assert_eq!(p(&[64, -20, 1]).reduce_mod(&z(8)).unwrap(), p(&[0, 4, 1]));
        assert_eq!(p(&[-4, 1]).reduce_mod(&z(2)).unwrap(), p(&[0, 1]));
        assert_eq!(
            IntPolynomial::zero().reduce_mod(&z(7)).unwrap(),
            IntPolynomial::zero()
        );
        assert_eq!(p(&[3, 8]).reduce_mod(&z(8)).unwrap(), p(&[3]));
        assert!(p(&[1]).reduce_mod(&z(1)).is_err());
    }

    #[test]
    fn reduce_mod_agrees_with_evaluation() {
        // X^2 - 20X + 64 and X^2 + 4X agree mod 8 at 4, 16 and 32.
        let f = p(&[64, -20, 1]);
        let g = f.reduce_mod(&z(8)).unwrap();
        for x in [4, 16, 32] {
            assert_eq!((f.eval(&z(x)) - g.eval(&z(x))).mod_floor(&z(8)), z(0));
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[64, -20, 1]).to_string(), "X^2 - 20*X + 64");
        assert_eq!(p(&[-1, 0, -3]).to_string(), "-3*X^2 - 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "X");
    }

    #[test]
    fn roots_and_content() {
        let f = IntPolynomial::from_roots(&[z(4), z(16)]);
        assert_eq!(f, p(&[64, -20, 1]));
        assert_eq!(p(&[6, -4, 10]).content(), z(2));
        assert_eq!(p(&[6, -4]).divide_exact(&z(2)), Some(p(&[3, -2])));
        assert_eq!(p(&[6, -3]).divide_exact(&z(2)), None);
        assert_eq!(p(&[1, 2]).shift(2), p(&[0, 0, 1, 2]));
    }

    fn poly_strategy(max_len: usize) -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..max_len).prop_map(|v| p(&v))
    }

    fn monic_strategy() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..4).prop_map(|mut v| {
            v.push(1);
            p(&v)
        })
    }

    proptest! {
        #[test]
        fn division_recombines(f in poly_strategy(8), g in monic_strategy()) {
            let (q, r) = f.monic_division(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
        }

        #[test]
        fn reduce_mod_idempotent(f in poly_strategy(8), m in 2i64..200) {
            let m = z(m);
            let once = f.reduce_mod(&m).unwrap();
            prop_assert_eq!(once.reduce_mod(&m).unwrap(), once);
        }

        #[test]
        fn ring_laws(f in poly_strategy(5), g in poly_strategy(5), x in -20i64..20) {
            let x = z(x);
            prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
            prop_assert_eq!((&f - &g).eval(&x), f.eval(&x) - g.eval(&x));
        }
    }
}
