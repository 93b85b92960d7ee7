//! Integer-valued polynomials on a matrix.
//!
//! `Int(A) = { f in Q[X] : f(A) in M_n(Z) }`. With `mu_A` the minimal
//! polynomial and, for each critical prime `p`, its stabilization exponent
//! `m_p`,
//!
//! ```text
//! Int(A) = mu_A Q[X] + Z[X] + sum_p sum_(j in I^(m_p), j >= 1) nu_(p,j) / p^j Z[X]
//! ```
//!
//! A prime is critical when `deg nu_(p,1) < deg mu_A`; only finitely many are.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matz::{power_stack, powers, smith_normal_form, solve_int, stack_of, IntMatrix};
use crate::nullideal::{
    default_stabilization_cap, index_set, minimal_polynomial, p_degree, stabilize,
};
use crate::ringcore::{factorize, mod_inverse, pow_usize, residue, IntPolynomial};

/// `numerator / denominator` with `denominator > 0` coprime to the content
/// of the numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    numerator: IntPolynomial,
    denominator: BigInt,
}

impl RationalPolynomial {
    pub fn new(numerator: IntPolynomial, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let sign = if denominator.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let g = numerator.content().gcd(&denominator);
        let g = if g.is_zero() { denominator.abs() } else { g };
        let numerator = numerator
            .scale(&sign)
            .divide_exact(&g)
            .expect("gcd divides the content");
        Ok(RationalPolynomial {
            numerator,
            denominator: denominator.abs() / g,
        })
    }

    pub fn integral(f: IntPolynomial) -> Self {
        RationalPolynomial {
            numerator: f,
            denominator: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_integral(&self) -> bool {
        self.denominator.is_one()
    }

    /// `h * self` for `h in Z[X]`.
    pub fn mul_integral(&self, h: &IntPolynomial) -> Self {
        RationalPolynomial::new(&self.numerator * h, self.denominator.clone())
            .expect("nonzero denominator")
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, self.denominator)
        }
    }
}

/// `nu_(p,j) / p^j`, one fractional generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalGenerator {
    pub j: u32,
    pub nu: IntPolynomial,
}

/// A critical prime with its stabilization exponent and fractional generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPrime {
    pub p: BigInt,
    pub m: u32,
    pub generators: Vec<FractionalGenerator>,
}

impl CriticalPrime {
    pub fn rational_generators(&self) -> impl Iterator<Item = RationalPolynomial> + '_ {
        self.generators.iter().map(|g| {
            RationalPolynomial::new(g.nu.clone(), pow_usize(&self.p, g.j)).expect("p^j > 0")
        })
    }
}

/// Finite presentation of `Int(A)`; critical primes ascend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntValPresentation {
    pub mu: IntPolynomial,
    pub critical: Vec<CriticalPrime>,
}

impl IntValPresentation {
    pub fn rational_generators(&self) -> impl Iterator<Item = RationalPolynomial> + '_ {
        self.critical.iter().flat_map(|c| c.rational_generators())
    }

    /// Whether every numerator annihilates `A` modulo its denominator.
    pub fn is_sound_for(&self, a: &IntMatrix) -> bool {
        self.rational_generators().all(|f| intval_membership(&f, a))
            && a.evaluate(&self.mu).is_zero()
    }

    /// Whether `f` lies in the module spanned by the presentation.
    ///
    /// `f` is reduced modulo `mu_A`, split by partial fractions into
    /// prime-power denominators, and each part `g / p^e` is reduced degree by
    /// degree with the numerators `p^(e - min(j, e)) nu_(p,j)`; it lies in the
    /// span iff the remainder is `0 mod p^e`.
    pub fn expresses(&self, f: &RationalPolynomial) -> Result<bool> {
        let (_, r) = f.numerator().monic_division(&self.mu)?;
        let d = f.denominator();
        if d.is_one() {
            return Ok(true);
        }
        for (p, e) in factorize(d)? {
            let pe = pow_usize(&p, e);
            let rest = d / &pe;
            let inv = mod_inverse(&rest, &pe).expect("coprime cofactor");
            let part = r.scale(&inv).reduce_mod(&pe)?;
            let mut gens: Vec<IntPolynomial> = Vec::new();
            if let Some(c) = self.critical.iter().find(|c| c.p == p) {
                for g in &c.generators {
                    gens.push(g.nu.scale(&pow_usize(&p, e - g.j.min(e))));
                }
            }
            if !reduces_to_zero(part, &gens, &pe) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Degree-by-degree reduction of `f` modulo `m` by the ideal generated by
/// `gens`, using at each degree the Bezout combination of the shifted
/// generators' leading coefficients.
fn reduces_to_zero(f: IntPolynomial, gens: &[IntPolynomial], m: &BigInt) -> bool {
    let mut f = f.reduce_mod(m).expect("modulus at least 2");
    while let Some(k) = f.degree() {
        let mut g = m.clone();
        let mut comb = IntPolynomial::zero();
        for gen in gens {
            let Some(d) = gen.degree() else { continue };
            if d > k {
                continue;
            }
            let lead = residue(&gen.coeff(d), m);
            let e = g.extended_gcd(&lead);
            if e.gcd == g {
                continue;
            }
            comb = &comb.scale(&e.x) + &gen.shift(k - d).scale(&e.y);
            g = e.gcd;
        }
        let c = f.coeff(k);
        if !c.is_multiple_of(&g) {
            return false;
        }
        f = (&f - &comb.scale(&(c / &g)))
            .reduce_mod(m)
            .expect("modulus at least 2");
        debug_assert!(f.degree().is_none_or(|d| d < k));
    }
    true
}

/// Whether `numerator(A)` is divisible by the denominator entrywise.
pub fn intval_membership(f: &RationalPolynomial, a: &IntMatrix) -> bool {
    f.denominator().is_one() || a.annihilated_mod(f.numerator(), f.denominator())
}

/// Primes `p` with `d_p(A) < deg mu_A`, ascending.
///
/// These are the prime divisors of the product of the Smith divisors of the
/// power stack `[vec A^0 | ... | vec A^(D-1)]`, `D = deg mu_A`: the stack
/// loses rank mod `p` exactly when a polynomial of degree `< D` annihilates
/// `A` mod `p`. Each candidate is confirmed through `p_degree`.
pub fn critical_primes(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let mu_deg = minimal_polynomial(a).degree().expect("monic");
    let snf = smith_normal_form(&power_stack(a, mu_deg)?);
    if snf.rank() != mu_deg {
        return Err(Error::Invariant(
            "powers below deg mu_A are dependent".into(),
        ));
    }
    let product = snf.divisors.iter().fold(BigInt::one(), |acc, d| acc * d);
    if product.is_one() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (p, _) in factorize(&product)? {
        if p_degree(a, &p)? >= mu_deg {
            return Err(Error::Invariant(alloc::format!(
                "{p} divides the power-stack divisors but d_p = deg mu_A"
            )));
        }
        out.push(p);
    }
    Ok(out)
}

/// The presentation of `Int(A)`: `mu_A`, and for each critical prime its
/// stabilization exponent `m_p` with generators `nu_(p,j) / p^j` for `j`
/// in the index set at level `m_p`, `j >= 1`.
pub fn intval_presentation(a: &IntMatrix) -> Result<IntValPresentation> {
    let mu = minimal_polynomial(a);
    let cap = default_stabilization_cap(a);
    let mut critical = Vec::new();
    for p in critical_primes(a)? {
        let (m, ladder) = stabilize(a, &p, cap)?;
        let generators = index_set(&ladder, m)?
            .elements()
            .iter()
            .filter(|&&j| j >= 1)
            .map(|&j| FractionalGenerator {
                j,
                nu: ladder.nu(j).clone(),
            })
            .collect();
        critical.push(CriticalPrime { p, m, generators });
    }
    Ok(IntValPresentation { mu, critical })
}

/// `Int(A) = mu_A Q[X] + Z[X]`, i.e. no prime is critical.
pub fn is_polynomially_closed(a: &IntMatrix) -> Result<bool> {
    Ok(critical_primes(a)?.is_empty())
}

/// `nu_(p,j)(A) / p^j` for one fractional generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageGenerator {
    pub p: BigInt,
    pub j: u32,
    pub matrix: IntMatrix,
}

/// `Int(A)(A) = Z[A] + sum Z[A] G_i`, given by `A` and the matrices `G_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageRing {
    pub base: IntMatrix,
    pub generators: Vec<ImageGenerator>,
}

impl ImageRing {
    /// Whether `m` lies in the additive group spanned by `A^k` and `A^k G_i`
    /// for `k < deg mu_A`, which is `Z[A] + sum Z[A] G_i`.
    pub fn contains(&self, m: &IntMatrix) -> Result<bool> {
        if m.dim() != self.base.dim() {
            return Err(Error::DimensionMismatch("matrix dimension".into()));
        }
        let d = minimal_polynomial(&self.base).degree().expect("monic");
        let pows = powers(&self.base, d);
        let mut span = pows.clone();
        for g in &self.generators {
            span.extend(pows.iter().map(|pk| pk * &g.matrix));
        }
        Ok(solve_int(&stack_of(&span), m.vec())?.is_some())
    }
}

/// The image ring `Int(A)(A)`: `A` together with `nu_(p,j)(A) / p^j` for
/// every fractional generator of [`intval_presentation`].
pub fn image_ring_generators(a: &IntMatrix) -> Result<ImageRing> {
    let pres = intval_presentation(a)?;
    let mut generators = Vec::new();
    for c in &pres.critical {
        for g in &c.generators {
            let pj = pow_usize(&c.p, g.j);
            let matrix = a.evaluate(&g.nu).divide_exact(&pj).ok_or_else(|| {
                Error::Invariant(alloc::format!(
                    "nu_({},{})(A) is not divisible by p^j",
                    c.p,
                    g.j
                ))
            })?;
            generators.push(ImageGenerator {
                p: c.p.clone(),
                j: g.j,
                matrix,
            });
        }
    }
    Ok(ImageRing {
        base: a.clone(),
        generators,
    })
}
