use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matz::{powers, solve_mod, stack_of, IntMatrix};
use crate::nullideal::minimal_polynomial;
use crate::ringcore::{is_prime, pow_usize, IntPolynomial, PrimePower};

/// Powers `A^0..A^deg(mu)` and `mu_A`, shared by every search over one matrix.
#[derive(Clone, Debug)]
pub(crate) struct PowerTable {
    pows: Vec<IntMatrix>,
    mu: IntPolynomial,
}

impl PowerTable {
    pub(crate) fn new(a: &IntMatrix) -> Self {
        let mu = minimal_polynomial(a);
        let d = mu.degree().expect("minimal polynomial is nonzero");
        PowerTable {
            pows: powers(a, d + 1),
            mu,
        }
    }

    pub(crate) fn mu_degree(&self) -> usize {
        self.pows.len() - 1
    }

    /// Canonical monic polynomial of degree `d >= 1` annihilating `A` modulo `m`, if any.
    pub(crate) fn monic_annihilator(&self, d: usize, m: &BigInt) -> Option<IntPolynomial> {
        let stack = stack_of(&self.pows[..d]);
        let rhs: Vec<BigInt> = self.pows[d].vec().iter().map(|v| -v).collect();
        let sol = solve_mod(&stack, &rhs, m).expect("well-formed system")?;
        let mut coeffs = sol;
        coeffs.push(BigInt::one());
        Some(IntPolynomial::new(coeffs))
    }

    /// Canonical `(m)`-minimal polynomial searching degrees from `start` upwards.
    pub(crate) fn minimal_annihilator(&self, start: usize, m: &BigInt) -> IntPolynomial {
        for d in start.max(1)..=self.mu_degree() {
            if let Some(f) = self.monic_annihilator(d, m) {
                return f;
            }
        }
        unreachable!("mu_A annihilates A modulo every m")
    }
}

/// The canonical `(p^l)`-minimal polynomial of `A`: monic of least degree with
/// `nu(A) = 0 (mod p^l)`, non-leading coefficients in `[0, p^l)`.
///
/// Such polynomials are unique only up to null polynomials of lower degree,
/// so one representative is fixed: `mu_A mod p^l` once the degree reaches
/// `deg mu_A`, and otherwise the lexicographically least coefficient vector
/// (highest degree first). See [`MinimalPolyLadder`].
///
/// For `l = 0` this is the constant 1.
pub fn pj_minimal_polynomial(a: &IntMatrix, pp: &PrimePower) -> IntPolynomial {
    if pp.ell() == 0 {
        return IntPolynomial::one();
    }
    build_ladder(a, pp.p(), pp.ell())
        .expect("PrimePower carries a prime")
        .nu(pp.ell())
        .clone()
}

/// `d_p(A)`, the degree of a `(p)`-minimal polynomial.
pub fn p_degree(a: &IntMatrix, p: &BigInt) -> Result<usize> {
    let pp = PrimePower::new(p.clone(), 1)?;
    Ok(pj_minimal_polynomial(a, &pp).degree().unwrap_or(0))
}

/// Canonical `nu_0 = 1, nu_1, ..., nu_L` for one matrix and one prime.
#[derive(Clone, Debug)]
pub struct MinimalPolyLadder {
    matrix: IntMatrix,
    p: BigInt,
    nu: Vec<IntPolynomial>,
    table: PowerTable,
}

impl MinimalPolyLadder {
    fn start(a: &IntMatrix, p: &BigInt) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p.clone()));
        }
        Ok(MinimalPolyLadder {
            matrix: a.clone(),
            p: p.clone(),
            nu: vec![IntPolynomial::one()],
            table: PowerTable::new(a),
        })
    }

    fn push_level(&mut self) {
        let j = self.nu.len() as u32;
        let m = pow_usize(&self.p, j);
        let raw = self.table.minimal_annihilator(self.degree(j - 1), &m);
        let d = raw.degree().expect("monic");
        let nu = if d == self.mu_degree() {
            self.table.mu.canonical_monic(&m)
        } else {
            self.normal_form(raw, j, d, &m)
        };
        self.nu.push(nu);
    }

    /// Reduces a monic degree-`d` annihilator modulo `p^j` by the null
    /// polynomials of degree `< d`.
    ///
    /// Those are spanned by `p^(j-i) X^(t-1) nu_i` over the reduced index set,
    /// one generator per degree in `d_p..d`, each with leading coefficient
    /// `p^(j-i)`. Working from the top degree down and reducing each coefficient
    /// modulo the leading coefficient of the generator at that degree gives the
    /// lexicographically least representative.
    fn normal_form(&self, raw: IntPolynomial, j: u32, d: usize, m: &BigInt) -> IntPolynomial {
        let deg = |i: u32| if i == j { d } else { self.degree(i) };
        let steps: Vec<u32> = (1..j).filter(|&i| deg(i) < deg(i + 1)).collect();
        let mut by_degree: Vec<Option<(BigInt, IntPolynomial)>> = vec![None; d];
        for (k, &i) in steps.iter().enumerate() {
            let succ = steps.get(k + 1).copied().unwrap_or(j);
            let cofactor = pow_usize(&self.p, j - i);
            for t in 0..deg(succ) - deg(i) {
                let g = self.nu[i as usize].scale(&cofactor).shift(t);
                by_degree[deg(i) + t] = Some((cofactor.clone(), g));
            }
        }
        let mut f = raw;
        for k in (0..d).rev() {
            if let Some((c, g)) = &by_degree[k] {
                let q = f.coeff(k).div_floor(c);
                if !q.is_zero() {
                    f = (&f - &g.scale(&q)).canonical_monic(m);
                }
            }
        }
        f
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    /// `L`, the largest level stored.
    pub fn height(&self) -> u32 {
        (self.nu.len() - 1) as u32
    }

    pub fn mu(&self) -> &IntPolynomial {
        &self.table.mu
    }

    pub fn mu_degree(&self) -> usize {
        self.table.mu_degree()
    }

    /// `nu_j`; panics above the height.
    pub fn nu(&self, j: u32) -> &IntPolynomial {
        &self.nu[j as usize]
    }

    pub fn nus(&self) -> &[IntPolynomial] {
        &self.nu
    }

    pub fn degree(&self, j: u32) -> usize {
        self.nu[j as usize]
            .degree()
            .expect("ladder entries are monic")
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..=self.height()).map(|j| self.degree(j)).collect()
    }

    /// `d_p = deg nu_1`; needs height at least 1.
    pub fn p_degree(&self) -> usize {
        self.degree(1)
    }

    pub fn modulus(&self, j: u32) -> BigInt {
        pow_usize(&self.p, j)
    }

    pub(crate) fn require(&self, ell: u32) -> Result<()> {
        if ell > self.height() {
            return Err(Error::LadderTooShort {
                requested: ell,
                height: self.height(),
            });
        }
        Ok(())
    }

    /// A copy extended to height `max(L, height)`.
    pub fn extended(&self, height: u32) -> MinimalPolyLadder {
        let mut out = self.clone();
        while out.height() < height {
            out.push_level();
        }
        out
    }
}

pub fn build_ladder(a: &IntMatrix, p: &BigInt, height: u32) -> Result<MinimalPolyLadder> {
    let mut ladder = MinimalPolyLadder::start(a, p)?;
    while ladder.height() < height {
        ladder.push_level();
    }
    Ok(ladder)
}

/// `I_A^l = {l} ∪ { i < l : deg nu_i < deg nu_(i+1) }`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    ell: u32,
    elements: Vec<u32>,
}

impl IndexSet {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// Next larger element after `i`.
    pub fn successor(&self, i: u32) -> Option<u32> {
        self.elements.iter().copied().find(|&e| e > i)
    }
}

pub fn index_set(ladder: &MinimalPolyLadder, ell: u32) -> Result<IndexSet> {
    ladder.require(ell)?;
    let mut elements: Vec<u32> = (0..ell)
        .filter(|&i| ladder.degree(i) < ladder.degree(i + 1))
        .collect();
    elements.push(ell);
    Ok(IndexSet { ell, elements })
}

/// Splits a null polynomial as `f = q * nu_l + p * g` with `deg g < deg nu_l`.
///
/// `g` annihilates `A` modulo `p^(l-1)`.
pub fn decompose_null_polynomial(
    f: &IntPolynomial,
    ladder: &MinimalPolyLadder,
    ell: u32,
) -> Result<(IntPolynomial, IntPolynomial)> {
    if ell == 0 {
        return Err(Error::InvalidArgument("decomposition needs l >= 1".into()));
    }
    ladder.require(ell)?;
    let m = ladder.modulus(ell);
    if !ladder.matrix.annihilated_mod(f, &m) {
        return Err(Error::NotNullPolynomial(m));
    }
    let (q, r) = f.monic_division(ladder.nu(ell))?;
    let g = r.divide_exact(&ladder.p).ok_or_else(|| {
        Error::Invariant(format!(
            "remainder {r} of a null polynomial is not divisible by p"
        ))
    })?;
    if ell > 1 && !ladder.matrix.annihilated_mod(&g, &ladder.modulus(ell - 1)) {
        return Err(Error::Invariant(
            "g does not annihilate A modulo p^(l-1)".into(),
        ));
    }
    Ok((q, g))
}

/// `4 * l_max` with `l_max = 10 * deg(mu_A) * (1 + max entry bit length)`.
pub fn default_stabilization_cap(a: &IntMatrix) -> u32 {
    let d = minimal_polynomial(a).degree().unwrap_or(1) as u64;
    let l_max = 10 * d * (1 + a.max_entry_bits());
    u32::try_from(4 * l_max).unwrap_or(u32::MAX)
}

/// Least `m >= 0` with `deg nu_(m+1) = deg mu_A`, with the ladder up to `m + 1`.
pub fn stabilize(a: &IntMatrix, p: &BigInt, cap: u32) -> Result<(u32, MinimalPolyLadder)> {
    let mut ladder = MinimalPolyLadder::start(a, p)?;
    let target = ladder.mu_degree();
    loop {
        let m = ladder.height();
        if m > cap {
            return Err(Error::StabilizationCapExceeded { cap });
        }
        ladder.push_level();
        if ladder.degree(m + 1) == target {
            return Ok((m, ladder));
        }
    }
}

pub fn stabilization_exponent(a: &IntMatrix, p: &BigInt) -> Result<u32> {
    stabilization_exponent_with_cap(a, p, default_stabilization_cap(a))
}

pub fn stabilization_exponent_with_cap(a: &IntMatrix, p: &BigInt, cap: u32) -> Result<u32> {
    stabilize(a, p, cap).map(|(m, _)| m)
}
