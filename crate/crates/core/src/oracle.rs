//! Brute-force oracles for small instances.
//!
//! Everything here enumerates or closes sets exhaustively and shares no code
//! path with the ladder search beyond matrix powers. A search that does not
//! fit the [`EnumerationBudget`] is refused with [`Error::BudgetExceeded`];
//! there is no sampling mode.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matz::{powers, IntMatrix};
use crate::moddecomp::decompose;
use crate::nullideal::{p_ordering, MinimalPolyLadder, NullIdealPresentation, POrderingResult};
use crate::ringcore::integer::valuation_unchecked;
use crate::ringcore::{is_prime, pow_usize, residue, IntPolynomial, PrimePower, Valuation};

/// Limits on exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest modulus an enumeration may run over.
    pub max_modulus: u64,
    /// Largest polynomial degree an enumeration may cover.
    pub max_degree: usize,
    /// Largest matrix dimension.
    pub max_dimension: usize,
    /// Ceiling on candidate polynomials (or closure elements) visited.
    pub max_candidates: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_modulus: 1024,
            max_degree: 4,
            max_dimension: 3,
            max_candidates: 10_000_000,
        }
    }
}

impl EnumerationBudget {
    pub fn with_max_candidates(self, max_candidates: u64) -> Self {
        EnumerationBudget {
            max_candidates,
            ..self
        }
    }

    /// Number of monic-free candidates `m^dmax`, or a refusal.
    fn admit(&self, a: &IntMatrix, m: &BigInt, dmax: usize) -> Result<u64> {
        let refuse = |what: &str| Err(Error::BudgetExceeded(what.into()));
        if a.dim() > self.max_dimension {
            return refuse(&format!(
                "dimension {} exceeds {}",
                a.dim(),
                self.max_dimension
            ));
        }
        let mm = match m.to_u64() {
            Some(v) if v >= 2 && v <= self.max_modulus => v,
            Some(v) if v < 2 => return Err(Error::InvalidModulus(m.clone())),
            _ => return refuse(&format!("modulus {} exceeds {}", m, self.max_modulus)),
        };
        if dmax > self.max_degree + 1 {
            return refuse(&format!(
                "degree {} exceeds {}",
                dmax.saturating_sub(1),
                self.max_degree
            ));
        }
        self.count_candidates(mm, dmax)?;
        Ok(mm)
    }

    fn count_candidates(&self, m: u64, dmax: usize) -> Result<u64> {
        let mut total: u64 = 1;
        for _ in 0..dmax {
            total = total
                .checked_mul(m)
                .filter(|&t| t <= self.max_candidates)
                .ok_or_else(|| {
                    Error::BudgetExceeded(format!(
                        "{m}^{dmax} candidates exceed {}",
                        self.max_candidates
                    ))
                })?;
        }
        Ok(total)
    }
}

/// Residues of `vec(A^k) mod m` for `k < count`.
fn power_residues(a: &IntMatrix, m: u64, count: usize) -> Vec<Vec<u64>> {
    let mb = BigInt::from(m);
    powers(a, count)
        .iter()
        .map(|pk| {
            pk.vec()
                .iter()
                .map(|e| residue(e, &mb).to_u64().expect("residue below m"))
                .collect()
        })
        .collect()
}

fn add_into(acc: &mut [u64], v: &[u64], m: u64) {
    for (x, y) in acc.iter_mut().zip(v) {
        *x = (*x + y) % m;
    }
}

/// Coefficient vectors (ascending) of all `f` with `deg f < dmax`,
/// coefficients in `[0, m)` and `f(A) = 0 mod m`, ordered lexicographically
/// by the highest coefficient first.
fn enumerate_raw(a: &IntMatrix, m: u64, dmax: usize) -> Vec<Vec<u64>> {
    let pows = power_residues(a, m, dmax);
    let mut coeffs = vec![0u64; dmax];
    let mut value = vec![0u64; a.dim() * a.dim()];
    let mut out = Vec::new();
    loop {
        if value.iter().all(|&x| x == 0) {
            out.push(coeffs.clone());
        }
        // Odometer, lowest coefficient fastest. Wrapping `m - 1 -> 0` also
        // adds `A^k` because `m A^k = 0`.
        let mut k = 0;
        loop {
            if k == dmax {
                return out;
            }
            add_into(&mut value, &pows[k], m);
            coeffs[k] += 1;
            if coeffs[k] < m {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}

/// Adds every multiple of `v` to `span`, asserting each stays inside `within`.
fn close_under(
    span: &mut BTreeSet<Vec<u64>>,
    v: &[u64],
    m: u64,
    within: Option<&BTreeSet<Vec<u64>>>,
) {
    let base: Vec<Vec<u64>> = span.iter().cloned().collect();
    for s in base {
        let mut cur = s;
        loop {
            add_into(&mut cur, v, m);
            if span.contains(&cur) {
                break;
            }
            if let Some(w) = within {
                assert!(
                    w.contains(&cur),
                    "enumerated null set is not closed under addition"
                );
            }
            span.insert(cur.clone());
        }
    }
}

/// Asserts that an enumerated null set is an additive group closed under
/// multiplication by `X` below the degree bound.
fn assert_ideal_section(set: &[Vec<u64>], m: u64, dmax: usize) {
    let all: BTreeSet<Vec<u64>> = set.iter().cloned().collect();
    let zero = vec![0u64; dmax];
    assert!(all.contains(&zero), "enumerated null set misses 0");
    let mut span = BTreeSet::new();
    span.insert(zero);
    for s in set {
        if !span.contains(s) {
            close_under(&mut span, s, m, Some(&all));
        }
    }
    assert_eq!(span.len(), all.len(), "enumerated null set is not a group");
    for s in set {
        if dmax > 0 && s[dmax - 1] == 0 {
            let mut shifted = vec![0u64; dmax];
            shifted[1..].copy_from_slice(&s[..dmax - 1]);
            assert!(
                all.contains(&shifted),
                "enumerated null set is not closed under X"
            );
        }
    }
}

fn to_poly(c: &[u64]) -> IntPolynomial {
    IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
}

fn from_poly(f: &IntPolynomial, m: u64, len: usize) -> Vec<u64> {
    let mb = BigInt::from(m);
    (0..len)
        .map(|k| residue(&f.coeff(k), &mb).to_u64().expect("residue below m"))
        .collect()
}

fn null_section(
    a: &IntMatrix,
    m: &BigInt,
    dmax: usize,
    budget: &EnumerationBudget,
) -> Result<(u64, Vec<Vec<u64>>)> {
    let mm = budget.admit(a, m, dmax)?;
    let raw = enumerate_raw(a, mm, dmax);
    assert_ideal_section(&raw, mm, dmax);
    Ok((mm, raw))
}

/// All `f` with `deg f < dmax`, coefficients in `[0, m)` and `f(A) = 0 mod m`,
/// ordered lexicographically by the highest coefficient first.
pub fn enumerate_null(
    a: &IntMatrix,
    m: &BigInt,
    dmax: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<IntPolynomial>> {
    let (_, raw) = null_section(a, m, dmax, budget)?;
    Ok(raw.iter().map(|c| to_poly(c)).collect())
}

/// Degree-by-degree reducer for `Z/m [X]` modulo the ideal generated by a
/// finite set, restricted to degree `< dmax`.
///
/// At degree `k` every shifted generator `X^(k - deg g) g` is available; the
/// gcd of their leading coefficients with `m` is reached by a Bezout
/// combination, and the current coefficient is cleared whenever that gcd
/// divides it.
struct Reducer {
    m: u64,
    /// `(gcd, combination)` per degree.
    steps: Vec<(u64, Vec<u64>)>,
}

impl Reducer {
    fn new(gens: &[IntPolynomial], m: u64, dmax: usize) -> Self {
        let mi = m as i128;
        let gens: Vec<Vec<u64>> = gens.iter().map(|g| from_poly(g, m, dmax)).collect();
        let degree = |g: &Vec<u64>| g.iter().rposition(|&c| c != 0);
        let mut steps = Vec::with_capacity(dmax);
        for k in 0..dmax {
            let mut g = mi;
            let mut comb = vec![0i128; dmax];
            for gen in &gens {
                let Some(d) = degree(gen) else { continue };
                if d > k {
                    continue;
                }
                let lead = gen[d] as i128;
                let e = g.extended_gcd(&lead);
                let (h, s, t) = (e.gcd, e.x, e.y);
                if h == g {
                    continue;
                }
                for c in comb.iter_mut() {
                    *c = (*c * s).rem_euclid(mi);
                }
                for (j, &c) in gen.iter().enumerate() {
                    if j + k - d < dmax && c != 0 {
                        let slot = &mut comb[j + k - d];
                        *slot = (*slot + t * c as i128).rem_euclid(mi);
                    }
                }
                g = h;
            }
            let comb = comb.into_iter().map(|c| c as u64).collect();
            steps.push((g as u64, comb));
        }
        Reducer { m, steps }
    }

    fn reduces_to_zero(&self, f: &[u64]) -> bool {
        let m = self.m;
        let mut f = f.to_vec();
        for k in (0..f.len()).rev() {
            if f[k] == 0 {
                continue;
            }
            let (g, comb) = &self.steps[k];
            if *g == m || !f[k].is_multiple_of(*g) {
                return false;
            }
            let q = f[k] / g;
            for (x, c) in f.iter_mut().zip(comb) {
                *x = (*x + m - (q * c) % m) % m;
            }
            debug_assert_eq!(f[k], 0);
        }
        true
    }
}

fn check_ideal(
    a: &IntMatrix,
    m: &BigInt,
    gens: &[IntPolynomial],
    dmax: usize,
    budget: &EnumerationBudget,
) -> Result<bool> {
    if !gens.iter().all(|g| a.annihilated_mod(g, m)) {
        return Ok(false);
    }
    let (mm, raw) = null_section(a, m, dmax, budget)?;
    let reducer = Reducer::new(gens, mm, dmax);
    Ok(raw.iter().all(|f| reducer.reduces_to_zero(f)))
}

/// Soundness and completeness of a presentation of `N_(p^l)(A)`.
///
/// True iff every generator annihilates `A` mod `p^l` and every null
/// polynomial of degree `<= deg nu_l` (the largest generator degree) reduces
/// to zero by degree-by-degree division through the generators.
pub fn check_generation(
    a: &IntMatrix,
    pp: &PrimePower,
    presentation: &NullIdealPresentation,
    budget: &EnumerationBudget,
) -> Result<bool> {
    let gens: Vec<IntPolynomial> = presentation
        .generators
        .iter()
        .map(|g| g.element())
        .collect();
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    check_ideal(a, &pp.modulus(), &gens, top + 1, budget)
}

/// Whether the ideal generated by `gens` contains every polynomial of degree
/// `< dmax` that annihilates `A` mod `m`, and every generator annihilates.
///
/// Completeness relies on the generators reducing degree by degree, which
/// holds for sets shaped like the index-set presentations.
pub fn check_ideal_generation(
    a: &IntMatrix,
    m: &BigInt,
    gens: &[IntPolynomial],
    dmax: usize,
    budget: &EnumerationBudget,
) -> Result<bool> {
    check_ideal(a, m, gens, dmax, budget)
}

/// Size of the additive subgroup of `(Z/m)^(n*n)` spanned by `A^k`, `k < deg mu_A`.
pub fn span_size(a: &IntMatrix, m: &BigInt, budget: &EnumerationBudget) -> Result<u64> {
    let d = crate::nullideal::minimal_polynomial(a)
        .degree()
        .expect("monic");
    let mm = budget.admit(a, m, 0)?;
    let mut span = BTreeSet::new();
    span.insert(vec![0u64; a.dim() * a.dim()]);
    for v in power_residues(a, mm, d) {
        close_under(&mut span, &v, mm, None);
        if span.len() as u64 > budget.max_candidates {
            return Err(Error::BudgetExceeded(format!(
                "span exceeds {} elements",
                budget.max_candidates
            )));
        }
    }
    Ok(span.len() as u64)
}

/// Cardinality identities for `R_l[A]`.
///
/// Checks `|N^{<d}| = prod_{i in S} p^(i s_i)` for `d = deg nu_l` by
/// enumeration, and `|R_l[A]| = p^(l d_p + sum (l - i) s_i)` by closing the
/// span of the powers of `A`.
pub fn check_counts(
    ladder: &MinimalPolyLadder,
    ell: u32,
    budget: &EnumerationBudget,
) -> Result<bool> {
    let dec = decompose(ladder, ell)?;
    let p = ladder.p();
    let m = ladder.modulus(ell);
    let a = ladder.matrix();
    let (_, raw) = null_section(a, &m, ladder.degree(ell), budget)?;
    let null_exp: u64 = dec
        .torsion
        .iter()
        .map(|&(e, s)| u64::from(ell - e) * s as u64)
        .sum();
    let expected_null = pow_usize(p, null_exp as u32);
    let expected_span = pow_usize(p, dec.length() as u32);
    let span = span_size(a, &m, budget)?;
    Ok(BigInt::from(raw.len()) == expected_null && BigInt::from(span) == expected_span)
}

/// Verifies a p-ordering of a small set.
///
/// Each chosen element must minimize the prefix valuation over the set, and
/// the valuation sequence must match the one produced by a greedy ordering
/// that breaks ties towards the largest element.
pub fn check_pordering(set: &[BigInt], p: &BigInt, result: &POrderingResult) -> bool {
    if !is_prime(p) || result.ordering.len() != result.valuations.len() {
        return false;
    }
    let elements: BTreeSet<BigInt> = set.iter().cloned().collect();
    let prefix_val = |b: &BigInt, prefix: &[BigInt]| {
        prefix.iter().fold(Valuation::Finite(0), |acc, t| {
            acc + valuation_unchecked(&(b - t), p)
        })
    };
    for (k, b) in result.ordering.iter().enumerate() {
        if !elements.contains(b) {
            return false;
        }
        let prefix = &result.ordering[..k];
        let v = prefix_val(b, prefix);
        if v != result.valuations[k] || elements.iter().any(|c| prefix_val(c, prefix) < v) {
            return false;
        }
    }
    // Independent greedy run with the opposite tie-break.
    let mut alt: Vec<BigInt> = Vec::new();
    let mut alt_vals = Vec::new();
    for _ in 0..result.ordering.len() {
        let (b, v) = elements
            .iter()
            .rev()
            .map(|c| (c, prefix_val(c, &alt)))
            .min_by(|x, y| x.1.cmp(&y.1))
            .expect("nonempty set");
        alt.push(b.clone());
        alt_vals.push(v);
    }
    alt_vals == result.valuations
        && p_ordering(set, p, result.ordering.len()).is_ok_and(|r| r.valuations == alt_vals)
}

/// Whether some monic polynomial of degree `< d` annihilates `A` mod `m`,
/// by exhaustive search over coefficients in `[0, m)`.
pub fn has_monic_annihilator_below(
    a: &IntMatrix,
    m: &BigInt,
    d: usize,
    budget: &EnumerationBudget,
) -> Result<bool> {
    if d == 0 {
        return Ok(false);
    }
    let mm = budget.admit(a, m, d - 1)?;
    let pows = power_residues(a, mm, d);
    // f = X^k + g with deg g < k; g(A) = -A^k exactly when g(A) + A^k = 0.
    for k in 0..d {
        let target: Vec<u64> = pows[k].clone();
        let mut value = target.clone();
        let mut coeffs = vec![0u64; k];
        loop {
            if value.iter().all(|&x| x == 0) {
                return Ok(true);
            }
            let mut j = 0;
            loop {
                if j == k {
                    break;
                }
                add_into(&mut value, &pows[j], mm);
                coeffs[j] += 1;
                if coeffs[j] < mm {
                    break;
                }
                coeffs[j] = 0;
                j += 1;
            }
            if j == k {
                break;
            }
        }
    }
    Ok(false)
}

/// Histogram of the least degree of a monic annihilator mod `p^j` for
/// `j = 1..=ell`, by exhaustive search up to `deg mu_A`.
pub fn brute_force_degrees(
    a: &IntMatrix,
    p: &BigInt,
    ell: u32,
    budget: &EnumerationBudget,
) -> Result<Vec<usize>> {
    let mu_deg = crate::nullideal::minimal_polynomial(a)
        .degree()
        .expect("monic");
    (1..=ell)
        .map(|j| {
            let m = pow_usize(p, j);
            let mut d = 0;
            while d < mu_deg && !has_monic_annihilator_below(a, &m, d + 1, budget)? {
                d += 1;
            }
            Ok(d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nullideal::{build_ladder, null_ideal_generators, Generator, Modulus};
    use num_traits::Zero;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn example() -> IntMatrix {
        IntMatrix::diagonal_i64(&[4, 16, 32])
    }

    #[test]
    fn enumerate_examples() {
        let b = EnumerationBudget::default();
        let got = enumerate_null(&example(), &z(8), 2, &b).unwrap();
        let expected: Vec<IntPolynomial> = [0, 2, 4, 6]
            .iter()
            .map(|&a| IntPolynomial::from_i64s(&[0, a]))
            .collect();
        assert_eq!(got, expected);
        assert_eq!(
            enumerate_null(&IntMatrix::identity(2), &z(5), 1, &b).unwrap(),
            vec![IntPolynomial::zero()]
        );
        let zero = IntMatrix::new(crate::matz::Matrix::zeros(2, 2)).unwrap();
        let got = enumerate_null(&zero, &z(6), 2, &b).unwrap();
        assert_eq!(got.len(), 6);
        assert!(got.iter().all(|f| f.coeff(0).is_zero()));
    }

    #[test]
    fn enumerate_is_lexicographic() {
        let b = EnumerationBudget::default();
        let got = enumerate_null(&example(), &z(16), 3, &b).unwrap();
        let keys: Vec<Vec<BigInt>> = got
            .iter()
            .map(|f| (0..3).rev().map(|k| f.coeff(k)).collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn refusals_are_errors() {
        let b = EnumerationBudget::default();
        assert!(matches!(
            enumerate_null(&example(), &z(2048), 2, &b),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_null(&example(), &z(8), 9, &b),
            Err(Error::BudgetExceeded(_))
        ));
        let tight = b.with_max_candidates(100);
        assert!(matches!(
            enumerate_null(&example(), &z(16), 3, &tight),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            enumerate_null(&IntMatrix::identity(4), &z(2), 1, &b),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn generation_examples() {
        let b = EnumerationBudget::default();
        let pp = PrimePower::new(z(2), 3).unwrap();
        let pres = null_ideal_generators(&example(), &pp).unwrap();
        assert!(check_generation(&example(), &pp, &pres, &b).unwrap());

        let mut missing = pres.clone();
        missing.generators.retain(|g| g.cofactor != z(2));
        assert_eq!(missing.generators.len(), pres.generators.len() - 1);
        assert!(!check_generation(&example(), &pp, &missing, &b).unwrap());

        let pp5 = PrimePower::new(z(5), 2).unwrap();
        let id = NullIdealPresentation {
            modulus: Modulus::PrimePower(pp5.clone()),
            generators: vec![
                Generator {
                    cofactor: z(1),
                    poly: IntPolynomial::from_i64s(&[24, 1]),
                },
                Generator {
                    cofactor: z(25),
                    poly: IntPolynomial::one(),
                },
            ],
        };
        assert!(check_generation(&IntMatrix::identity(2), &pp5, &id, &b).unwrap());

        let bogus = NullIdealPresentation {
            modulus: Modulus::PrimePower(pp.clone()),
            generators: vec![Generator {
                cofactor: z(1),
                poly: IntPolynomial::x(),
            }],
        };
        assert!(!check_generation(&example(), &pp, &bogus, &b).unwrap());
    }

    #[test]
    fn counts_examples() {
        let b = EnumerationBudget::default();
        let l = build_ladder(&example(), &z(2), 7).unwrap();
        assert!(check_counts(&l, 3, &b).unwrap());
        assert_eq!(enumerate_null(&example(), &z(8), 2, &b).unwrap().len(), 4);
        let id = build_ladder(&IntMatrix::identity(3), &z(3), 2).unwrap();
        assert!(check_counts(&id, 2, &b).unwrap());
        let d = build_ladder(&IntMatrix::diagonal_i64(&[0, 2]), &z(2), 2).unwrap();
        assert!(check_counts(&d, 2, &b).unwrap());
        assert_eq!(span_size(&example(), &z(128), &b).unwrap(), 1 << 13);
    }

    #[test]
    fn pordering_examples() {
        let s = [z(4), z(16), z(32)];
        let r = p_ordering(&s, &z(2), 3).unwrap();
        assert_eq!(r.ordering, vec![z(4), z(16), z(32)]);
        assert!(check_pordering(&s, &z(2), &r));

        let swapped = POrderingResult {
            ordering: vec![z(4), z(32), z(16)],
            valuations: vec![
                Valuation::Finite(0),
                Valuation::Finite(2),
                Valuation::Finite(6),
            ],
        };
        assert!(check_pordering(&s, &z(2), &swapped));

        let wrong_vals = POrderingResult {
            ordering: vec![z(4), z(16), z(32)],
            valuations: vec![
                Valuation::Finite(0),
                Valuation::Finite(2),
                Valuation::Finite(5),
            ],
        };
        assert!(!check_pordering(&s, &z(2), &wrong_vals));
        let t = [z(0), z(1), z(2)];
        let not_minimal = POrderingResult {
            ordering: vec![z(0), z(2), z(1)],
            valuations: vec![
                Valuation::Finite(0),
                Valuation::Finite(1),
                Valuation::Finite(1),
            ],
        };
        assert!(!check_pordering(&t, &z(2), &not_minimal));

        let single = p_ordering(&[z(7)], &z(3), 1).unwrap();
        assert!(check_pordering(&[z(7)], &z(3), &single));
    }

    #[test]
    fn monic_search_matches_ladder() {
        let b = EnumerationBudget::default();
        assert_eq!(
            brute_force_degrees(&example(), &z(2), 8, &b).unwrap(),
            vec![1, 1, 2, 2, 2, 2, 3, 3]
        );
        assert!(has_monic_annihilator_below(&example(), &z(3), 3, &b).unwrap());
        assert!(!has_monic_annihilator_below(&example(), &z(5), 3, &b).unwrap());
    }
}
