//! Cyclic decomposition of `R_l[A]`, `R_l = Z/p^l`.
//!
//! With `d_p = deg nu_1`, reduced index set `S` and
//! `s_i = deg nu_succ(i) - deg nu_i`,
//!
//! ```text
//! R_l[A] ~= R_l^(d_p) ⊕ ⨁_{i in S} (R_(l-i))^(s_i)
//! ```

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matz::{power_stack, relation_lattice_basis, smith_normal_form, Matrix};
use crate::nullideal::{index_set, GeneratorSet, MinimalPolyLadder};
use crate::ringcore::{pow_usize, IntPolynomial};

/// The index set without `0` and `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedIndexSet {
    pub ell: u32,
    pub elements: Vec<u32>,
}

pub fn reduced_index_set(ladder: &MinimalPolyLadder, ell: u32) -> Result<ReducedIndexSet> {
    require_positive(ell)?;
    let full = index_set(ladder, ell)?;
    let elements = full
        .elements()
        .iter()
        .copied()
        .filter(|&i| i != 0 && i != ell)
        .collect();
    Ok(ReducedIndexSet { ell, elements })
}

fn require_positive(ell: u32) -> Result<()> {
    if ell == 0 {
        return Err(Error::InvalidArgument(
            "module decomposition needs l >= 1".into(),
        ));
    }
    Ok(())
}

/// `X^(shift-1) * cofactor * poly`, a generator of `N^{<d}` as an `R_l`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleGenerator {
    pub cofactor: BigInt,
    pub shift: usize,
    pub poly: IntPolynomial,
}

impl ModuleGenerator {
    pub fn element(&self) -> IntPolynomial {
        self.poly.scale(&self.cofactor).shift(self.shift - 1)
    }
}

/// `(i, s_i)` for `i` in the reduced index set.
fn torsion_steps(ladder: &MinimalPolyLadder, ell: u32) -> Result<Vec<(u32, usize)>> {
    let full = index_set(ladder, ell)?;
    Ok(reduced_index_set(ladder, ell)?
        .elements
        .into_iter()
        .map(|i| {
            let succ = full.successor(i).expect("l is the last element");
            (i, ladder.degree(succ) - ladder.degree(i))
        })
        .collect())
}

/// Module generators of the null polynomials of degree `< deg nu_l`:
/// `p^(l-i) X^(t-1) nu_i` for `i` in the reduced index set and `1 <= t <= s_i`.
pub fn nleq_module_generators(
    ladder: &MinimalPolyLadder,
    ell: u32,
) -> Result<Vec<ModuleGenerator>> {
    require_positive(ell)?;
    let mut out = Vec::new();
    for (i, s) in torsion_steps(ladder, ell)?.into_iter().rev() {
        for t in 1..=s {
            out.push(ModuleGenerator {
                cofactor: pow_usize(ladder.p(), ell - i),
                shift: t,
                poly: ladder.nu(i).clone(),
            });
        }
    }
    Ok(out)
}

/// `R_l^(free_rank) ⊕ ⨁ (R_exponent)^(multiplicity)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub ell: u32,
    pub free_rank: usize,
    /// `(l - i, s_i)` with exponents strictly decreasing.
    pub torsion: Vec<(u32, usize)>,
    pub total_degree: usize,
}

impl ModuleDecomposition {
    /// Number of nonzero cyclic summands.
    pub fn summand_count(&self) -> usize {
        self.free_rank + self.torsion.iter().map(|(_, s)| s).sum::<usize>()
    }

    /// `log_p |R_l[A]|`.
    pub fn length(&self) -> u64 {
        self.ell as u64 * self.free_rank as u64
            + self
                .torsion
                .iter()
                .map(|&(e, s)| e as u64 * s as u64)
                .sum::<u64>()
    }
}

pub fn decompose(ladder: &MinimalPolyLadder, ell: u32) -> Result<ModuleDecomposition> {
    require_positive(ell)?;
    let torsion: Vec<(u32, usize)> = torsion_steps(ladder, ell)?
        .into_iter()
        .map(|(i, s)| (ell - i, s))
        .collect();
    let dec = ModuleDecomposition {
        ell,
        free_rank: ladder.p_degree(),
        torsion,
        total_degree: ladder.degree(ell),
    };
    if dec.summand_count() != dec.total_degree {
        return Err(Error::Invariant(
            "free rank plus torsion multiplicities differ from deg nu_l".into(),
        ));
    }
    Ok(dec)
}

/// Invariant factors with multiplicities in the form `1 (x d_p), p^(l-i) (x s_i)`,
/// ascending by divisibility.
pub fn invariant_factors(dec: &ModuleDecomposition, p: &BigInt) -> Vec<(BigInt, usize)> {
    let mut out = Vec::new();
    if dec.free_rank > 0 {
        out.push((BigInt::one(), dec.free_rank));
    }
    for &(e, s) in dec.torsion.iter().rev() {
        out.push((pow_usize(p, e), s));
    }
    out
}

/// The invariant factors listed one per summand.
pub fn expand_invariant_factors(factors: &[(BigInt, usize)]) -> Vec<BigInt> {
    factors
        .iter()
        .flat_map(|(f, s)| core::iter::repeat_n(f.clone(), *s))
        .collect()
}

/// Whether `R_l[A]` is free, i.e. `deg nu_l = d_p`.
///
/// The three equivalent criteria (degree, empty reduced index set, two-element
/// presentation) are all evaluated and must agree.
pub fn is_free(ladder: &MinimalPolyLadder, ell: u32) -> Result<bool> {
    require_positive(ell)?;
    let by_degree = ladder.degree(ell) == ladder.p_degree();
    let by_index = reduced_index_set(ladder, ell)?.elements.is_empty();
    let pres = ladder.presentation(ell, GeneratorSet::IndexSet)?;
    let by_presentation = pres.generators.len() == 2
        && pres.generators[0].cofactor.is_one()
        && pres.generators[0].poly == *ladder.nu(ell)
        && pres.generators[1].poly.is_monic()
        && pres.generators[1].poly.degree() == Some(0);
    if by_degree != by_index || by_degree != by_presentation {
        return Err(Error::Invariant("freeness criteria disagree".into()));
    }
    Ok(by_degree)
}

/// Invariant factors recomputed from the relation lattice of
/// `vec(A^0), ..., vec(A^(d-1))` modulo `p^l`, `d = deg nu_l`.
///
/// The lattice `K` of integer relations satisfies `Z^d / K ~= R_l[A]`; its
/// elementary divisors equal to `p^l` are the free summands and are reported
/// as `1`, as in [`invariant_factors`]. Unit divisors are dropped.
pub fn snf_invariant_factors(ladder: &MinimalPolyLadder, ell: u32) -> Result<Vec<(BigInt, usize)>> {
    require_positive(ell)?;
    ladder.require(ell)?;
    let d = ladder.degree(ell);
    let m = ladder.modulus(ell);
    let stack = power_stack(ladder.matrix(), d)?;
    let basis = relation_lattice_basis(&stack, &m)?;
    let mut gens = Matrix::zeros(d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            gens[(i, j)] = basis[(i, j)].clone();
        }
        gens[(i, d + i)] = m.clone();
    }
    let snf = smith_normal_form(&gens);
    let mut out: Vec<(BigInt, usize)> = Vec::new();
    for div in snf.divisors.iter().filter(|v| !v.is_zero() && !v.is_one()) {
        let f = if *div == m {
            BigInt::one()
        } else {
            div.clone()
        };
        match out.iter_mut().find(|(g, _)| *g == f) {
            Some((_, s)) => *s += 1,
            None => out.push((f, 1)),
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matz::IntMatrix;
    use crate::nullideal::build_ladder;
    use alloc::vec;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn example_ladder(p: i64, h: u32) -> MinimalPolyLadder {
        build_ladder(&IntMatrix::diagonal_i64(&[4, 16, 32]), &z(p), h).unwrap()
    }

    #[test]
    fn reduced_index_sets() {
        let l = example_ladder(2, 7);
        assert_eq!(reduced_index_set(&l, 7).unwrap().elements, vec![2, 6]);
        assert!(reduced_index_set(&l, 2).unwrap().elements.is_empty());
        let id = build_ladder(&IntMatrix::identity(2), &z(3), 4).unwrap();
        assert!(reduced_index_set(&id, 4).unwrap().elements.is_empty());
        assert!(reduced_index_set(&l, 0).is_err());
    }

    #[test]
    fn module_generators() {
        let l = example_ladder(2, 7);
        let g3 = nleq_module_generators(&l, 3).unwrap();
        assert_eq!(
            g3,
            vec![ModuleGenerator {
                cofactor: z(2),
                shift: 1,
                poly: IntPolynomial::x()
            }]
        );
        assert!(l.matrix().annihilated_mod(&g3[0].element(), &z(8)));

        let g7 = nleq_module_generators(&l, 7).unwrap();
        assert_eq!(g7.len(), 2);
        assert_eq!(
            (g7[0].cofactor.clone(), g7[0].poly.degree()),
            (z(2), Some(2))
        );
        assert_eq!(
            (g7[1].cofactor.clone(), g7[1].poly.degree()),
            (z(32), Some(1))
        );
        for g in &g7 {
            assert!(l.matrix().annihilated_mod(&g.element(), &z(128)));
        }
        let id = build_ladder(&IntMatrix::identity(2), &z(3), 2).unwrap();
        assert!(nleq_module_generators(&id, 2).unwrap().is_empty());
    }

    #[test]
    fn decompositions() {
        let l = example_ladder(2, 7);
        let d7 = decompose(&l, 7).unwrap();
        assert_eq!(
            (d7.free_rank, d7.torsion.clone()),
            (1, vec![(5, 1), (1, 1)])
        );
        let d3 = decompose(&l, 3).unwrap();
        assert_eq!((d3.free_rank, d3.torsion.clone()), (1, vec![(1, 1)]));
        let id = build_ladder(&IntMatrix::identity(3), &z(5), 3).unwrap();
        let di = decompose(&id, 3).unwrap();
        assert_eq!((di.free_rank, di.torsion.len()), (1, 0));
    }

    #[test]
    fn factors() {
        let l = example_ladder(2, 7);
        let f = invariant_factors(&decompose(&l, 7).unwrap(), &z(2));
        assert_eq!(f, vec![(z(1), 1), (z(2), 1), (z(32), 1)]);
        assert_eq!(expand_invariant_factors(&f), vec![z(1), z(2), z(32)]);
        assert_eq!(snf_invariant_factors(&l, 7).unwrap(), f);

        let l3 = example_ladder(3, 2);
        let f3 = invariant_factors(&decompose(&l3, 2).unwrap(), &z(3));
        assert_eq!(expand_invariant_factors(&f3), vec![z(1), z(1), z(3)]);
        assert_eq!(snf_invariant_factors(&l3, 2).unwrap(), f3);

        let id = build_ladder(&IntMatrix::identity(2), &z(2), 2).unwrap();
        assert_eq!(
            invariant_factors(&decompose(&id, 2).unwrap(), &z(2)),
            vec![(z(1), 1)]
        );
    }

    #[test]
    fn freeness() {
        let l = example_ladder(2, 3);
        assert!(is_free(&l, 2).unwrap());
        assert!(!is_free(&l, 3).unwrap());
        let id = build_ladder(&IntMatrix::identity(2), &z(7), 3).unwrap();
        assert!(is_free(&id, 3).unwrap());
    }
}
