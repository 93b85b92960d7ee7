use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matz::IntMatrix;
use crate::nullideal::ladder::{build_ladder, index_set, MinimalPolyLadder};
use crate::ringcore::{crt_pair, factorize, pow_usize, IntPolynomial, PrimePower};

/// `cofactor * poly`, one generator of a null ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub cofactor: BigInt,
    pub poly: IntPolynomial,
}

impl Generator {
    pub fn element(&self) -> IntPolynomial {
        self.poly.scale(&self.cofactor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Modulus {
    PrimePower(PrimePower),
    Composite(BigInt),
}

impl Modulus {
    pub fn value(&self) -> BigInt {
        match self {
            Modulus::PrimePower(pp) => pp.modulus(),
            Modulus::Composite(d) => d.clone(),
        }
    }
}

/// Which `(p^j)`-minimal polynomials enter a prime-power presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeneratorSet {
    /// `p^(l-i) nu_i` for `i` in the index set.
    #[default]
    IndexSet,
    /// `p^(l-j) nu_j` for every `0 <= j <= l`.
    Full,
}

/// Generators `cofactor * poly` of `N_(modulus)(A)` as an ideal of `Z[X]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullIdealPresentation {
    pub modulus: Modulus,
    pub generators: Vec<Generator>,
}

impl NullIdealPresentation {
    pub fn modulus_value(&self) -> BigInt {
        self.modulus.value()
    }

    /// Whether every generator annihilates `A` modulo the modulus.
    pub fn annihilates(&self, a: &IntMatrix) -> bool {
        let m = self.modulus_value();
        self.generators
            .iter()
            .all(|g| a.annihilated_mod(&g.element(), &m))
    }
}

impl MinimalPolyLadder {
    /// Presentation of `N_(p^l)(A)` from the stored ladder, ordered by descending index.
    pub fn presentation(&self, ell: u32, set: GeneratorSet) -> Result<NullIdealPresentation> {
        let indices: Vec<u32> = match set {
            GeneratorSet::IndexSet => index_set(self, ell)?.elements().to_vec(),
            GeneratorSet::Full => {
                self.require(ell)?;
                (0..=ell).collect()
            }
        };
        let generators = indices
            .into_iter()
            .rev()
            .map(|i| Generator {
                cofactor: pow_usize(self.p(), ell - i),
                poly: self.nu(i).clone(),
            })
            .collect();
        Ok(NullIdealPresentation {
            modulus: Modulus::PrimePower(PrimePower::new(self.p().clone(), ell)?),
            generators,
        })
    }
}

/// `N_(p^l)(A) = sum over i in I_A^l of p^(l-i) nu_i Z[X]`, for `l >= 1`.
pub fn null_ideal_generators(a: &IntMatrix, pp: &PrimePower) -> Result<NullIdealPresentation> {
    null_ideal_generators_with(a, pp, GeneratorSet::IndexSet)
}

pub fn null_ideal_generators_with(
    a: &IntMatrix,
    pp: &PrimePower,
    set: GeneratorSet,
) -> Result<NullIdealPresentation> {
    if pp.ell() == 0 {
        return Err(Error::InvalidArgument(
            "null ideal generators need l >= 1".into(),
        ));
    }
    build_ladder(a, pp.p(), pp.ell())?.presentation(pp.ell(), set)
}

fn composite_parts(d: &BigInt) -> Result<(BigInt, Vec<(BigInt, u32)>)> {
    let d = d.abs();
    if d < BigInt::from(2) {
        return Err(Error::InvalidModulus(d));
    }
    let factors = factorize(&d)?;
    Ok((d, factors))
}

fn modulus_for(d: &BigInt, factors: &[(BigInt, u32)]) -> Result<Modulus> {
    Ok(match factors {
        [(p, e)] => Modulus::PrimePower(PrimePower::new(p.clone(), *e)?),
        _ => Modulus::Composite(d.clone()),
    })
}

/// Generators of `N_(d)(A)` for composite `d`: `(d / p_i^j) nu_(p_i, j)` for every
/// prime power `p_i^(l_i) || d` and every `j` in the `l_i`-th index set.
///
/// Repeated generators (the constant `d` shows up once per prime) are listed once.
pub fn composite_null_ideal_generators(a: &IntMatrix, d: &BigInt) -> Result<NullIdealPresentation> {
    let (d, factors) = composite_parts(d)?;
    let mut generators: Vec<Generator> = Vec::new();
    for (p, ell) in &factors {
        let ladder = build_ladder(a, p, *ell)?;
        for &j in index_set(&ladder, *ell)?.elements().iter().rev() {
            let g = Generator {
                cofactor: &d / pow_usize(p, j),
                poly: ladder.nu(j).clone(),
            };
            if !generators.contains(&g) {
                generators.push(g);
            }
        }
    }
    Ok(NullIdealPresentation {
        modulus: modulus_for(&d, &factors)?,
        generators,
    })
}

/// Generators of `N_(d)(A)` with one generator per degree: the per-prime
/// minimal polynomials at each degree are glued by the Chinese remainder theorem.
///
/// For degree `k` and each prime, take the largest `j_i <= l_i` with
/// `deg nu_(p_i, j_i) <= k`; the generator is `prod p_i^(l_i - j_i)` times the
/// monic degree-`k` polynomial congruent to `X^(k - deg) nu_(p_i, j_i)` modulo
/// every `p_i^(j_i)`.
pub fn combined_null_ideal_generators(a: &IntMatrix, d: &BigInt) -> Result<NullIdealPresentation> {
    let (d, factors) = composite_parts(d)?;
    let ladders: Vec<(MinimalPolyLadder, u32)> = factors
        .iter()
        .map(|(p, ell)| build_ladder(a, p, *ell).map(|l| (l, *ell)))
        .collect::<Result<_>>()?;

    let mut degrees = BTreeSet::new();
    for (ladder, ell) in &ladders {
        for &j in index_set(ladder, *ell)?.elements() {
            degrees.insert(ladder.degree(j));
        }
    }

    let mut generators = Vec::new();
    for &k in degrees.iter().rev() {
        let mut cofactor = BigInt::one();
        let mut modulus = BigInt::one();
        let mut low = alloc::vec![BigInt::zero(); k];
        for (ladder, ell) in &ladders {
            let j = (0..=*ell)
                .rev()
                .find(|&j| ladder.degree(j) <= k)
                .expect("deg nu_0 = 0");
            cofactor *= pow_usize(ladder.p(), ell - j);
            if j == 0 {
                continue;
            }
            let mj = ladder.modulus(j);
            let lifted = ladder.nu(j).shift(k - ladder.degree(j));
            for (i, c) in low.iter_mut().enumerate() {
                *c = crt_pair(c, &modulus, &lifted.coeff(i).mod_floor(&mj), &mj)
                    .expect("distinct primes are coprime");
            }
            modulus *= mj;
        }
        low.push(BigInt::one());
        generators.push(Generator {
            cofactor,
            poly: IntPolynomial::new(low),
        });
    }
    Ok(NullIdealPresentation {
        modulus: modulus_for(&d, &factors)?,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nullideal::minimal_polynomial;
    use alloc::vec;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn example() -> IntMatrix {
        IntMatrix::diagonal_i64(&[4, 16, 32])
    }

    #[test]
    fn three_adic_presentation() {
        let a = example();
        let mu = minimal_polynomial(&a);
        for ell in 2..5u32 {
            let pres = null_ideal_generators(&a, &PrimePower::new(z(3), ell).unwrap()).unwrap();
            let m = pow_usize(&z(3), ell);
            assert_eq!(pres.generators.len(), 3);
            assert_eq!(pres.generators[0].cofactor, z(1));
            assert_eq!(pres.generators[0].poly, mu.canonical_monic(&m));
            assert_eq!(pres.generators[1].cofactor, pow_usize(&z(3), ell - 1));
            let f = IntPolynomial::from_roots(&[z(4), z(32)]);
            assert_eq!(
                pres.generators[1].poly.reduce_mod(&z(3)).unwrap(),
                f.reduce_mod(&z(3)).unwrap()
            );
            assert_eq!(
                pres.generators[2],
                Generator {
                    cofactor: m,
                    poly: IntPolynomial::one()
                }
            );
            assert!(pres.annihilates(&a));
        }
    }

    #[test]
    fn identity_presentation() {
        let pres =
            null_ideal_generators(&IntMatrix::identity(2), &PrimePower::new(z(5), 2).unwrap())
                .unwrap();
        assert_eq!(
            pres.generators,
            vec![
                Generator {
                    cofactor: z(1),
                    poly: IntPolynomial::from_i64s(&[24, 1])
                },
                Generator {
                    cofactor: z(25),
                    poly: IntPolynomial::one()
                },
            ]
        );
    }

    #[test]
    fn two_adic_presentation_at_level_seven() {
        let pres = null_ideal_generators(&example(), &PrimePower::new(z(2), 7).unwrap()).unwrap();
        let cof: Vec<BigInt> = pres.generators.iter().map(|g| g.cofactor.clone()).collect();
        let deg: Vec<usize> = pres
            .generators
            .iter()
            .map(|g| g.poly.degree().unwrap())
            .collect();
        assert_eq!(cof, vec![z(1), z(2), z(32), z(128)]);
        assert_eq!(deg, vec![3, 2, 1, 0]);
        let full = null_ideal_generators_with(
            &example(),
            &PrimePower::new(z(2), 7).unwrap(),
            GeneratorSet::Full,
        )
        .unwrap();
        assert_eq!(full.generators.len(), 8);
        assert!(full.annihilates(&example()));
    }

    #[test]
    fn level_zero_rejected() {
        assert!(null_ideal_generators(&example(), &PrimePower::new(z(2), 0).unwrap()).is_err());
    }

    #[test]
    fn composite_single_prime_matches_prime_power() {
        let a = example();
        let direct = null_ideal_generators(&a, &PrimePower::new(z(2), 5).unwrap()).unwrap();
        assert_eq!(composite_null_ideal_generators(&a, &z(32)).unwrap(), direct);
        assert_eq!(combined_null_ideal_generators(&a, &z(32)).unwrap(), direct);
    }

    #[test]
    fn composite_six() {
        let a = example();
        let pres = composite_null_ideal_generators(&a, &z(6)).unwrap();
        assert_eq!(pres.modulus, Modulus::Composite(z(6)));
        assert!(pres.annihilates(&a));
        // p = 2, l = 1: index set {0, 1} scaled by 3; p = 3, l = 1: {0, 1} scaled by 2.
        let expected = vec![
            Generator {
                cofactor: z(3),
                poly: IntPolynomial::from_i64s(&[0, 1]),
            },
            Generator {
                cofactor: z(6),
                poly: IntPolynomial::one(),
            },
            Generator {
                cofactor: z(2),
                poly: IntPolynomial::from_i64s(&[2, 0, 1]),
            },
        ];
        assert_eq!(pres.generators, expected);
    }

    #[test]
    fn identity_mod_twelve_combines_to_x_minus_one() {
        let id = IntMatrix::identity(3);
        let pres = combined_null_ideal_generators(&id, &z(12)).unwrap();
        assert_eq!(
            pres.generators,
            vec![
                Generator {
                    cofactor: z(1),
                    poly: IntPolynomial::from_i64s(&[11, 1])
                },
                Generator {
                    cofactor: z(12),
                    poly: IntPolynomial::one()
                },
            ]
        );
        let raw = composite_null_ideal_generators(&id, &z(12)).unwrap();
        assert!(raw.annihilates(&id));
        assert_eq!(raw.generators.len(), 3);
    }

    #[test]
    fn composite_rejects_units_and_zero() {
        assert!(composite_null_ideal_generators(&example(), &z(1)).is_err());
        assert!(composite_null_ideal_generators(&example(), &z(0)).is_err());
        assert!(composite_null_ideal_generators(&example(), &z(-6)).is_ok());
    }
}
