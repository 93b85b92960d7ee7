//! JSON documents read and written by the command line.
//!
//! Every integer that can grow without bound is a decimal string; small
//! counters (`n`, `ell`, exponents) are plain numbers. Polynomial
//! coefficients are listed in ascending degree.

use std::str::FromStr;

use nullideal_core::intval::{CriticalPrime, FractionalGenerator, ImageRing};
use nullideal_core::nullideal::Modulus;
use nullideal_core::{
    Generator, IntMatrix, IntPolynomial, IntValPresentation, MinimalPolyLadder,
    ModuleDecomposition, NullIdealPresentation, RationalPolynomial,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub fn int_to_json(v: &BigInt) -> String {
    v.to_string()
}

pub fn int_from_json(s: &str) -> Result<BigInt, CliError> {
    BigInt::from_str(s.trim()).map_err(|_| CliError::Input(format!("not a decimal integer: {s:?}")))
}

pub fn poly_to_json(f: &IntPolynomial) -> Vec<String> {
    f.coeffs().iter().map(int_to_json).collect()
}

pub fn poly_from_json(c: &[String]) -> Result<IntPolynomial, CliError> {
    Ok(IntPolynomial::new(
        c.iter()
            .map(|s| int_from_json(s))
            .collect::<Result<_, _>>()?,
    ))
}

/// `{"n": 3, "entries": [["4", "0", "0"], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_matrix(a: &IntMatrix) -> Self {
        let m = a.as_matrix();
        MatrixJson {
            n: a.dim(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(int_to_json).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<IntMatrix, CliError> {
        if self.n == 0 {
            return Err(CliError::Input(
                "matrix dimension must be at least 1".into(),
            ));
        }
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(CliError::Input(format!(
                "entries must form a {0} x {0} array",
                self.n
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| int_from_json(s)).collect())
            .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
        IntMatrix::from_rows(rows).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn parse(text: &str) -> Result<IntMatrix, CliError> {
        let doc: MatrixJson = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed matrix JSON: {e}")))?;
        doc.to_matrix()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub cofactor: String,
    pub poly: Vec<String>,
}

/// `{"modulus": "128", "generators": [{"cofactor": "1", "poly": [...]}, ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub modulus: String,
    pub generators: Vec<GeneratorJson>,
}

impl PresentationJson {
    pub fn from_presentation(p: &NullIdealPresentation) -> Self {
        PresentationJson {
            modulus: int_to_json(&p.modulus_value()),
            generators: p
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    cofactor: int_to_json(&g.cofactor),
                    poly: poly_to_json(&g.poly),
                })
                .collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<NullIdealPresentation, CliError> {
        let generators = self
            .generators
            .iter()
            .map(|g| {
                Ok(Generator {
                    cofactor: int_from_json(&g.cofactor)?,
                    poly: poly_from_json(&g.poly)?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(NullIdealPresentation {
            modulus: Modulus::Composite(int_from_json(&self.modulus)?),
            generators,
        })
    }

    /// Re-validates a parsed presentation: every generator annihilates `A`
    /// modulo the stated modulus.
    pub fn validate(&self, a: &IntMatrix) -> Result<bool, CliError> {
        let pres = self.to_presentation()?;
        if pres.modulus_value() < BigInt::from(2) {
            return Err(CliError::Input(format!("modulus {} below 2", self.modulus)));
        }
        Ok(pres.annihilates(a))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinpolyJson {
    pub degree: usize,
    pub mu: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PjMinpolyJson {
    pub p: String,
    pub ell: u32,
    pub degree: usize,
    pub nu: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderLevelJson {
    pub j: u32,
    pub degree: usize,
    pub nu: Vec<String>,
    pub index_set: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderJson {
    pub p: String,
    pub height: u32,
    pub mu: Vec<String>,
    pub levels: Vec<LadderLevelJson>,
}

impl LadderJson {
    pub fn from_ladder(ladder: &MinimalPolyLadder) -> Result<Self, CliError> {
        let levels = (0..=ladder.height())
            .map(|j| {
                Ok(LadderLevelJson {
                    j,
                    degree: ladder.degree(j),
                    nu: poly_to_json(ladder.nu(j)),
                    index_set: nullideal_core::index_set(ladder, j)?.elements().to_vec(),
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(LadderJson {
            p: int_to_json(ladder.p()),
            height: ladder.height(),
            mu: poly_to_json(ladder.mu()),
            levels,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionJson {
    pub exponent: u32,
    pub multiplicity: usize,
}

/// `{"ell": 7, "free_rank": 1, "torsion": [{"exponent": 5, "multiplicity": 1}, ...]}`
/// plus the prime and the expanded invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub p: String,
    pub ell: u32,
    pub free_rank: usize,
    pub torsion: Vec<TorsionJson>,
    pub invariant_factors: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub snf_invariant_factors: Option<Vec<String>>,
}

impl DecompositionJson {
    pub fn new(p: &BigInt, dec: &ModuleDecomposition, factors: &[BigInt]) -> Self {
        DecompositionJson {
            p: int_to_json(p),
            ell: dec.ell,
            free_rank: dec.free_rank,
            torsion: dec
                .torsion
                .iter()
                .map(|&(exponent, multiplicity)| TorsionJson {
                    exponent,
                    multiplicity,
                })
                .collect(),
            invariant_factors: factors.iter().map(int_to_json).collect(),
            snf_invariant_factors: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionalGeneratorJson {
    pub j: u32,
    pub nu: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalPrimeJson {
    pub p: String,
    pub m: u32,
    pub generators: Vec<FractionalGeneratorJson>,
}

/// `{"mu": [...], "critical": [{"p": "2", "m": 6, "generators": [{"j": 2, "nu": [...]}]}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntValJson {
    pub mu: Vec<String>,
    pub critical: Vec<CriticalPrimeJson>,
}

impl IntValJson {
    pub fn from_presentation(p: &IntValPresentation) -> Self {
        IntValJson {
            mu: poly_to_json(&p.mu),
            critical: p
                .critical
                .iter()
                .map(|c| CriticalPrimeJson {
                    p: int_to_json(&c.p),
                    m: c.m,
                    generators: c
                        .generators
                        .iter()
                        .map(|g| FractionalGeneratorJson {
                            j: g.j,
                            nu: poly_to_json(&g.nu),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<IntValPresentation, CliError> {
        let critical = self
            .critical
            .iter()
            .map(|c| {
                Ok(CriticalPrime {
                    p: int_from_json(&c.p)?,
                    m: c.m,
                    generators: c
                        .generators
                        .iter()
                        .map(|g| {
                            Ok(FractionalGenerator {
                                j: g.j,
                                nu: poly_from_json(&g.nu)?,
                            })
                        })
                        .collect::<Result<_, CliError>>()?,
                })
            })
            .collect::<Result<_, CliError>>()?;
        Ok(IntValPresentation {
            mu: poly_from_json(&self.mu)?,
            critical,
        })
    }
}

/// Membership query `{"num": [...], "den": "4"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalJson {
    pub num: Vec<String>,
    pub den: String,
}

impl RationalJson {
    pub fn parse(text: &str) -> Result<RationalPolynomial, CliError> {
        let doc: RationalJson = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed rational polynomial JSON: {e}")))?;
        let den = int_from_json(&doc.den)?;
        if den < BigInt::from(1) {
            return Err(CliError::Input("denominator must be at least 1".into()));
        }
        RationalPolynomial::new(poly_from_json(&doc.num)?, den)
            .map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageGeneratorJson {
    pub p: String,
    pub j: u32,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageJson {
    pub base: MatrixJson,
    pub generators: Vec<ImageGeneratorJson>,
}

impl ImageJson {
    pub fn from_ring(ring: &ImageRing) -> Self {
        ImageJson {
            base: MatrixJson::from_matrix(&ring.base),
            generators: ring
                .generators
                .iter()
                .map(|g| ImageGeneratorJson {
                    p: int_to_json(&g.p),
                    j: g.j,
                    matrix: MatrixJson::from_matrix(&g.matrix),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let a = IntMatrix::from_i64_rows(&[&[1, -2], &[3, 4]]).unwrap();
        let doc = MatrixJson::from_matrix(&a);
        assert_eq!(doc.entries[0], vec!["1".to_string(), "-2".to_string()]);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(MatrixJson::parse(&text).unwrap(), a);
    }

    #[test]
    fn malformed_matrices() {
        for text in [
            r#"{"n": 2, "entries": [["1", "2"]]}"#,
            r#"{"n": 2, "entries": [["1", "2"], ["3"]]}"#,
            r#"{"n": 1, "entries": [[1]]}"#,
            r#"{"n": 1, "entries": [["x"]]}"#,
            r#"{"n": 0, "entries": []}"#,
            r#"[1, 2]"#,
        ] {
            assert!(
                matches!(MatrixJson::parse(text), Err(CliError::Input(_))),
                "{text}"
            );
        }
    }

    #[test]
    fn big_entries_survive() {
        let text = r#"{"n": 1, "entries": [["123456789012345678901234567890"]]}"#;
        let a = MatrixJson::parse(text).unwrap();
        assert_eq!(
            MatrixJson::from_matrix(&a).entries[0][0],
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn rational_queries() {
        let f = RationalJson::parse(r#"{"num": ["-4", "1"], "den": "4"}"#).unwrap();
        assert_eq!(f.denominator(), &BigInt::from(4));
        assert!(RationalJson::parse(r#"{"num": ["1"], "den": "0"}"#).is_err());
        assert!(RationalJson::parse(r#"{"num": ["1"]}"#).is_err());
    }
}
