//! Regression fixtures holding published example values, and the diff of
//! computed results against them.
//!
//! A published `(p^l)`-minimal polynomial is a lift, not the canonical form,
//! so it matches when it annihilates `A` modulo `p^l` with the computed
//! degree; a `canonical` entry, when present, must match exactly.

use std::fmt::Write as _;
use std::path::Path;

use nullideal_core::ringcore::pow_usize;
use nullideal_core::{
    build_ladder, image_ring_generators, index_set, intval_membership, intval_presentation,
    ImageGenerator, ImageRing, IntMatrix, IntPolynomial, RationalPolynomial,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::format::{int_from_json, poly_from_json, MatrixJson};
use crate::run::Outcome;

/// Supported fixture schema version.
pub const VERSION: u32 = 1;

const BUILTIN: &[(&str, &str)] = &[
    (
        "diag_4_16_32_p2_ladder.json",
        include_str!("../fixtures/diag_4_16_32_p2_ladder.json"),
    ),
    (
        "diag_4_16_32_p3_ladder.json",
        include_str!("../fixtures/diag_4_16_32_p3_ladder.json"),
    ),
    (
        "diag_4_16_32_p7_ladder.json",
        include_str!("../fixtures/diag_4_16_32_p7_ladder.json"),
    ),
    (
        "diag_4_16_32_intval.json",
        include_str!("../fixtures/diag_4_16_32_intval.json"),
    ),
];

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelFixture {
    pub ell: u32,
    pub degree: usize,
    pub index_set: Vec<u32>,
    /// The published polynomial as a product of `X - r`.
    pub nu_roots: Vec<String>,
    #[serde(default)]
    pub canonical: Option<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorFixture {
    pub j: u32,
    pub nu_roots: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalFixture {
    pub p: String,
    pub m: u32,
    pub generators: Vec<GeneratorFixture>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Fixture {
    Ladder {
        version: u32,
        name: String,
        matrix: MatrixJson,
        p: String,
        levels: Vec<LevelFixture>,
    },
    Intval {
        version: u32,
        name: String,
        matrix: MatrixJson,
        critical: Vec<CriticalFixture>,
        images: Vec<MatrixJson>,
    },
}

impl Fixture {
    pub fn parse(source: &str, text: &str) -> Result<Self, CliError> {
        let fx: Fixture = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("fixture {source}: {e}")))?;
        let version = match &fx {
            Fixture::Ladder { version, .. } | Fixture::Intval { version, .. } => *version,
        };
        if version != VERSION {
            return Err(CliError::Input(format!(
                "fixture {source}: version {version}, expected {VERSION}"
            )));
        }
        Ok(fx)
    }

    pub fn name(&self) -> &str {
        match self {
            Fixture::Ladder { name, .. } | Fixture::Intval { name, .. } => name,
        }
    }
}

/// One compared value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub item: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

impl Check {
    fn new(item: String, expected: impl ToString, computed: impl ToString, matches: bool) -> Self {
        Check {
            item,
            expected: expected.to_string(),
            computed: computed.to_string(),
            matches,
        }
    }

    fn equal<T: PartialEq + std::fmt::Debug>(item: String, expected: T, computed: T) -> Self {
        let matches = expected == computed;
        Check::new(
            item,
            format!("{expected:?}"),
            format!("{computed:?}"),
            matches,
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureReport {
    pub fixture: String,
    pub checks: Vec<Check>,
}

pub fn builtin() -> Result<Vec<Fixture>, CliError> {
    BUILTIN
        .iter()
        .map(|(name, text)| Fixture::parse(name, text))
        .collect()
}

/// Every `*.json` file in `dir`, by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>, CliError> {
    let read_err = |e: std::io::Error| CliError::Input(format!("reading {}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(read_err)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(read_err)?;
    paths.retain(|p| p.extension().is_some_and(|x| x == "json"));
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Input(format!("reading {}: {e}", p.display())))?;
            Fixture::parse(&p.display().to_string(), &text)
        })
        .collect()
}

fn roots(r: &[String]) -> Result<IntPolynomial, CliError> {
    Ok(IntPolynomial::from_roots(
        &r.iter()
            .map(|s| int_from_json(s))
            .collect::<Result<Vec<BigInt>, _>>()?,
    ))
}

fn roots_label(r: &[String]) -> String {
    r.iter().map(|v| format!("(X - {v})")).collect()
}

pub fn check(fx: &Fixture) -> Result<FixtureReport, CliError> {
    let checks = match fx {
        Fixture::Ladder {
            matrix, p, levels, ..
        } => check_ladder(&matrix.to_matrix()?, p, levels)?,
        Fixture::Intval {
            matrix,
            critical,
            images,
            ..
        } => check_intval(&matrix.to_matrix()?, critical, images)?,
    };
    Ok(FixtureReport {
        fixture: fx.name().to_string(),
        checks,
    })
}

fn check_ladder(a: &IntMatrix, p: &str, levels: &[LevelFixture]) -> Result<Vec<Check>, CliError> {
    let p = int_from_json(p)?;
    let top = levels.iter().map(|l| l.ell).max().unwrap_or(0);
    let ladder = build_ladder(a, &p, top)?;
    let mut out = Vec::new();
    for lv in levels {
        let l = lv.ell;
        out.push(Check::equal(
            format!("l = {l}: degree"),
            lv.degree,
            ladder.degree(l),
        ));
        let computed = index_set(&ladder, l)?.elements().to_vec();
        out.push(Check::equal(
            format!("l = {l}: index set"),
            lv.index_set.clone(),
            computed,
        ));
        let published = roots(&lv.nu_roots)?;
        let m = pow_usize(&p, l);
        let valid =
            published.degree() == Some(ladder.degree(l)) && a.annihilated_mod(&published, &m);
        out.push(Check::new(
            format!("l = {l}: (p^l)-minimal lift"),
            roots_label(&lv.nu_roots),
            ladder.nu(l),
            valid,
        ));
        if let Some(c) = &lv.canonical {
            let expected = poly_from_json(c)?;
            let matches = &expected == ladder.nu(l);
            out.push(Check::new(
                format!("l = {l}: canonical form"),
                expected,
                ladder.nu(l),
                matches,
            ));
        }
    }
    Ok(out)
}

fn check_intval(
    a: &IntMatrix,
    critical: &[CriticalFixture],
    images: &[MatrixJson],
) -> Result<Vec<Check>, CliError> {
    let pres = intval_presentation(a)?;
    let mut out = Vec::new();
    let expected: Vec<BigInt> = critical
        .iter()
        .map(|c| int_from_json(&c.p))
        .collect::<Result<_, _>>()?;
    let computed: Vec<BigInt> = pres.critical.iter().map(|c| c.p.clone()).collect();
    out.push(Check::equal("critical primes".into(), expected, computed));
    for cf in critical {
        let p = int_from_json(&cf.p)?;
        let Some(c) = pres.critical.iter().find(|c| c.p == p) else {
            continue;
        };
        out.push(Check::equal(
            format!("p = {p}: stabilization exponent"),
            cf.m,
            c.m,
        ));
        let js = |g: &[u32]| g.to_vec();
        out.push(Check::equal(
            format!("p = {p}: generator levels"),
            js(&cf.generators.iter().map(|g| g.j).collect::<Vec<_>>()),
            js(&c.generators.iter().map(|g| g.j).collect::<Vec<_>>()),
        ));
        for gf in &cf.generators {
            let Some(g) = c.generators.iter().find(|g| g.j == gf.j) else {
                continue;
            };
            let published = roots(&gf.nu_roots)?;
            let f = RationalPolynomial::new(published.clone(), pow_usize(&p, gf.j))?;
            let residue = published.reduce_mod(&p)? == g.nu.reduce_mod(&p)?;
            let matches = residue && intval_membership(&f, a) && pres.expresses(&f)?;
            out.push(Check::new(
                format!("p = {p}, j = {}: numerator", gf.j),
                roots_label(&gf.nu_roots),
                &g.nu,
                matches,
            ));
        }
    }
    let ring = image_ring_generators(a)?;
    let published = ImageRing {
        base: a.clone(),
        generators: images
            .iter()
            .map(|m| {
                Ok(ImageGenerator {
                    p: BigInt::from(0),
                    j: 0,
                    matrix: m.to_matrix()?,
                })
            })
            .collect::<Result<_, CliError>>()?,
    };
    let mut same = true;
    for g in &published.generators {
        same &= ring.contains(&g.matrix)?;
    }
    for g in &ring.generators {
        same &= published.contains(&g.matrix)?;
    }
    let label = |ms: Vec<&IntMatrix>| {
        ms.iter()
            .map(|m| match m.diagonal_entries() {
                Some(d) => format!(
                    "diag({})",
                    d.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                ),
                None => m.to_string().replace('\n', " "),
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push(Check::new(
        "image ring generators (same Z[A]-module)".into(),
        label(published.generators.iter().map(|g| &g.matrix).collect()),
        label(ring.generators.iter().map(|g| &g.matrix).collect()),
        same,
    ));
    Ok(out)
}

/// Checks every fixture; succeeds only when nothing differs.
pub fn run_all(fixtures: &[Fixture]) -> Result<Outcome, CliError> {
    let reports = fixtures.iter().map(check).collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    let mut diffs = 0usize;
    for r in &reports {
        let _ = writeln!(text, "{}", r.fixture);
        for c in &r.checks {
            if c.matches {
                let _ = writeln!(text, "  ok    {}", c.item);
            } else {
                diffs += 1;
                let _ = writeln!(text, "  DIFF  {}", c.item);
                let _ = writeln!(text, "        - published: {}", c.expected);
                let _ = writeln!(text, "        + computed:  {}", c.computed);
            }
        }
    }
    let _ = writeln!(text, "{diffs} difference(s)");
    let json = serde_json::json!({
        "differences": diffs,
        "fixtures": serde_json::to_value(&reports).expect("reports serialize"),
    });
    Ok(Outcome {
        json,
        text,
        success: diffs == 0,
    })
}
