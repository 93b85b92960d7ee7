//! Executes one parsed command line.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use nullideal_core::moddecomp::{expand_invariant_factors, snf_invariant_factors};
use nullideal_core::nullideal::combined_null_ideal_generators;
use nullideal_core::oracle::{check_counts, check_generation, check_ideal_generation};
use nullideal_core::{
    build_ladder, composite_null_ideal_generators, decompose, image_ring_generators,
    intval_membership, intval_presentation, invariant_factors, minimal_polynomial,
    pj_minimal_polynomial, EnumerationBudget, GeneratorSet, IntMatrix, IntPolynomial,
    NullIdealPresentation, PrimePower,
};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command, MatrixSource, PrimePowerArgs};
use crate::error::CliError;
use crate::fixtures;
use crate::format::{
    int_from_json, int_to_json, DecompositionJson, ImageJson, IntValJson, LadderJson, MatrixJson,
    MinpolyJson, PjMinpolyJson, PresentationJson, RationalJson,
};

/// Environment variable holding the default oracle candidate ceiling.
pub const BUDGET_ENV: &str = "NULLIDEAL_ORACLE_BUDGET";

/// The result of one command: a JSON document, its text rendering, and
/// whether every check it ran came out positive.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub success: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome {
            json,
            text,
            success: true,
        }
    }

    /// The document printed on standard output; keys are sorted.
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.text.clone()
        } else {
            let mut s = serde_json::to_string(&self.json).expect("values serialize");
            s.push('\n');
            s
        }
    }
}

/// Runs `cli`; `env_budget` is the value of [`BUDGET_ENV`], if set.
pub fn run(cli: &Cli, env_budget: Option<&str>) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Minpoly { source, p, ell } => minpoly(&load_matrix(source)?, p.as_deref(), *ell),
        Command::Ladder { source, pp } => ladder(&load_matrix(source)?, &prime_power(pp)?),
        Command::Nullideal {
            source,
            p,
            ell,
            d,
            full,
            combined,
            oracle,
            budget,
        } => {
            let a = load_matrix(source)?;
            let pres = match (p, ell, d) {
                (Some(p), Some(ell), None) => {
                    let pp = PrimePower::new(parse_int(p, "p")?, *ell)?;
                    let set = if *full {
                        GeneratorSet::Full
                    } else {
                        GeneratorSet::IndexSet
                    };
                    require_positive_ell(*ell)?;
                    build_ladder(&a, pp.p(), *ell)?.presentation(*ell, set)?
                }
                (None, None, Some(d)) => {
                    let d = parse_int(d, "d")?;
                    if *combined {
                        combined_null_ideal_generators(&a, &d)?
                    } else {
                        composite_null_ideal_generators(&a, &d)?
                    }
                }
                _ => return Err(CliError::Input("give either -p and -l, or -d".into())),
            };
            let budget = if *oracle {
                Some(resolve_budget(*budget, env_budget)?)
            } else {
                None
            };
            nullideal(&a, &pres, budget.as_ref())
        }
        Command::Decompose { source, pp, oracle } => {
            decompose_cmd(&load_matrix(source)?, &prime_power(pp)?, *oracle)
        }
        Command::Intval { source, query } => intval(&load_matrix(source)?, query.as_deref()),
        Command::Image { source } => image(&load_matrix(source)?),
        Command::Verify {
            source,
            pp,
            budget,
            presentation,
        } => {
            let a = load_matrix(source)?;
            let budget = resolve_budget(*budget, env_budget)?;
            let given = presentation.as_deref().map(read_presentation).transpose()?;
            verify(&a, &prime_power(pp)?, &budget, given)
        }
        Command::PaperFixtures { fixtures: dir } => {
            let set = match dir {
                Some(dir) => fixtures::load_dir(dir)?,
                None => fixtures::builtin()?,
            };
            fixtures::run_all(&set)
        }
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))
    }
}

pub fn load_matrix(source: &MatrixSource) -> Result<IntMatrix, CliError> {
    match (&source.matrix, &source.matrix_json) {
        (Some(path), None) => MatrixJson::parse(&read_source(path)?),
        (None, Some(text)) => MatrixJson::parse(text),
        _ => Err(CliError::Input(
            "give exactly one of --matrix and --matrix-json".into(),
        )),
    }
}

fn read_presentation(path: &Path) -> Result<PresentationJson, CliError> {
    serde_json::from_str(&read_source(path)?)
        .map_err(|e| CliError::Input(format!("malformed presentation JSON: {e}")))
}

fn parse_int(s: &str, what: &str) -> Result<BigInt, CliError> {
    int_from_json(s)
        .map_err(|_| CliError::Input(format!("{what} must be a decimal integer, got {s:?}")))
}

fn prime_power(pp: &PrimePowerArgs) -> Result<PrimePower, CliError> {
    Ok(PrimePower::new(parse_int(&pp.p, "p")?, pp.ell)?)
}

fn require_positive_ell(ell: u32) -> Result<(), CliError> {
    if ell == 0 {
        return Err(CliError::Input("l must be at least 1".into()));
    }
    Ok(())
}

/// `--budget` wins over the environment, which wins over the default.
pub fn resolve_budget(flag: Option<u64>, env: Option<&str>) -> Result<EnumerationBudget, CliError> {
    let base = EnumerationBudget::default();
    let ceiling = match (flag, env) {
        (Some(n), _) => n,
        (None, Some(s)) => s.trim().parse().map_err(|_| {
            CliError::Input(format!(
                "{BUDGET_ENV} must be a decimal candidate count, got {s:?}"
            ))
        })?,
        (None, None) => return Ok(base),
    };
    Ok(base.with_max_candidates(ceiling))
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("documents serialize")
}

fn minpoly(a: &IntMatrix, p: Option<&str>, ell: Option<u32>) -> Result<Outcome, CliError> {
    match (p, ell) {
        (Some(p), Some(ell)) => {
            let pp = PrimePower::new(parse_int(p, "p")?, ell)?;
            let nu = pj_minimal_polynomial(a, &pp);
            let degree = nu.degree().expect("monic");
            let text = format!("nu_({},{}) = {nu}\ndegree {degree}\n", pp.p(), ell);
            let doc = PjMinpolyJson {
                p: int_to_json(pp.p()),
                ell,
                degree,
                nu: crate::format::poly_to_json(&nu),
            };
            Ok(Outcome::ok(to_json(&doc), text))
        }
        _ => {
            let mu = minimal_polynomial(a);
            let degree = mu.degree().expect("monic");
            let text = format!("mu_A = {mu}\ndegree {degree}\n");
            let doc = MinpolyJson {
                degree,
                mu: crate::format::poly_to_json(&mu),
            };
            Ok(Outcome::ok(to_json(&doc), text))
        }
    }
}

fn ladder(a: &IntMatrix, pp: &PrimePower) -> Result<Outcome, CliError> {
    let ladder = build_ladder(a, pp.p(), pp.ell())?;
    let doc = LadderJson::from_ladder(&ladder)?;
    let mut text = format!("p = {}, mu_A = {}\n", pp.p(), ladder.mu());
    for level in &doc.levels {
        let _ = writeln!(
            text,
            "j = {:>3}  deg {:>3}  I = {:?}  nu = {}",
            level.j,
            level.degree,
            level.index_set,
            ladder.nu(level.j)
        );
    }
    Ok(Outcome::ok(to_json(&doc), text))
}

fn render_presentation(pres: &NullIdealPresentation) -> String {
    let mut text = format!("N_({})(A) generated by\n", pres.modulus_value());
    for g in &pres.generators {
        let _ = writeln!(text, "  {} * ({})", g.cofactor, g.poly);
    }
    text
}

fn nullideal(
    a: &IntMatrix,
    pres: &NullIdealPresentation,
    budget: Option<&EnumerationBudget>,
) -> Result<Outcome, CliError> {
    let mut json = to_json(&PresentationJson::from_presentation(pres));
    let mut text = render_presentation(pres);
    let mut success = true;
    if let Some(budget) = budget {
        let gens: Vec<IntPolynomial> = pres.generators.iter().map(|g| g.element()).collect();
        let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
        let generation = check_ideal_generation(a, &pres.modulus_value(), &gens, top + 1, budget)?;
        json["oracle"] = json!({ "generation": generation });
        let _ = writeln!(text, "oracle: generation {generation}");
        success = generation;
    }
    Ok(Outcome {
        json,
        text,
        success,
    })
}

fn decompose_cmd(a: &IntMatrix, pp: &PrimePower, oracle: bool) -> Result<Outcome, CliError> {
    require_positive_ell(pp.ell())?;
    let ladder = build_ladder(a, pp.p(), pp.ell())?;
    let dec = decompose(&ladder, pp.ell())?;
    let factors = invariant_factors(&dec, pp.p());
    let expanded = expand_invariant_factors(&factors);
    let mut doc = DecompositionJson::new(pp.p(), &dec, &expanded);

    let pe = pp.modulus();
    let mut summands: Vec<String> = Vec::new();
    if dec.free_rank > 0 {
        summands.push(format!("(Z/{pe})^{}", dec.free_rank));
    }
    for &(e, s) in &dec.torsion {
        summands.push(format!("(Z/{}^{e})^{s}", pp.p()));
    }
    let shown: Vec<String> = expanded.iter().map(ToString::to_string).collect();
    let mut text = format!(
        "(Z/{pe})[A] = {}\ninvariant factors: {}\n",
        summands.join(" + "),
        shown.join(", ")
    );
    let mut success = true;
    if oracle {
        let snf = expand_invariant_factors(&snf_invariant_factors(&ladder, pp.ell())?);
        success = snf == expanded;
        let shown: Vec<String> = snf.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            text,
            "Smith form cross-check: {} ({})",
            shown.join(", "),
            if success { "agrees" } else { "DIFFERS" }
        );
        doc.snf_invariant_factors = Some(snf.iter().map(int_to_json).collect());
    }
    Ok(Outcome {
        json: to_json(&doc),
        text,
        success,
    })
}

fn intval(a: &IntMatrix, query: Option<&str>) -> Result<Outcome, CliError> {
    let pres = intval_presentation(a)?;
    let mut json = to_json(&IntValJson::from_presentation(&pres));
    let mut text = String::from("Int(A) = mu_A Q[X] + Z[X]");
    for c in &pres.critical {
        for g in &c.generators {
            let _ = write!(text, " + ({}) / {}^{} Z[X]", g.nu, c.p, g.j);
        }
    }
    text.push('\n');
    let _ = writeln!(text, "mu_A = {}", pres.mu);
    for c in &pres.critical {
        let _ = writeln!(text, "critical prime {}: m = {}", c.p, c.m);
    }
    if let Some(q) = query {
        let f = RationalJson::parse(q)?;
        let member = intval_membership(&f, a);
        let expressed = pres.expresses(&f)?;
        if member != expressed {
            return Err(CliError::Internal(format!(
                "membership of {f} disagrees with the presentation"
            )));
        }
        json["query"] = json!({ "member": member });
        let _ = writeln!(text, "{f} in Int(A): {member}");
    }
    Ok(Outcome::ok(json, text))
}

fn image(a: &IntMatrix) -> Result<Outcome, CliError> {
    let ring = image_ring_generators(a)?;
    let mut text = String::from("Int(A)(A) = Z[A]");
    for g in &ring.generators {
        let _ = write!(text, " + Z[A] G_({},{})", g.p, g.j);
    }
    text.push('\n');
    for g in &ring.generators {
        let _ = writeln!(text, "G_({},{}) =\n{}", g.p, g.j, g.matrix);
    }
    Ok(Outcome::ok(to_json(&ImageJson::from_ring(&ring)), text))
}

fn verify(
    a: &IntMatrix,
    pp: &PrimePower,
    budget: &EnumerationBudget,
    given: Option<PresentationJson>,
) -> Result<Outcome, CliError> {
    require_positive_ell(pp.ell())?;
    let ladder = build_ladder(a, pp.p(), pp.ell())?;
    let pres = match given {
        Some(doc) => {
            let pres = doc.to_presentation()?;
            if pres.modulus_value() != pp.modulus() {
                return Err(CliError::Input(format!(
                    "presentation modulus {} differs from p^l = {}",
                    pres.modulus_value(),
                    pp.modulus()
                )));
            }
            pres
        }
        None => ladder.presentation(pp.ell(), GeneratorSet::IndexSet)?,
    };
    let generation = check_generation(a, pp, &pres, budget)?;
    let counts = check_counts(&ladder, pp.ell(), budget)?;
    let text = format!("generation: {generation}\ncounts: {counts}\n");
    Ok(Outcome {
        json: json!({ "generation": generation, "counts": counts }),
        text,
        success: generation && counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    const EX: &str = r#"{"n": 3, "entries": [["4","0","0"],["0","16","0"],["0","0","32"]]}"#;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let mut v = vec!["nullideal"];
        v.extend_from_slice(args);
        run(&Cli::try_parse_from(v).unwrap(), None)
    }

    #[test]
    fn budget_precedence() {
        let d = EnumerationBudget::default();
        assert_eq!(resolve_budget(None, None).unwrap(), d);
        assert_eq!(resolve_budget(None, Some("42")).unwrap().max_candidates, 42);
        assert_eq!(
            resolve_budget(Some(7), Some("42")).unwrap().max_candidates,
            7
        );
        assert!(matches!(
            resolve_budget(None, Some("lots")),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn nullideal_cofactors() {
        let out = run_args(&["nullideal", "--matrix-json", EX, "-p", "2", "-l", "7"]).unwrap();
        let cof: Vec<&str> = out.json["generators"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| g["cofactor"].as_str().unwrap())
            .collect();
        assert_eq!(cof, ["1", "2", "32", "128"]);
    }

    #[test]
    fn verify_example() {
        let out = run_args(&["verify", "--matrix-json", EX, "-p", "2", "-l", "3"]).unwrap();
        assert!(out.success);
        assert_eq!(out.render(false), "{\"counts\":true,\"generation\":true}\n");
    }

    #[test]
    fn refusals_and_input_errors() {
        let big = run_args(&["verify", "--matrix-json", EX, "-p", "2", "-l", "11"]);
        assert_eq!(big.unwrap_err().exit_code(), 3);
        let np = run_args(&["ladder", "--matrix-json", EX, "-p", "4", "-l", "2"]);
        assert_eq!(np.unwrap_err().exit_code(), 2);
        let zero = run_args(&["decompose", "--matrix-json", EX, "-p", "2", "-l", "0"]);
        assert_eq!(zero.unwrap_err().exit_code(), 2);
    }
}
