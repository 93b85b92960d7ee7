//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "nullideal",
    version,
    about = "Null ideals of integer matrices modulo prime powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit compact JSON on standard output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,

    /// Emit a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct MatrixSource {
    /// Matrix JSON file (`-` reads standard input).
    #[arg(long, value_name = "PATH")]
    pub matrix: Option<PathBuf>,

    /// Matrix JSON given inline.
    #[arg(long, value_name = "JSON")]
    pub matrix_json: Option<String>,
}

#[derive(Debug, Args)]
pub struct PrimePowerArgs {
    /// Prime `p` (decimal).
    #[arg(short = 'p', long = "prime", value_name = "PRIME")]
    pub p: String,

    /// Exponent `l`.
    #[arg(short = 'l', long = "ell", value_name = "ELL")]
    pub ell: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal polynomial over Z, or the canonical (p^l)-minimal polynomial.
    Minpoly {
        #[command(flatten)]
        source: MatrixSource,
        #[arg(short = 'p', long = "prime", value_name = "PRIME", requires = "ell")]
        p: Option<String>,
        #[arg(short = 'l', long = "ell", value_name = "ELL", requires = "p")]
        ell: Option<u32>,
    },

    /// Canonical (p^j)-minimal polynomials and index sets for j = 0..=l.
    Ladder {
        #[command(flatten)]
        source: MatrixSource,
        #[command(flatten)]
        pp: PrimePowerArgs,
    },

    /// Generators of the null ideal modulo p^l or a composite d.
    Nullideal {
        #[command(flatten)]
        source: MatrixSource,
        #[arg(
            short = 'p',
            long = "prime",
            value_name = "PRIME",
            requires = "ell",
            conflicts_with = "d"
        )]
        p: Option<String>,
        #[arg(short = 'l', long = "ell", value_name = "ELL", requires = "p")]
        ell: Option<u32>,
        /// Composite modulus.
        #[arg(short = 'd', value_name = "COMPOSITE", required_unless_present = "p")]
        d: Option<String>,
        /// Use every level 0..=l instead of the index set.
        #[arg(long, conflicts_with = "d")]
        full: bool,
        /// For composite d: one generator per degree, glued by CRT.
        #[arg(long, requires = "d", conflicts_with = "p")]
        combined: bool,
        /// Check the presentation against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
        /// Oracle candidate ceiling (overrides NULLIDEAL_ORACLE_BUDGET).
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
    },

    /// Cyclic decomposition of (Z/p^l)[A] and its invariant factors.
    Decompose {
        #[command(flatten)]
        source: MatrixSource,
        #[command(flatten)]
        pp: PrimePowerArgs,
        /// Cross-check the invariant factors against a Smith normal form.
        #[arg(long)]
        oracle: bool,
    },

    /// Presentation of the integer-valued polynomials on A.
    Intval {
        #[command(flatten)]
        source: MatrixSource,
        /// Membership query `{"num": [...], "den": "..."}`.
        #[arg(long, value_name = "JSON")]
        query: Option<String>,
    },

    /// Generators of the image ring Int(A)(A).
    Image {
        #[command(flatten)]
        source: MatrixSource,
    },

    /// Check the null-ideal presentation and counts by exhaustive enumeration.
    Verify {
        #[command(flatten)]
        source: MatrixSource,
        #[command(flatten)]
        pp: PrimePowerArgs,
        /// Oracle candidate ceiling (overrides NULLIDEAL_ORACLE_BUDGET).
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
        /// Verify this presentation file instead of the computed one.
        #[arg(long, value_name = "PATH")]
        presentation: Option<PathBuf>,
    },

    /// Compare computed results with the published example values.
    PaperFixtures {
        /// Directory of fixture files (defaults to the built-in set).
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn matrix_source_is_required() {
        assert!(Cli::try_parse_from(["nullideal", "image"]).is_err());
        assert!(Cli::try_parse_from([
            "nullideal",
            "image",
            "--matrix",
            "a",
            "--matrix-json",
            "{}"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["nullideal", "image", "--matrix", "a"]).is_ok());
    }

    #[test]
    fn nullideal_modulus_forms() {
        let ok = |v: &[&str]| Cli::try_parse_from(v).is_ok();
        assert!(ok(&[
            "nullideal",
            "nullideal",
            "--matrix",
            "a",
            "-p",
            "2",
            "-l",
            "3"
        ]));
        assert!(ok(&[
            "nullideal",
            "nullideal",
            "--matrix",
            "a",
            "-d",
            "12",
            "--combined"
        ]));
        assert!(!ok(&["nullideal", "nullideal", "--matrix", "a"]));
        assert!(!ok(&["nullideal", "nullideal", "--matrix", "a", "-p", "2"]));
        assert!(!ok(&[
            "nullideal",
            "nullideal",
            "--matrix",
            "a",
            "-p",
            "2",
            "-l",
            "3",
            "-d",
            "6"
        ]));
        assert!(!ok(&[
            "nullideal",
            "nullideal",
            "--matrix",
            "a",
            "-p",
            "2",
            "-l",
            "3",
            "--combined"
        ]));
    }
}
