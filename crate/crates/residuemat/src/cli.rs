//! Command-line front end. Parsing and formatting only; all arithmetic lives
//! in `residuemat-core`.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use residuemat_core::field::{is_prime, Field, FieldError, DEFAULT_MAX_Q};
use residuemat_core::matrix::{
    classify, criteria_equiv_bruteforce, CycMatrix, DEFAULT_ENUMERATION_BOUND,
};
use residuemat_core::poly::{parse_poly, Poly};
use residuemat_core::realize::{realize, RealizeOptions};
use residuemat_core::symbol::{Irreducible, SymbolContext};
use residuemat_core::verify::{check_homomorphism, check_reciprocity};

use crate::json::{ClassificationJson, RealizationJson};
use crate::matrix_text::{format_matrix, parse_matrix};

/// Environment variable overriding the largest accepted field size.
pub const MAX_Q_ENV: &str = "RESIDUEMAT_MAX_Q";

#[derive(Debug, Parser)]
#[command(
    name = "residuemat",
    version,
    about = "Power residue matrices over F_q[t]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Prime field size; use --p/--m for prime powers
    #[arg(long, conflicts_with_all = ["p", "m"])]
    pub q: Option<u64>,
    /// Characteristic
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree
    #[arg(long, requires = "p", default_value_t = 1)]
    pub m: u32,
    /// Order of the roots of unity, dividing q - 1
    #[arg(long)]
    pub d: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate (a/P)_d
    Symbol {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long = "P", allow_hyphen_values = true)]
        modulus: String,
    },
    /// Print the residue matrix of distinct monic irreducibles
    Matrix {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Decide whether a matrix file is realizable
    Classify {
        #[command(flatten)]
        field: FieldArgs,
        /// Matrix file, or `-` for stdin
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Construct irreducibles with a prescribed residue matrix
    Realize {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        max_degree: usize,
        /// Scan residues and candidates in order instead of sampling
        #[arg(long)]
        deterministic: bool,
    },
    /// Check reciprocity and the homomorphism property exhaustively
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        /// Modulus degree bound for the homomorphism check
        #[arg(long, default_value_t = 2)]
        hom_max_deg: usize,
    },
    /// Compare both realizability tests over all n x n matrices
    Equiv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        bound: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// Valid invocation whose input is rejected by the mathematics; exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn domain(e: impl ToString) -> CliError {
    CliError::Domain(e.to_string())
}

/// What a successful command prints, and whether its checks passed.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            success: true,
        }
    }
}

fn max_q() -> Result<u64, CliError> {
    match std::env::var(MAX_Q_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!("{MAX_Q_ENV} must be a positive integer, got `{v}`"))
        }),
        Err(_) => Ok(DEFAULT_MAX_Q),
    }
}

fn context(args: &FieldArgs) -> Result<SymbolContext, CliError> {
    let (p, m) = match (args.q, args.p) {
        (Some(q), None) => {
            if !is_prime(q) {
                return Err(CliError::Usage(format!(
                    "--q {q} is not prime; give a prime power as --p P --m M"
                )));
            }
            (q, 1)
        }
        (None, Some(p)) => (p, args.m),
        _ => return Err(CliError::Usage("specify either --q or --p".into())),
    };
    let field = Field::with_bound(p, m, max_q()?).map_err(|e| match e {
        FieldError::NotPrime(_) | FieldError::ZeroDegree => CliError::Usage(e.to_string()),
        _ => domain(e),
    })?;
    SymbolContext::new(Arc::new(field), args.d).map_err(domain)
}

fn read_matrix(path: &Path) -> Result<CycMatrix, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?
    };
    parse_matrix(&text).map_err(|e| domain(format!("{}: {e}", path.display())))
}

fn parse(text: &str, ctx: &SymbolContext) -> Result<Poly, CliError> {
    parse_poly(text, ctx.field()).map_err(|e| domain(format!("`{text}`: {e}")))
}

fn check_order(ctx: &SymbolContext, m: &CycMatrix) -> Result<(), CliError> {
    if m.d() != ctx.d() {
        return Err(domain(format!(
            "matrix has d = {} but --d is {}",
            m.d(),
            ctx.d()
        )));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Symbol { field, a, modulus } => {
            let ctx = context(&field)?;
            let a = parse(&a, &ctx)?;
            let p = parse(&modulus, &ctx)?;
            let k = ctx.symbol_checked(&a, &p).map_err(domain)?;
            Ok(Outcome::ok(format!(
                "index={} zeta_power={}/{}\n",
                k.k(),
                k.k(),
                k.d()
            )))
        }
        Command::Matrix { field, polys } => {
            let ctx = context(&field)?;
            let polys = polys
                .iter()
                .map(|s| {
                    Irreducible::new(parse(s, &ctx)?).map_err(|e| domain(format!("`{s}`: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = ctx.residue_matrix(&polys).map_err(domain)?;
            Ok(Outcome::ok(format_matrix(&m)))
        }
        Command::Classify { field, matrix } => {
            let ctx = context(&field)?;
            let m = read_matrix(&matrix)?;
            check_order(&ctx, &m)?;
            let c = classify(&m, ctx.q()).map_err(domain)?;
            Ok(Outcome::ok(to_json(&ClassificationJson::from(&c))))
        }
        Command::Realize {
            field,
            matrix,
            seed,
            max_degree,
            deterministic,
        } => {
            let ctx = context(&field)?;
            let m = read_matrix(&matrix)?;
            check_order(&ctx, &m)?;
            let opts = RealizeOptions {
                seed,
                max_degree,
                deterministic,
                ..RealizeOptions::default()
            };
            let r = realize(&ctx, &m, &opts).map_err(domain)?;
            Ok(Outcome::ok(to_json(&RealizationJson::new(
                ctx.q(),
                ctx.d(),
                &r,
                &opts,
            ))))
        }
        Command::Verify {
            field,
            max_deg,
            hom_max_deg,
        } => {
            let ctx = context(&field)?;
            let rec = check_reciprocity(&ctx, max_deg).map_err(domain)?;
            let hom = check_homomorphism(&ctx, hom_max_deg.min(max_deg)).map_err(domain)?;
            let mut out = format!(
                "reciprocity law={} irreducibles={} pairs={}, failures={}\n",
                ctx.law().name(),
                rec.irreducibles,
                rec.pairs,
                rec.failures
            );
            if let Some((p, q)) = &rec.first_failure {
                out.push_str(&format!("first failure: P={p} Q={q}\n"));
            }
            out.push_str(&format!(
                "homomorphism moduli={} products={}, failures={}\n",
                hom.moduli,
                hom.products,
                hom.failures()
            ));
            Ok(Outcome {
                stdout: out,
                success: rec.failures == 0 && hom.failures() == 0,
            })
        }
        Command::Equiv { n, d, bound } => {
            let r = criteria_equiv_bruteforce(n, d, bound).map_err(domain)?;
            let mut out = format!(
                "n={} d={} scanned={} block_form={} mmbar={} mismatches={}\n",
                r.n, r.d, r.scanned, r.block_form, r.mmbar, r.mismatches
            );
            if let Some(m) = &r.first_mismatch {
                out.push_str("first mismatch:\n");
                out.push_str(&format_matrix(m));
            }
            Ok(Outcome {
                stdout: out,
                success: r.agrees(),
            })
        }
    }
}
