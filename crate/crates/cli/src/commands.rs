//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use metalie_core::verify::{
    verify_aut_l2, verify_corollary_f2, verify_inner_metabelian, verify_inner_nilpotent, verify_lemma_linear, verify_phi_l2c,
    Target, VerificationReport, PHI_RANDOM_TRIALS,
};
use metalie_core::{
    inner_eps, inner_psi, is_symmetric, linear_xi, phi_f, reynolds, symmetric_basis, AlgebraSpec, Element, Endomorphism,
    LieElement, MetabelianElement, Rational, Variety,
};
use serde_json::{json, Value};

use crate::syntax::{parse_lie, parse_permutation, parse_poly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VarietyArg {
    Free,
    Metabelian,
    Nilpotent,
}

#[derive(Debug, Parser)]
#[command(name = "metalie", version, about = "Exact computations in free, free metabelian and free nilpotent metabelian Lie algebras")]
struct Cli {
    /// Number of generators.
    #[arg(long, global = true, default_value_t = 2)]
    rank: usize,
    /// Variety of the algebra; defaults to `nilpotent` when `--class` is given and to
    /// `metabelian` otherwise.
    #[arg(long, global = true, value_enum)]
    variety: Option<VarietyArg>,
    /// Nilpotency class of `L_{n,c}`.
    #[arg(long, global = true)]
    class: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Normalize { expr: String },
    /// Print `[a, b]`.
    Bracket { a: String, b: String },
    /// Apply a permutation of the generators, given as images `2,1,3` or cycles `(1 2)`.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
        expr: String,
    },
    /// Average an element over the symmetric group.
    Symmetrize { expr: String },
    /// Decide whether an element is fixed by every permutation of the generators.
    IsSymmetric { expr: String },
    /// List the canonical basis of a homogeneous component.
    Basis {
        #[arg(long)]
        degree: usize,
    },
    /// List a basis of the symmetric elements of a homogeneous component.
    SymmetricBasis {
        #[arg(long)]
        degree: usize,
    },
    /// Apply an automorphism to an element, or print the images of the generators.
    ApplyAut(ApplyAut),
    /// Run a finite-instance verifier.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct ApplyAut {
    #[command(flatten)]
    map: AutChoice,
    /// Element to transform.
    #[arg(allow_hyphen_values = true)]
    expr: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct AutChoice {
    /// `x ↦ a x + b y`, `y ↦ b x + a y` on a rank-two algebra.
    #[arg(long, value_name = "A,B", allow_hyphen_values = true)]
    xi: Option<String>,
    /// `1 + ad u` for `u` in the commutator ideal of `F_n`.
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    psi: Option<String>,
    /// The truncated exponential of `ad u` on `L_{n,c}`.
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
    eps: Option<String>,
    /// `x ↦ x + [x,y]f(x,y)`, `y ↦ y - [x,y]f(y,x)` on `L_{2,c}`.
    #[arg(long, value_name = "POLY", allow_hyphen_values = true)]
    phi: Option<String>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_parser = parse_target)]
    target: Target,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    /// Degree bound of the random polynomials in `phi-l2c`.
    #[arg(long)]
    fdeg: Option<usize>,
    /// Corrupt one hypothesis; the run must then fail.
    #[arg(long)]
    mutate: bool,
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|e: metalie_core::Error| e.to_string())
}

const DEFAULT_SEED: u64 = 1;
const DEFAULT_NILPOTENT_CLASS: usize = 3;

impl Cli {
    fn spec(&self) -> metalie_core::Result<AlgebraSpec> {
        let variety = match (self.variety, self.class) {
            (Some(VarietyArg::Free), None) => Variety::Free,
            (Some(VarietyArg::Metabelian), None) | (None, None) => Variety::Metabelian,
            (Some(VarietyArg::Nilpotent), None) => {
                return Err(metalie_core::Error::InvalidSpec("--variety nilpotent needs --class".into()))
            }
            (Some(VarietyArg::Nilpotent) | None, Some(class)) => Variety::NilpotentMetabelian { class },
            (Some(_), Some(_)) => {
                return Err(metalie_core::Error::InvalidSpec("--class applies only to --variety nilpotent".into()))
            }
        };
        AlgebraSpec::new(self.rank, variety)
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::usage(message),
    }
}

fn element(text: &str, spec: &AlgebraSpec) -> Result<Element, String> {
    parse_lie(text, spec).map_err(|e| format!("in `{text}` at {e}"))
}

fn emit(cli: &Cli, spec: &AlgebraSpec, e: &Element) -> Outcome {
    if cli.json {
        Outcome::ok(format!("{}\n", json!({ "spec": spec.to_string(), "result": e.to_string() })))
    } else {
        Outcome::ok(format!("{e}\n"))
    }
}

fn emit_list(cli: &Cli, spec: &AlgebraSpec, degree: usize, items: &[Element]) -> Outcome {
    if cli.json {
        let basis: Vec<String> = items.iter().map(ToString::to_string).collect();
        Outcome::ok(format!("{}\n", json!({ "spec": spec.to_string(), "degree": degree, "basis": basis })))
    } else {
        Outcome::ok(items.iter().map(|e| format!("{e}\n")).collect())
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, String> {
    if let Command::Verify(args) = &cli.command {
        return verify(cli, args).map_err(|e| e.to_string());
    }
    let spec = cli.spec().map_err(|e| e.to_string())?;
    let core = |e: metalie_core::Error| e.to_string();
    Ok(match &cli.command {
        Command::Normalize { expr } => emit(cli, &spec, &element(expr, &spec)?),
        Command::Bracket { a, b } => emit(cli, &spec, &element(a, &spec)?.bracket(&element(b, &spec)?).map_err(core)?),
        Command::Act { perm, expr } => {
            let p = parse_permutation(perm, spec.rank())?;
            emit(cli, &spec, &element(expr, &spec)?.permute(&p).map_err(core)?)
        }
        Command::Symmetrize { expr } => emit(cli, &spec, &reynolds(&element(expr, &spec)?).map_err(core)?),
        Command::IsSymmetric { expr } => {
            let w = is_symmetric(&element(expr, &spec)?);
            if cli.json {
                let witness = w.witness.as_ref().map_or(Value::Null, |(p, d)| {
                    json!({ "permutation": p.to_string(), "difference": d.to_string() })
                });
                Outcome::ok(format!("{}\n", json!({ "symmetric": w.verdict, "witness": witness })))
            } else {
                let mut out = format!("{}\n", w.verdict);
                if let Some((p, d)) = &w.witness {
                    out.push_str(&format!("witness: {p} changes it by {d}\n"));
                }
                Outcome::ok(out)
            }
        }
        Command::Basis { degree } => emit_list(cli, &spec, *degree, &Element::graded_basis(&spec, *degree).map_err(core)?),
        Command::SymmetricBasis { degree } => {
            emit_list(cli, &spec, *degree, &symmetric_basis::<Element>(&spec, *degree).map_err(core)?)
        }
        Command::ApplyAut(args) => apply_aut(cli, &spec, args)?,
        Command::Verify(_) => unreachable!("handled above"),
    })
}

fn metabelian(e: &Element) -> Result<&MetabelianElement, String> {
    e.as_metabelian().ok_or_else(|| format!("`{e}` is not in a metabelian algebra"))
}

fn widen(phi: Endomorphism<MetabelianElement>) -> metalie_core::Result<Endomorphism<Element>> {
    let spec = *phi.spec();
    Endomorphism::new(&spec, phi.images().iter().cloned().map(Element::from).collect())
}

fn parse_pair(text: &str) -> Result<(Rational, Rational), String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected `A,B`, got `{text}`"));
    };
    let r = |s: &str| s.parse::<Rational>().map_err(|_| format!("invalid rational `{s}`"));
    Ok((r(a)?, r(b)?))
}

fn apply_aut(cli: &Cli, spec: &AlgebraSpec, args: &ApplyAut) -> Result<Outcome, String> {
    let core = |e: metalie_core::Error| e.to_string();
    let phi: Endomorphism<Element> = if let Some(xi) = &args.map.xi {
        let (a, b) = parse_pair(xi)?;
        linear_xi::<Element>(spec, a, b).map_err(core)?.endomorphism().clone()
    } else if let Some(u) = &args.map.psi {
        widen(inner_psi(metabelian(&element(u, spec)?)?).map_err(core)?).map_err(core)?
    } else if let Some(u) = &args.map.eps {
        widen(inner_eps(metabelian(&element(u, spec)?)?).map_err(core)?).map_err(core)?
    } else if let Some(f) = &args.map.phi {
        let class = spec.class().ok_or("--phi needs a nilpotent algebra of rank 2 (use --class)")?;
        if spec.rank() != 2 {
            return Err("--phi needs rank 2".into());
        }
        let f = parse_poly(f, 2).map_err(|e| format!("in `{f}` at {e}"))?;
        widen(phi_f(&f, class).map_err(core)?).map_err(core)?
    } else {
        unreachable!("clap requires one automorphism")
    };
    match &args.expr {
        Some(expr) => Ok(emit(cli, spec, &phi.apply(&element(expr, spec)?).map_err(core)?)),
        None => {
            let images: Vec<String> = phi.images().iter().map(ToString::to_string).collect();
            Ok(if cli.json {
                Outcome::ok(format!("{}\n", json!({ "spec": spec.to_string(), "images": images })))
            } else {
                Outcome::ok(images.iter().enumerate().map(|(i, img)| format!("x{} -> {img}\n", i + 1)).collect())
            })
        }
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> metalie_core::Result<Outcome> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let n = cli.rank;
    let class = cli.class.unwrap_or(DEFAULT_NILPOTENT_CLASS);
    let m = args.mutate;
    let rank_two = || {
        if n == 2 {
            Ok(())
        } else {
            Err(metalie_core::Error::InvalidSpec(format!("{} is a statement about rank 2, got --rank {n}", args.target)))
        }
    };
    let report: VerificationReport = match args.target {
        Target::ThmMetabelian => verify_inner_metabelian(n, args.max_degree.unwrap_or(6), args.trials.unwrap_or(50), seed, m)?,
        Target::LemmaLinear => verify_lemma_linear(n, m)?,
        Target::ThmNilpotent => {
            verify_inner_nilpotent(n, class, args.max_degree.unwrap_or(class), args.trials.unwrap_or(50), seed, m)?
        }
        Target::AutL2 => {
            rank_two()?;
            verify_aut_l2(args.max_degree.unwrap_or(5), args.samples.unwrap_or(100), seed, m)?
        }
        Target::CorF2 => {
            rank_two()?;
            verify_corollary_f2(args.max_degree.unwrap_or(5), args.samples.unwrap_or(50), seed, m)?
        }
        Target::PhiL2c => {
            rank_two()?;
            verify_phi_l2c(class, args.fdeg.unwrap_or(2), args.trials.unwrap_or(PHI_RANDOM_TRIALS), seed, m)?
        }
    };
    let code = if report.passed() { EXIT_OK } else { EXIT_FAIL };
    let stdout = if cli.json { format!("{}\n", report.to_json()) } else { format!("{report}\n") };
    Ok(Outcome { code, stdout, stderr: String::new() })
}
