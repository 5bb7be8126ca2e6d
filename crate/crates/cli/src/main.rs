mod docs;
mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liecoeff::coeffalg::{all_checks, check_names, run_check, CheckOutcome};
use liecoeff::liealg::adjoint_rep;
use liecoeff::sympow::sym_power_rep;
use liecoeff::{
    char_poly, coefficient_algebra, nilpotency_test, sym_basis, Basis, DecomposeOptions, Error, Family, Limits,
    Rational,
};

use crate::docs::{NilpotentDoc, SymPowerDoc, VerifyDoc};

#[derive(Parser)]
#[command(name = "liecoeff", version, about = "Characteristic polynomials and coefficient algebras of matrix Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial on S^d(C^n) (or the adjoint representation).
    Charpoly {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long, value_enum, default_value_t = RepKind::Symmetric)]
        rep: RepKind,
    },
    /// Coefficients written in the classical invariants, with the verdict.
    Coeffalg {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 1)]
        d: u32,
    },
    /// Run one named check, or the whole grid with --all.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        check: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u32,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        dmax: u32,
    },
    /// Is the adjoint characteristic polynomial x0^dim?
    Nilpotent {
        /// Basis JSON file.
        #[arg(long, conflicts_with = "algebra")]
        basis: Option<PathBuf>,
        #[command(flatten)]
        algebra: OptAlgebraArgs,
    },
    /// Matrices of the basis elements on S^d(C^n).
    Sympow {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 2)]
        d: u32,
    },
    /// Validate a JSON document produced by this tool.
    Read { file: PathBuf },
    /// List the check names accepted by `verify --check`.
    Checks,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Preset (ut, gl, sl, sl2, heisenberg, solvable) or a basis JSON file.
    #[arg(long, default_value = "sl2")]
    algebra: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Args)]
struct OptAlgebraArgs {
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepKind {
    Symmetric,
    Adjoint,
}

/// What went wrong, and the exit status it maps to.
enum Failure {
    Invalid(String),
    Verification(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else if matches!(e, Error::Inconsistent(_)) {
            Failure::Verification(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

/// Emitted text plus whether it reports a failed verification.
struct Emitted {
    text: String,
    failed: bool,
}

impl Emitted {
    fn ok(text: String) -> Self {
        Emitted { text, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = write_out(cli.output.as_deref(), &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(f) => {
            let msg = match &f {
                Failure::Invalid(m) | Failure::Verification(m) | Failure::Cap(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Emitted, Failure> {
    let limits = Limits::from_env()?;
    let format = cli.format;
    match &cli.command {
        Command::Charpoly { algebra, d, rep } => {
            let basis = resolve(&algebra.algebra, algebra.n)?;
            let rep = match rep {
                RepKind::Symmetric => {
                    check_d(*d)?;
                    check_size(&basis, *d, &limits)?;
                    sym_power_rep(&basis, *d)
                }
                RepKind::Adjoint => adjoint_rep(&basis),
            };
            let cp = char_poly(&rep, &limits)?;
            Ok(Emitted::ok(match format {
                Format::Plain => cp.plain(),
                Format::Latex => cp.latex(),
                Format::Json => docs::to_json(&cp.to_doc()),
            }))
        }
        Command::Coeffalg { algebra, d } => {
            check_d(*d)?;
            let basis = resolve(&algebra.algebra, algebra.n)?;
            check_size(&basis, *d, &limits)?;
            let report = coefficient_algebra(&basis, *d, &limits, &DecomposeOptions::default())?;
            Ok(Emitted::ok(match format {
                Format::Plain => report.plain(),
                Format::Latex => report.latex(),
                Format::Json => docs::to_json(&report.to_doc()),
            }))
        }
        Command::Verify { check, n, d, all, nmax, dmax } => {
            let outcomes: Vec<CheckOutcome> = if *all {
                all_checks::<Rational>(*nmax, *dmax, &limits)
                    .into_iter()
                    .collect::<liecoeff::Result<_>>()?
            } else {
                let name = check.as_deref().unwrap_or_default();
                vec![run_check::<Rational>(name, *n, *d, &limits)?]
            };
            let doc = VerifyDoc::new(outcomes);
            let text = match format {
                Format::Json => docs::to_json(&doc),
                Format::Plain => render::verify_plain(&doc),
                Format::Latex => return Err(Failure::Invalid("verify has no LaTeX form; use plain or json".into())),
            };
            Ok(Emitted { text, failed: !doc.passed })
        }
        Command::Nilpotent { basis, algebra } => {
            let b = match (basis, &algebra.algebra) {
                (Some(path), _) => read_basis(path)?,
                (None, Some(a)) => resolve(a, algebra.n)?,
                (None, None) => return Err(Failure::Invalid("give --basis FILE or --algebra NAME".into())),
            };
            let (nilpotent, cp) = nilpotency_test(&b, &limits)?;
            Ok(Emitted::ok(match format {
                Format::Plain => format!("nilpotent: {nilpotent}, charpoly: {}", cp.plain()),
                Format::Latex => format!("\\text{{nilpotent: {nilpotent}}},\\quad {}", cp.latex()),
                Format::Json => docs::to_json(&NilpotentDoc {
                    nilpotent,
                    charpoly: cp.to_doc(),
                }),
            }))
        }
        Command::Sympow { algebra, d } => {
            check_d(*d)?;
            let basis = resolve(&algebra.algebra, algebra.n)?;
            check_size(&basis, *d, &limits)?;
            let doc = SymPowerDoc::build(&basis, *d);
            Ok(Emitted::ok(match format {
                Format::Json => docs::to_json(&doc),
                Format::Plain => render::sympow_plain(&doc),
                Format::Latex => render::sympow_latex(&doc),
            }))
        }
        Command::Read { file } => {
            let text = fs::read_to_string(file).map_err(|e| Failure::Invalid(format!("{}: {e}", file.display())))?;
            let kind = docs::validate(&text)?;
            Ok(Emitted::ok(format!("ok: {kind}")))
        }
        Command::Checks => Ok(Emitted::ok(check_names().join("\n"))),
    }
}

fn check_d(d: u32) -> Result<(), Failure> {
    if d == 0 {
        return Err(Failure::Invalid("d must be at least 1".into()));
    }
    Ok(())
}

/// Rejects oversized requests before any matrix is built.
fn check_size(basis: &Basis, d: u32, limits: &Limits) -> Result<(), Failure> {
    let m = sym_basis(basis.n(), d).len();
    if m > limits.max_dim {
        return Err(Failure::Cap(format!(
            "dim S^{d}(C^{}) = {m} exceeds the limit {} (set {} to raise it)",
            basis.n(),
            limits.max_dim,
            liecoeff::coeffalg::ENV_MAX_DIM
        )));
    }
    Ok(())
}

fn resolve(name: &str, n: usize) -> Result<Basis, Failure> {
    match name {
        "heisenberg" => Ok(Basis::heisenberg()),
        "solvable" => Ok(Basis::rotation_extension()),
        "sl2" => Ok(Basis::sl2()),
        _ => match name.parse::<Family>() {
            Ok(family) => Ok(Basis::preset(family, n)?),
            Err(_) if Path::new(name).exists() => read_basis(Path::new(name)),
            Err(_) => Err(Failure::Invalid(format!(
                "{name:?} is neither a preset (ut, gl, sl, sl2, heisenberg, solvable) nor a file"
            ))),
        },
    }
}

fn read_basis(path: &Path) -> Result<Basis, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    Basis::from_json(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}
