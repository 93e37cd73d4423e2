//! Command-line front end for the dqsym engine: reference grids, identity
//! verification, and basis expansion of named elements.
//!
//! Exit codes: 0 on success, 1 when a verification or expansion fails on
//! mathematical grounds, 2 on usage errors (including degrees beyond the
//! configured bound).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dqsym::expansion::{expand_in_ribbon, ribbon_to_elementary};
use dqsym::identities::{p_class, psi_word, sigma_n};
use dqsym::matrix::{d_matrix, m_elementary_matrix, m_ribbon_matrix, n_matrix, CellText, Matrix};
use dqsym::verify::{run_suite, Suite};
use dqsym::{Composition, Element, Word};

#[derive(Parser)]
#[command(name = "dqsym", version, about = "Exact engine for colored quasi-symmetric identities")]
struct Cli {
    /// Largest degree any command may compute.
    #[arg(long, global = true, default_value_t = 7)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a reference grid over the compositions of a degree.
    Matrix {
        /// Which grid: the descent statistic, a coefficient table of the
        /// full sum, or the glued classes.
        #[arg(long, value_enum)]
        kind: MatrixKind,

        /// Degree of the grid (at least 2).
        #[arg(long)]
        n: usize,

        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },

    /// Recompute an identity suite from scratch and report every check.
    Verify {
        /// Suite name: all, theorem1, theorem2, corollary, bs, recursion,
        /// or closed_forms.
        #[arg(long, default_value = "all")]
        suite: String,

        /// Degree to verify at.
        #[arg(long)]
        n: usize,
    },

    /// Expand a named element in a chosen basis.
    Expand {
        /// Element family: the full degree sum, a class sum, or a
        /// bracketing element.
        #[arg(long, value_enum)]
        target: Target,

        /// Family argument: a degree for sigma, a composition for p, a
        /// color word for psi.
        #[arg(long)]
        arg: String,

        #[arg(long, value_enum, default_value_t = BasisArg::G)]
        basis: BasisArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    #[value(name = "D")]
    D,
    #[value(name = "Mlambda")]
    MLambda,
    #[value(name = "Mribbon")]
    MRibbon,
    #[value(name = "N")]
    N,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Sigma,
    P,
    Psi,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "G")]
    G,
    #[value(name = "R")]
    R,
    #[value(name = "Lambda")]
    Lambda,
}

/// A command outcome that terminates the process with a specific code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn failed(message: impl Into<String>) -> Failure {
    Failure { code: 1, message: message.into() }
}

/// Writes to stdout, stopping quietly when the consumer closes the pipe.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout();
    if out.write_all(s.as_bytes()).and_then(|()| out.flush()).is_err() {
        std::process::exit(0);
    }
}

fn emit_line(s: &str) {
    emit(s);
    emit("\n");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Matrix { kind, n, format } => {
            if n < 2 || n > cli.max_n {
                return Err(usage(format!(
                    "matrix degree must lie in 2..={}, got {n}",
                    cli.max_n
                )));
            }
            match kind {
                MatrixKind::D => render(&d_matrix(n), format),
                MatrixKind::MLambda => render(&m_elementary_matrix(n), format),
                MatrixKind::MRibbon => render(&m_ribbon_matrix(n), format),
                MatrixKind::N => render(&n_matrix(n), format),
            }
        }
        Command::Verify { suite, n } => {
            let suite: Suite = suite.parse().map_err(|e| usage(format!("{e}")))?;
            if n < 1 || n > cli.max_n {
                return Err(usage(format!(
                    "verification degree must lie in 1..={}, got {n}",
                    cli.max_n
                )));
            }
            let results = run_suite(suite, n);
            for r in &results {
                emit_line(&r.to_string());
            }
            let failures = results.iter().filter(|r| !r.passed).count();
            if failures == 0 {
                emit_line(&format!(
                    "suite {suite}: {} checks passed at degree {n}",
                    results.len()
                ));
                Ok(())
            } else {
                Err(failed(format!(
                    "suite {suite}: {failures} of {} checks failed at degree {n}",
                    results.len()
                )))
            }
        }
        Command::Expand { target, arg, basis } => {
            let element = build_target(target, &arg, cli.max_n)?;
            expand(&element, basis)
        }
    }
}

fn render<T: CellText + serde::Serialize>(
    m: &Matrix<T>,
    format: OutputFormat,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Text => emit(&m.to_text()),
        OutputFormat::Csv => emit(&m.to_csv()),
        OutputFormat::Json => {
            let body = serde_json::to_string(m)
                .map_err(|e| failed(format!("serialization failed: {e}")))?;
            emit_line(&body);
        }
    }
    Ok(())
}

fn build_target(target: Target, arg: &str, max_n: usize) -> Result<Element, Failure> {
    match target {
        Target::Sigma => {
            let n: usize = arg
                .parse()
                .map_err(|_| usage(format!("sigma takes a degree, got {arg:?}")))?;
            if n < 1 || n > max_n {
                return Err(usage(format!("degree must lie in 1..={max_n}, got {n}")));
            }
            Ok(sigma_n(n))
        }
        Target::P => {
            let l: Composition = arg
                .parse()
                .map_err(|e| usage(format!("p takes a composition: {e}")))?;
            if l.is_empty() {
                return Err(usage("p takes a nonempty composition"));
            }
            if l.weight() > max_n {
                return Err(usage(format!(
                    "composition weight must be at most {max_n}, got {}",
                    l.weight()
                )));
            }
            Ok(p_class(&l))
        }
        Target::Psi => {
            let u: Word = arg
                .parse()
                .map_err(|e| usage(format!("psi takes a color word: {e}")))?;
            if u.is_empty() {
                return Err(usage("psi takes at least one letter"));
            }
            if u.len() > max_n {
                return Err(usage(format!(
                    "word length must be at most {max_n}, got {}",
                    u.len()
                )));
            }
            Ok(psi_word(&u))
        }
    }
}

fn expand(element: &Element, basis: BasisArg) -> Result<(), Failure> {
    match basis {
        BasisArg::G => {
            emit_line(&element.to_text());
            Ok(())
        }
        BasisArg::R => {
            let x = expand_in_ribbon(element).map_err(|w| failed(w.to_string()))?;
            emit_line(&x.to_text());
            Ok(())
        }
        BasisArg::Lambda => {
            let x = expand_in_ribbon(element).map_err(|w| failed(w.to_string()))?;
            emit_line(&ribbon_to_elementary(&x).to_text());
            Ok(())
        }
    }
}
