//! Command-line front end.
//!
//! Reads a CSV matrix, applies one operator, writes the solution as CSV and
//! optionally a JSON [`RunReport`]. Human-readable diagnostics go to standard
//! error only.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::io::{read_csv, write_csv, write_report, write_values, RunReport};
use crate::linalg::{svd, DenseMatrix};
use crate::matrix_prox::{nuclear_ball_from_factors, svt, svt_objective, ProxSolution};
use crate::oracle::{
    feasible_spectral_point, support_enum_l0, OracleReport, PerturbationCheck, MAX_SUPPORT_ENTRIES,
    SPECTRAL_TOLERANCE, VECTOR_TOLERANCE,
};
use crate::scalar_prox::{Beta, Lambda};
use crate::vector_prox::{l0_prox, l1_prox, shrink_prox, Tau};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CONVERGENCE: i32 = 4;
pub const EXIT_ORACLE_FAIL: i32 = 5;

/// Perturbation trials and radius used by `check`.
const CHECK_TRIALS: usize = 1_000;
const CHECK_RADIUS: f64 = 0.1;
/// Feasible draws for `check --op nuclear-project`; every tenth uses
/// perturbed singular factors.
const CHECK_FEASIBLE_DRAWS: usize = 1_100;

#[derive(Debug, Parser)]
#[command(
    name = "softshrink",
    version,
    about = "Shrinkage, singular value thresholding and nuclear-norm projection on CSV matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input CSV (default: stdin).
    #[arg(short = 'i', long)]
    input: Option<PathBuf>,
    /// Output path (default: stdout).
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Write a JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    L0,
    L1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Shrink,
    Sparse,
    Svt,
    NuclearProject,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entry-wise soft threshold at --lambda.
    Shrink {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
    },
    /// Entry-wise sparse approximation: hard (l0) or soft (l1) threshold.
    Sparse {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
    },
    /// Singular value thresholding at 1/--beta.
    Svt {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
    },
    /// Nearest matrix with nuclear norm at most --tau.
    NuclearProject {
        #[command(flatten)]
        io: Io,
        #[arg(long, allow_negative_numbers = true)]
        tau: f64,
    },
    /// Singular values, one per line.
    Svd {
        #[command(flatten)]
        io: Io,
    },
    /// Run an operator and audit its output with a brute-force oracle.
    Check {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        tau: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Operator selected for a run, with validated parameters.
#[derive(Debug, Clone, Copy)]
enum Plan {
    Shrink(f64),
    Sparse(Mode, f64),
    Svt(f64),
    NuclearProject(f64),
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Oracle(OracleReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Lib(Error::Parse { .. } | Error::Io(_)) => EXIT_USAGE,
            Failure::Lib(Error::Domain(_) | Error::Dimension(_) | Error::Size(_)) => EXIT_DOMAIN,
            Failure::Lib(Error::Convergence { .. }) => EXIT_CONVERGENCE,
            Failure::Oracle(_) => EXIT_ORACLE_FAIL,
        }
    }
}

/// Runs the CLI with explicit streams and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = match &failure {
                Failure::Usage(msg) => writeln!(stderr, "error: {msg}"),
                Failure::Lib(e) => writeln!(stderr, "error: {e}"),
                Failure::Oracle(r) => writeln!(
                    stderr,
                    "oracle: fail (margin {:e}, tolerance {:e}, {} competitors)",
                    r.margin, r.tolerance, r.competitors_tested
                ),
            };
            failure.exit_code()
        }
    }
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    match command {
        Command::Shrink { io, lambda } => apply(&io, Plan::Shrink(lambda), None, stdin, stdout),
        Command::Sparse { io, mode, beta } => apply(&io, Plan::Sparse(mode, beta), None, stdin, stdout),
        Command::Svt { io, beta } => apply(&io, Plan::Svt(beta), None, stdin, stdout),
        Command::NuclearProject { io, tau } => apply(&io, Plan::NuclearProject(tau), None, stdin, stdout),
        Command::Svd { io } => {
            check_paths(&io)?;
            let a = load(&io, stdin)?;
            let factors = svd(&a)?;
            let sigma = factors.sigma().to_vec();
            let solution = ProxSolution::new(a.clone(), 0.0, 0.0, sigma.clone(), sigma.clone());
            emit(&io, stdout, |w| write_values(&sigma, w))?;
            if let Some(path) = &io.report {
                let report = RunReport::from_solution("svd", &[], &solution);
                write_report(&report, create(path)?)?;
            }
            Ok(())
        }
        Command::Check { io, op, mode, lambda, beta, tau, seed } => {
            let missing = |flag: &str| Failure::Usage(format!("check --op {op:?} requires {flag}").to_lowercase());
            let plan = match op {
                Op::Shrink => Plan::Shrink(lambda.ok_or_else(|| missing("--lambda"))?),
                Op::Sparse => Plan::Sparse(
                    mode.ok_or_else(|| missing("--mode"))?,
                    beta.ok_or_else(|| missing("--beta"))?,
                ),
                Op::Svt => Plan::Svt(beta.ok_or_else(|| missing("--beta"))?),
                Op::NuclearProject => Plan::NuclearProject(tau.ok_or_else(|| missing("--tau"))?),
            };
            let report = apply(&io, plan, Some(seed), stdin, stdout);
            if report.is_ok() {
                let _ = writeln!(stderr, "oracle: pass");
            }
            report
        }
    }
}

fn apply(
    io: &Io,
    plan: Plan,
    seed: Option<u64>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    check_paths(io)?;
    let a = load(io, stdin)?;
    let (operation, params, solution, oracle) = match plan {
        Plan::Shrink(l) => {
            let lambda = Lambda::new(l)?;
            let sol = shrink_prox(&a, lambda)?;
            let oracle = seed.map(|s| {
                let obj = |x: &DenseMatrix<f64>| {
                    let d = x.sub(&a).expect("shape").frobenius_norm();
                    l * x.l1_norm() + 0.5 * d * d
                };
                perturbation(s, VECTOR_TOLERANCE).run(&sol.solution, obj)
            });
            ("shrink", vec![("lambda", l)], sol, oracle)
        }
        Plan::Sparse(Mode::L1, b) => {
            let beta = Beta::new(b)?;
            let sol = l1_prox(&a, beta)?;
            let oracle = seed.map(|s| {
                let obj = |x: &DenseMatrix<f64>| {
                    let d = x.sub(&a).expect("shape").frobenius_norm();
                    x.l1_norm() + 0.5 * b * d * d
                };
                perturbation(s, VECTOR_TOLERANCE).run(&sol.solution, obj)
            });
            ("sparse-l1", vec![("beta", b)], sol, oracle)
        }
        Plan::Sparse(Mode::L0, b) => {
            let beta = Beta::new(b)?;
            let sol = l0_prox(&a, beta)?;
            let oracle = match seed {
                None => None,
                Some(_) if a.len() <= MAX_SUPPORT_ENTRIES => Some(support_enum_l0(&a, beta)?),
                Some(s) => {
                    let obj = |x: &DenseMatrix<f64>| {
                        let d = x.sub(&a).expect("shape").frobenius_norm();
                        x.cardinality() as f64 + 0.5 * b * d * d
                    };
                    Some(perturbation(s, VECTOR_TOLERANCE).run(&sol.solution, obj))
                }
            };
            ("sparse-l0", vec![("beta", b)], sol, oracle)
        }
        Plan::Svt(b) => {
            let beta = Beta::new(b)?;
            let sol = svt(&a, beta)?;
            let oracle = match seed {
                None => None,
                Some(s) => {
                    // surface convergence failures instead of hiding them in the objective
                    svt_objective(&sol.solution, &a, beta)?;
                    let obj = |x: &DenseMatrix<f64>| svt_objective(x, &a, beta).unwrap_or(f64::NAN);
                    Some(perturbation(s, SPECTRAL_TOLERANCE).run(&sol.solution, obj))
                }
            };
            ("svt", vec![("beta", b)], sol, oracle)
        }
        Plan::NuclearProject(t) => {
            let tau = Tau::new(t)?;
            let factors = svd(&a)?;
            let sol = nuclear_ball_from_factors(&a, &factors, tau)?;
            let oracle = match seed {
                None => None,
                Some(s) => {
                    let limit = t + SPECTRAL_TOLERANCE * t.max(1.0);
                    let obj = |x: &DenseMatrix<f64>| match x.nuclear_norm() {
                        Ok(n) if n <= limit => x.sub(&a).expect("shape").frobenius_norm(),
                        Ok(_) => f64::INFINITY,
                        Err(_) => f64::NAN,
                    };
                    let feasible = |rng: &mut crate::oracle::rng::OracleRng| {
                        use rand::Rng;
                        let noise = if rng.gen_ratio(1, 10) { 0.1 } else { 0.0 };
                        feasible_spectral_point(rng, &factors, t, noise)
                    };
                    Some(perturbation(s, SPECTRAL_TOLERANCE).run_with_feasible(
                        &sol.solution,
                        obj,
                        feasible,
                        CHECK_FEASIBLE_DRAWS,
                    ))
                }
            };
            ("nuclear-project", vec![("tau", t)], sol, oracle)
        }
    };

    emit(io, stdout, |w| write_csv(&solution.solution, w))?;
    let mut report = RunReport::from_solution(operation, &params, &solution);
    report.oracle = oracle;
    if let Some(path) = &io.report {
        write_report(&report, create(path)?)?;
    }
    match report.oracle {
        Some(r) if !r.passed() => Err(Failure::Oracle(r)),
        _ => Ok(()),
    }
}

fn perturbation(seed: u64, tolerance: f64) -> PerturbationCheck {
    PerturbationCheck::new(CHECK_TRIALS, CHECK_RADIUS, tolerance, seed).expect("valid constants")
}

fn same_file(a: &Path, b: &Path) -> bool {
    match (a.canonicalize(), b.canonicalize()) {
        (Ok(x), Ok(y)) => x == y,
        _ => a == b,
    }
}

fn check_paths(io: &Io) -> Result<(), Failure> {
    if let (Some(input), Some(output)) = (&io.input, &io.output) {
        if same_file(input, output) {
            return Err(Failure::Usage(format!(
                "output path {} must differ from input path",
                output.display()
            )));
        }
    }
    if let (Some(input), Some(report)) = (&io.input, &io.report) {
        if same_file(input, report) {
            return Err(Failure::Usage("report path must differ from input path".into()));
        }
    }
    Ok(())
}

fn load(io: &Io, stdin: &mut dyn Read) -> Result<DenseMatrix<f64>, Failure> {
    let doc = match &io.input {
        Some(path) => {
            let file = File::open(path)
                .map_err(|e| Failure::Usage(format!("cannot open {}: {e}", path.display())))?;
            read_csv(BufReader::new(file), &path.display().to_string())?
        }
        None => read_csv(BufReader::new(stdin), "stdin")?,
    };
    Ok(doc.matrix)
}

fn create(path: &Path) -> Result<File, Failure> {
    File::create(path).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", path.display())))
}

fn emit(
    io: &Io,
    stdout: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> crate::error::Result<()>,
) -> Result<(), Failure> {
    match &io.output {
        Some(path) => {
            let mut file = create(path)?;
            write(&mut file)?;
        }
        None => write(stdout)?,
    }
    Ok(())
}
