use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use jacobi_core::eig::default_tol;
use jacobi_core::io::{Matrix, SpectraDocument};
use jacobi_core::springmass::assemble_system_matrices;
use jacobi_core::sweep::{run_sweep, write_csv, SweepConfig};
use jacobi_core::tridiag::kac_spectrum;
use jacobi_core::{
    build_a, build_kac, build_w, eigenvalues, forward_frequencies, min_gap, reconstruct_jacobian,
    reconstruction_residual, solve_inverse_spring_mass, verify_proof_identities,
    BoundaryCondition, Error, Family, Spectrum, TestMatrixSpec, Variant,
};

mod format;

use format::{join_values, value_to_string};

/// Tridiagonal test matrices with equally spaced, interlaced spectra.
#[derive(Parser, Debug)]
#[command(name = "jacobi", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "W", alias = "w")]
    W,
    Kac,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BenchFamily {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "W", alias = "w")]
    W,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Plain,
    #[value(name = "full_reorth")]
    FullReorth,
}

impl From<Algorithm> for Variant {
    fn from(a: Algorithm) -> Self {
        match a {
            Algorithm::Plain => Variant::Plain,
            Algorithm::FullReorth => Variant::FullReorth,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a test matrix as JSON and print its known spectrum.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        /// Order for A and W; the Kac-Sylvester matrix K_n has order n+1.
        #[arg(long)]
        n: usize,
        /// Smallest eigenvalue (W only).
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a0: f64,
        /// Half gap between consecutive eigenvalues (W only).
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        c: f64,
        /// Diagonal value (kac only).
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        shift: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of a matrix file and of its leading principal submatrix.
    Eig {
        input: PathBuf,
        /// Bisection bracket width; defaults to 1e-10 * max(1, spectral radius bound).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Reconstruct a Jacobian matrix from a {"lambda", "mu"} spectra file.
    Inverse {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::FullReorth)]
        variant: Algorithm,
        /// Bracket width for the residual eigenvalues; defaults to 1e-13 * max(1, spectral radius bound).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Masses and stiffnesses of the chain with frequencies 1, 3, ..., 2n-1.
    Springmass {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reconstruction error versus order, as CSV.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchFamily::A)]
        family: BenchFamily,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        a0: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Algorithm::Plain, Algorithm::FullReorth])]
        algorithms: Vec<Algorithm>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the factor identities behind the spectrum of A(n).
    VerifyProof {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

/// An error with the process exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: 2,
            error: error.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Interlacing { .. } => 3,
            Error::Breakdown { .. } => 4,
            _ => 2,
        };
        Self {
            code,
            error: e.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Self { code: 1, error }
    }
}

type CmdResult = Result<(), Failure>;

fn write_output(out: Option<&Path>, contents: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, contents)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::usage)
}

/// Informational lines go to stdout when the main payload went to a file,
/// otherwise to stderr.
fn info(to_stdout: bool, line: &str) {
    if to_stdout {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn cmd_gen(
    family: GenFamily,
    n: usize,
    a0: f64,
    c: f64,
    shift: f64,
    out: Option<&Path>,
) -> CmdResult {
    let (matrix, spectrum, sub) = match family {
        GenFamily::A => {
            let spec = TestMatrixSpec::new(n, 0.0, 1.0)?;
            (
                Matrix::Symmetric(build_a(n)?),
                spec.spectrum(),
                Some(spec.sub_spectrum()),
            )
        }
        GenFamily::W => {
            let spec = TestMatrixSpec::new(n, a0, c)?;
            (
                Matrix::Symmetric(build_w(&spec)?),
                spec.spectrum(),
                Some(spec.sub_spectrum()),
            )
        }
        GenFamily::Kac => (
            Matrix::General(build_kac(n, shift)?),
            kac_spectrum(n, shift),
            None,
        ),
    };
    write_output(out, &(matrix.to_json() + "\n"))?;
    let to_stdout = out.is_some();
    info(to_stdout, &format!("spectrum: {}", join_values(&spectrum, None)));
    if let Some(sub) = sub {
        info(to_stdout, &format!("submatrix: {}", join_values(&sub, None)));
    }
    Ok(())
}

fn spectra_of(matrix: &Matrix, tol: Option<f64>) -> Result<(Spectrum, Option<Spectrum>), Failure> {
    let t = match matrix {
        Matrix::Symmetric(t) => t.clone(),
        // the symmetrized submatrix is the submatrix of the symmetrized matrix
        Matrix::General(g) => g.symmetrized()?,
    };
    let tol = tol.unwrap_or_else(|| default_tol(&t));
    let sub = match t.order() {
        1 => None,
        _ => Some(eigenvalues(&t.leading_principal_submatrix()?, tol)?),
    };
    Ok((eigenvalues(&t, tol)?, sub))
}

fn gap_string(values: &[f64], tol: f64) -> String {
    min_gap(values)
        .map(|g| value_to_string(g, Some(tol)))
        .unwrap_or_else(|_| "-".into())
}

fn cmd_eig(input: &Path, tol: Option<f64>) -> CmdResult {
    let matrix = Matrix::from_json(&read_input(input)?)?;
    let (full, sub) = spectra_of(&matrix, tol)?;
    let tol = full.tol();
    let sub_values = sub.as_ref().map(|s| s.values().to_vec()).unwrap_or_default();
    println!("{}", join_values(full.values(), Some(tol)));
    println!("{}", join_values(&sub_values, Some(tol)));
    println!(
        "min_gap: {} {}",
        gap_string(full.values(), tol),
        gap_string(&sub_values, tol)
    );
    Ok(())
}

fn cmd_inverse(
    input: &Path,
    variant: Variant,
    tol: Option<f64>,
    out: Option<&Path>,
) -> CmdResult {
    let doc = SpectraDocument::from_json(&read_input(input)?)?;
    let pair = doc.validate().map_err(|e| match e {
        Error::Shape(_) | Error::Size { .. } => Failure {
            code: 3,
            error: e.into(),
        },
        other => other.into(),
    })?;
    let t = reconstruct_jacobian(&pair, variant)?;
    // residuals are only meaningful well below the default bracket width
    let tol = tol.unwrap_or_else(|| 1e-3 * default_tol(&t));
    let (r1, r2) = reconstruction_residual(&t, &pair, tol)?;
    write_output(out, &(Matrix::Symmetric(t).to_json() + "\n"))?;
    info(out.is_some(), &format!("residuals: {r1:e} {r2:e}"));
    Ok(())
}

fn cmd_springmass(
    n: usize,
    alpha: f64,
    format: TableFormat,
    tol: f64,
    out: Option<&Path>,
) -> CmdResult {
    let system = solve_inverse_spring_mass(n, alpha)?;
    let free = forward_frequencies(&system, BoundaryCondition::FreeEnd, tol)?;
    let fixed = forward_frequencies(&system, BoundaryCondition::FixedEnd, tol)?;
    let free_target: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0).collect();
    let fixed_target: Vec<f64> = (1..n).map(|k| 2.0 * k as f64).collect();
    let deviation = free
        .max_deviation(&free_target)?
        .max(fixed.max_deviation(&fixed_target)?);

    let table = match format {
        TableFormat::Csv => {
            let mut s = String::from("i,m_i,k_i\n");
            for (i, (m, k)) in system.masses().iter().zip(system.stiffnesses()).enumerate() {
                s.push_str(&format!("{},{},{}\n", i + 1, m, k));
            }
            s
        }
        TableFormat::Json => {
            let (c, _) = assemble_system_matrices(&system);
            let v = serde_json::json!({
                "n": system.n(),
                "alpha": system.alpha(),
                "masses": system.masses(),
                "stiffnesses": system.stiffnesses(),
                "stiffness_matrix": { "diag": c.diag(), "offdiag": c.offdiag() },
            });
            serde_json::to_string_pretty(&v).map_err(anyhow::Error::from)? + "\n"
        }
    };
    write_output(out, &table)?;
    // CSV readers skip '#' lines; JSON on stdout must stay clean.
    let to_stdout = out.is_some() || format == TableFormat::Csv;
    let lines = [
        format!("# free_end: {}", join_values(free.values(), Some(tol))),
        format!("# fixed_end: {}", join_values(fixed.values(), Some(tol))),
        format!("# max_deviation: {deviation:e}"),
    ];
    for line in &lines {
        info(to_stdout, line);
    }
    if deviation > 1e-8 {
        return Err(Failure {
            code: 4,
            error: anyhow::anyhow!("frequency deviation {deviation:e} exceeds 1e-8"),
        });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    family: BenchFamily,
    n_min: usize,
    n_max: usize,
    step: usize,
    a0: f64,
    c: f64,
    algorithms: &[Algorithm],
    out: Option<&Path>,
) -> CmdResult {
    let family = match family {
        BenchFamily::A => Family::A,
        BenchFamily::W => Family::W,
    };
    let mut cfg = SweepConfig::new(family, n_min, n_max);
    cfg.a0 = a0;
    cfg.c = c;
    cfg.step = step;
    cfg.algorithms = algorithms.iter().map(|&a| a.into()).collect();
    let records = run_sweep(&cfg)?;
    let mut buf = Vec::new();
    write_csv(&records, &mut buf).map_err(anyhow::Error::from)?;
    write_output(out, &String::from_utf8(buf).map_err(anyhow::Error::from)?)?;
    Ok(())
}

fn cmd_verify_proof(n: usize, tol: f64) -> CmdResult {
    let report = verify_proof_identities(n, tol)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)?
    );
    if !report.pass {
        return Err(Failure {
            code: 4,
            error: anyhow::anyhow!("identity residuals exceed tolerance {tol:e}"),
        });
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen {
            family,
            n,
            a0,
            c,
            shift,
            out,
        } => cmd_gen(family, n, a0, c, shift, out.as_deref()),
        Command::Eig { input, tol } => cmd_eig(&input, tol),
        Command::Inverse {
            input,
            variant,
            tol,
            out,
        } => cmd_inverse(&input, variant.into(), tol, out.as_deref()),
        Command::Springmass {
            n,
            alpha,
            format,
            tol,
            out,
        } => cmd_springmass(n, alpha, format, tol, out.as_deref()),
        Command::Bench {
            family,
            n_min,
            n_max,
            step,
            a0,
            c,
            algorithms,
            out,
        } => cmd_bench(family, n_min, n_max, step, a0, c, &algorithms, out.as_deref()),
        Command::VerifyProof { n, tol } => cmd_verify_proof(n, tol),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
