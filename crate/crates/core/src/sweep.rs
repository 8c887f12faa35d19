//! Reconstruction error as a function of order.
//!
//! For every order the exact spectra come from the closed forms, never from a
//! forward solve, so the recorded entry error is measured against ground truth.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use crate::eig::min_gap;
use crate::error::{Error, Result};
use crate::iep::{reconstruct_jacobian, reconstruction_residual, validate_interlacing, Variant};
use crate::tridiag::{build_a, build_w, SymmetricTridiagonal, TestMatrixSpec};

pub const CSV_HEADER: &str = "n,family,algorithm,max_entry_error,max_eig_residual,min_gap,runtime_ns";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    W,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::W => "W",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "W" | "w" => Ok(Family::W),
            other => Err(Error::Parameter(format!(
                "unknown family {other:?}, expected A or W"
            ))),
        }
    }
}

/// One row of the sweep output.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub family: Family,
    pub algorithm: Variant,
    /// Infinite when the reconstruction broke down.
    pub max_entry_error: f64,
    /// Infinite when the reconstruction broke down.
    pub max_eig_residual: f64,
    pub min_gap: f64,
    pub runtime_ns: u128,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{:?},{:?},{:?},{}",
            self.n,
            self.family,
            self.algorithm,
            self.max_entry_error,
            self.max_eig_residual,
            self.min_gap,
            self.runtime_ns
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub family: Family,
    /// Smallest eigenvalue and half gap; only used by family `W`.
    pub a0: f64,
    pub c: f64,
    pub n_min: usize,
    pub n_max: usize,
    pub step: usize,
    pub algorithms: Vec<Variant>,
}

impl SweepConfig {
    pub fn new(family: Family, n_min: usize, n_max: usize) -> Self {
        Self {
            family,
            a0: 0.0,
            c: 1.0,
            n_min,
            n_max,
            step: 1,
            algorithms: Variant::ALL.to_vec(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_min > self.n_max {
            return Err(Error::Parameter(format!(
                "need 2 <= n_min <= n_max, got n_min = {}, n_max = {}",
                self.n_min, self.n_max
            )));
        }
        if self.step == 0 {
            return Err(Error::Parameter("step must be positive".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Parameter("no algorithms selected".into()));
        }
        Ok(())
    }

    fn target(&self, n: usize) -> Result<(SymmetricTridiagonal, TestMatrixSpec)> {
        match self.family {
            Family::A => Ok((
                build_a(n)?.normalize_signs()?,
                TestMatrixSpec::new(n, 0.0, 1.0)?,
            )),
            Family::W => {
                let spec = TestMatrixSpec::new(n, self.a0, self.c)?;
                Ok((build_w(&spec)?, spec))
            }
        }
    }
}

/// Runs the sweep in ascending order of `n`, algorithms in the configured
/// order within each `n`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let mut out = Vec::new();
    for n in (cfg.n_min..=cfg.n_max).step_by(cfg.step) {
        let (exact, spec) = cfg.target(n)?;
        let lambda = spec.spectrum();
        let pair = validate_interlacing(&lambda, &spec.sub_spectrum())?;
        let gap = min_gap(&lambda)?;
        let tol = 1e-13 * lambda[0].abs().max(lambda[n - 1].abs()).max(1.0);
        for &algorithm in &cfg.algorithms {
            let start = Instant::now();
            let result = reconstruct_jacobian(&pair, algorithm);
            let runtime_ns = start.elapsed().as_nanos();
            let (max_entry_error, max_eig_residual) = match result {
                Ok(t) => {
                    let (r1, r2) = reconstruction_residual(&t, &pair, tol)?;
                    (t.max_abs_diff(&exact)?, r1.max(r2))
                }
                Err(Error::Breakdown { .. }) => (f64::INFINITY, f64::INFINITY),
                Err(e) => return Err(e),
            };
            out.push(BenchRecord {
                n,
                family: cfg.family,
                algorithm,
                max_entry_error,
                max_eig_residual,
                min_gap: gap,
                runtime_ns,
            });
        }
    }
    Ok(out)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(w, "{}", r.csv_row())?;
    }
    Ok(())
}
