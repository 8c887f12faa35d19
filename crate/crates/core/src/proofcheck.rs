//! Explicit factors behind the spectral identities of `A(n)`, and numerical
//! checks of the matrix equations they satisfy:
//!
//! * `B R = R A` with `B = A°(n+1) - nI` and `A = A(n) - (n-1)I`
//! * `A(n+1) - 2nI = -L L^T`
//! * `S D° = A(n) S` where `D = 2nI - L^T L = [[D°, 0], [0, 2n]]`

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratio::{factors, product_ratio};
use crate::tridiag::{build_a, SymmetricTridiagonal};

/// Largest entrywise gap tolerated between `2nI - L^T L` and the listed
/// entries of `D`.
pub const D_ENTRY_TOL: f64 = 1e-12;

/// The factor matrices for a given `n`, dense.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofFactors {
    pub n: usize,
    /// `n x n`, upper triangular.
    pub r: DMatrix<f64>,
    /// `(n+1) x (n+1)`, lower bidiagonal with a zero last diagonal entry.
    pub l: DMatrix<f64>,
    /// `(n+1) x (n+1)`, entries as listed (not computed from `L`).
    pub d: DMatrix<f64>,
    /// `n x n`, upper bidiagonal.
    pub s: DMatrix<f64>,
}

fn dense(t: &SymmetricTridiagonal) -> DMatrix<f64> {
    let n = t.order();
    DMatrix::from_fn(n, n, |i, j| t.get(i, j))
}

/// Builds `R`, `L`, `D` and `S` for `n >= 2` from their entry formulas.
pub fn build_proof_factors(n: usize) -> Result<ProofFactors> {
    if n < 2 {
        return Err(Error::Size {
            what: "the proof factors",
            order: n,
            min: 2,
        });
    }
    let nn = n as u64;

    // r_ij = sqrt(k (j-1)! (2n-j-1)! / ((i-1)! (2n-i+1)!)), j >= i, i+j even
    let r = DMatrix::from_fn(n, n, |i0, j0| {
        let (i, j) = (i0 as u64 + 1, j0 as u64 + 1);
        if j < i || (i + j) % 2 != 0 {
            return 0.0;
        }
        let k = if j == nn { 1.0 } else { 2.0 };
        let ratio = product_ratio(&factors(i, j - 1), &factors(2 * nn - j, 2 * nn - i + 1));
        (k * ratio).sqrt()
    });

    let mut l = DMatrix::zeros(n + 1, n + 1);
    for i in 1..n {
        let fi = i as f64;
        l[(i - 1, i - 1)] = ((2.0 * n as f64 - fi + 1.0) / 2.0).sqrt();
        l[(i, i - 1)] = -(fi / 2.0).sqrt();
    }
    l[(n - 1, n - 1)] = ((n as f64 + 1.0) / 2.0).sqrt();
    l[(n, n - 1)] = -(n as f64).sqrt();

    let mut d = DMatrix::zeros(n + 1, n + 1);
    for i in 1..n {
        let fi = i as f64;
        d[(i - 1, i - 1)] = (2.0 * n as f64 - 1.0) / 2.0;
        let off = 0.5 * (fi * (2.0 * n as f64 - fi)).sqrt();
        d[(i, i - 1)] = off;
        d[(i - 1, i)] = off;
    }
    d[(n - 1, n - 1)] = (n as f64 - 1.0) / 2.0;
    d[(n, n)] = 2.0 * n as f64;

    let mut s = DMatrix::zeros(n, n);
    for i in 1..n {
        s[(i - 1, i - 1)] = ((2 * n - i) as f64).sqrt();
        s[(i - 1, i)] = -(i as f64).sqrt();
    }
    s[(n - 1, n - 1)] = ((2 * n) as f64).sqrt();

    Ok(ProofFactors { n, r, l, d, s })
}

/// Normalized residuals of the three identities plus the check of `D`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProofReport {
    pub n: usize,
    /// `||BR - RA|| / ||BR||`, `||C + LL^T|| / ||C||`, `||SD° - A(n)S|| / ||SD°||`
    /// (Frobenius norms).
    pub residuals: [f64; 3],
    /// `max |(2nI - L^T L) - D_listed|` entrywise.
    pub d_entry_mismatch: f64,
    pub tol: f64,
    pub pass: bool,
}

fn relative(lhs: &DMatrix<f64>, rhs: &DMatrix<f64>) -> f64 {
    let scale = lhs.norm();
    let diff = (lhs - rhs).norm();
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Evaluates every identity for `n`. `pass` requires each residual to be at
/// most `tol` and the `D` entries to agree within [`D_ENTRY_TOL`].
pub fn verify_proof_identities(n: usize, tol: f64) -> Result<ProofReport> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    let f = build_proof_factors(n)?;
    let nf = n as f64;
    let a_n = dense(&build_a(n)?);
    let a_next = dense(&build_a(n + 1)?);

    let b = a_next.view((0, 0), (n, n)) - DMatrix::identity(n, n) * nf;
    let a = &a_n - DMatrix::identity(n, n) * (nf - 1.0);
    let r1 = relative(&(&b * &f.r), &(&f.r * &a));

    let c = &a_next - DMatrix::identity(n + 1, n + 1) * (2.0 * nf);
    let llt = &f.l * f.l.transpose();
    let r2 = relative(&c, &(-llt));

    let d_def = DMatrix::identity(n + 1, n + 1) * (2.0 * nf) - f.l.transpose() * &f.l;
    let d_entry_mismatch = (&d_def - &f.d).amax();
    let d_sub = d_def.view((0, 0), (n, n)).into_owned();
    let r3 = relative(&(&f.s * &d_sub), &(&a_n * &f.s));

    let residuals = [r1, r2, r3];
    let pass = residuals.iter().all(|r| *r <= tol) && d_entry_mismatch <= D_ENTRY_TOL;
    Ok(ProofReport {
        n,
        residuals,
        d_entry_mismatch,
        tol,
        pass,
    })
}
