//! Explicit matrix families with closed-form spectra.

use super::{GeneralTridiagonal, SymmetricTridiagonal};
use crate::error::{Error, Result};

/// Off-diagonal magnitudes of `A(n)`: `sqrt(i(2n-i-1))/2` for `i < n-1` and
/// `sqrt(n(n-1)/2)` for the last one. Integer products are formed exactly.
fn a_offdiag(n: usize) -> Vec<f64> {
    let n64 = n as u64;
    let mut off: Vec<f64> = (1..n64 - 1)
        .map(|i| 0.5 * ((i * (2 * n64 - i - 1)) as f64).sqrt())
        .collect();
    off.push(((n64 * (n64 - 1) / 2) as f64).sqrt());
    off
}

fn check_order(what: &'static str, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Size {
            what,
            order: n,
            min: 2,
        });
    }
    Ok(())
}

/// The test matrix `A(n)`: constant diagonal `n-1` and positive off-diagonals.
///
/// Its eigenvalues are `0, 2, ..., 2n-2` and those of its leading principal
/// submatrix are `1, 3, ..., 2n-3`.
pub fn build_a(n: usize) -> Result<SymmetricTridiagonal> {
    check_order("A(n)", n)?;
    SymmetricTridiagonal::new(vec![(n - 1) as f64; n], a_offdiag(n))
}

/// `B(n) = A(n) + I` with negated off-diagonals, the matrix of the
/// spring-mass chain. Spectrum `1, 3, ..., 2n-1`; submatrix `2, 4, ..., 2n-2`.
pub fn build_b_spring(n: usize) -> Result<SymmetricTridiagonal> {
    check_order("B(n)", n)?;
    SymmetricTridiagonal::new(
        vec![n as f64; n],
        a_offdiag(n).into_iter().map(|b| -b).collect(),
    )
}

/// Parameters of the family `W_n`: order, smallest eigenvalue and half gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestMatrixSpec {
    n: usize,
    a0: f64,
    c: f64,
}

impl TestMatrixSpec {
    pub fn new(n: usize, a0: f64, c: f64) -> Result<Self> {
        check_order("W_n", n)?;
        if !a0.is_finite() {
            return Err(Error::Parameter(format!("a0 must be finite, got {a0}")));
        }
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Parameter(format!(
                "c must be positive and finite, got {c}"
            )));
        }
        Ok(Self { n, a0, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Common diagonal value `a0 + c(n-1)`.
    pub fn diagonal(&self) -> f64 {
        self.a0 + self.c * (self.n - 1) as f64
    }

    /// `a0 + 2c(i-1)` for `i = 1..=n`.
    pub fn spectrum(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.a0 + 2.0 * self.c * i as f64)
            .collect()
    }

    /// `a0 + c + 2c(i-1)` for `i = 1..=n-1`.
    pub fn sub_spectrum(&self) -> Vec<f64> {
        (0..self.n - 1)
            .map(|i| self.a0 + self.c + 2.0 * self.c * i as f64)
            .collect()
    }
}

/// `W_n = a0 I + c (A(n) - (n-1) I) + c(n-1) I` with negative off-diagonals.
pub fn build_w(spec: &TestMatrixSpec) -> Result<SymmetricTridiagonal> {
    let c = spec.c;
    SymmetricTridiagonal::new(
        vec![spec.diagonal(); spec.n],
        a_offdiag(spec.n).into_iter().map(|b| -(c * b)).collect(),
    )
}

/// Kac-Sylvester (Clement) matrix of order `n+1` with every diagonal entry
/// equal to `shift`, superdiagonal `n, n-1, ..., 1` and subdiagonal
/// `1, 2, ..., n`. With `shift = 0` the spectrum is `{2k - n}` for `k = 0..=n`.
pub fn build_kac(n: usize, shift: f64) -> Result<GeneralTridiagonal> {
    if n < 1 {
        return Err(Error::Size {
            what: "the Kac-Sylvester matrix K_n",
            order: n,
            min: 1,
        });
    }
    GeneralTridiagonal::new(
        vec![shift; n + 1],
        (1..=n).map(|i| (n + 1 - i) as f64).collect(),
        (1..=n).map(|i| i as f64).collect(),
    )
}

/// Closed-form spectrum of `build_kac(n, shift)`.
pub fn kac_spectrum(n: usize, shift: f64) -> Vec<f64> {
    (0..=n)
        .map(|k| shift + 2.0 * k as f64 - n as f64)
        .collect()
}
