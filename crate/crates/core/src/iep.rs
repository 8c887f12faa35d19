//! Reconstruction of a Jacobian matrix from its spectrum and the spectrum of
//! its leading principal submatrix.
//!
//! The last components of the orthonormal eigenvectors follow from the two
//! spectra alone. Running the symmetric Lanczos recurrence on `diag(lambda)`
//! from that vector produces the matrix with its last row first, so the
//! computed entries are reversed before returning.

use std::fmt;
use std::str::FromStr;

use crate::eig::eigenvalues;
use crate::error::{Error, Result};
use crate::tridiag::SymmetricTridiagonal;

/// Eigenvalues `lambda` of a matrix and `mu` of its leading principal
/// submatrix, strictly interlaced.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumPair {
    lambda: Vec<f64>,
    mu: Vec<f64>,
}

impl SpectrumPair {
    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn order(&self) -> usize {
        self.lambda.len()
    }

    /// Applies `x -> scale * x + shift` to both spectra.
    pub fn affine(&self, scale: f64, shift: f64) -> Result<Self> {
        let f = |v: &[f64]| v.iter().map(|x| scale * x + shift).collect::<Vec<_>>();
        validate_interlacing(&f(&self.lambda), &f(&self.mu))
    }
}

/// Checks `lambda_1 < mu_1 < lambda_2 < ... < mu_{n-1} < lambda_n`.
///
/// The reported index `i` is one-based and names the block
/// `lambda_i < mu_i < lambda_{i+1}` containing the first violation.
pub fn validate_interlacing(lambda: &[f64], mu: &[f64]) -> Result<SpectrumPair> {
    if lambda.len() < 2 {
        return Err(Error::Size {
            what: "an interlaced spectrum pair",
            order: lambda.len(),
            min: 2,
        });
    }
    if mu.len() + 1 != lambda.len() {
        return Err(Error::Shape(format!(
            "{} eigenvalues need {} submatrix eigenvalues, got {}",
            lambda.len(),
            lambda.len() - 1,
            mu.len()
        )));
    }
    if let Some(x) = lambda.iter().chain(mu).find(|x| !x.is_finite()) {
        return Err(Error::Parameter(format!("spectrum value {x} is not finite")));
    }
    for (i, m) in mu.iter().enumerate() {
        let (l, r) = (lambda[i], lambda[i + 1]);
        if !(l < *m && *m < r) {
            return Err(Error::Interlacing {
                index: i + 1,
                detail: format!("need {l} < {m} < {r}"),
            });
        }
    }
    Ok(SpectrumPair {
        lambda: lambda.to_vec(),
        mu: mu.to_vec(),
    })
}

/// Positive last components of the orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct LastComponents {
    weights: Vec<f64>,
}

impl LastComponents {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn squared_sum(&self) -> f64 {
        self.weights.iter().map(|w| w * w).sum()
    }
}

/// `w_i^2 = prod_j (lambda_i - mu_j) / prod_{j != i} (lambda_i - lambda_j)`.
///
/// Evaluated as a sum of logarithms; interlacing makes every ratio positive.
pub fn last_components(p: &SpectrumPair) -> LastComponents {
    let lambda = &p.lambda;
    let weights = lambda
        .iter()
        .enumerate()
        .map(|(i, &li)| {
            let num: f64 = p.mu.iter().map(|&m| (li - m).abs().ln()).sum();
            let den: f64 = lambda
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &lj)| (li - lj).abs().ln())
                .sum();
            (0.5 * (num - den)).exp()
        })
        .collect();
    LastComponents { weights }
}

/// Orthogonalization used inside the Lanczos recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Three-term recurrence only.
    Plain,
    /// Three-term recurrence followed by two Gram-Schmidt passes against
    /// every earlier basis vector.
    FullReorth,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Plain, Variant::FullReorth];

    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::FullReorth => "full_reorth",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Variant::Plain),
            "full_reorth" => Ok(Variant::FullReorth),
            other => Err(Error::Parameter(format!(
                "unknown variant {other:?}, expected plain or full_reorth"
            ))),
        }
    }
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Rebuilds the sign-normalized Jacobian matrix with spectrum `lambda` whose
/// leading principal submatrix has spectrum `mu`.
pub fn reconstruct_jacobian(p: &SpectrumPair, variant: Variant) -> Result<SymmetricTridiagonal> {
    let lambda = &p.lambda;
    let n = lambda.len();
    let radius = lambda[0].abs().max(lambda[n - 1].abs());
    let threshold = f64::EPSILON * radius;

    let mut q = last_components(p).weights;
    let norm = dot(&q, &q).sqrt();
    q.iter_mut().for_each(|x| *x /= norm);

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut alphas = Vec::with_capacity(n);
    let mut betas: Vec<f64> = Vec::with_capacity(n - 1);
    let mut prev: Option<Vec<f64>> = None;
    for step in 1..=n {
        let mut v: Vec<f64> = lambda.iter().zip(&q).map(|(l, x)| l * x).collect();
        let alpha = dot(&q, &v);
        alphas.push(alpha);
        if step == n {
            break;
        }
        axpy(-alpha, &q, &mut v);
        if let (Some(p), Some(&beta)) = (&prev, betas.last()) {
            axpy(-beta, p, &mut v);
        }
        if variant == Variant::FullReorth {
            for _ in 0..2 {
                for b in basis.iter().chain(std::iter::once(&q)) {
                    let h = dot(b, &v);
                    axpy(-h, b, &mut v);
                }
            }
        }
        let beta = dot(&v, &v).sqrt();
        if !(beta > threshold) {
            return Err(Error::Breakdown {
                step,
                value: beta,
                threshold,
            });
        }
        betas.push(beta);
        v.iter_mut().for_each(|x| *x /= beta);
        if variant == Variant::FullReorth {
            basis.push(q.clone());
        }
        prev = Some(std::mem::replace(&mut q, v));
    }

    alphas.reverse();
    betas.reverse();
    SymmetricTridiagonal::new(alphas, betas.into_iter().map(|b| -b).collect())
}

/// `(max |lambda(T) - lambda|, max |lambda(T°) - mu|)` with eigenvalues
/// computed to bracket width `tol`.
pub fn reconstruction_residual(
    t: &SymmetricTridiagonal,
    p: &SpectrumPair,
    tol: f64,
) -> Result<(f64, f64)> {
    if t.order() != p.order() {
        return Err(Error::Shape(format!(
            "matrix order {} does not match spectrum length {}",
            t.order(),
            p.order()
        )));
    }
    let full = eigenvalues(t, tol)?.max_deviation(&p.lambda)?;
    let sub = eigenvalues(&t.leading_principal_submatrix()?, tol)?.max_deviation(&p.mu)?;
    Ok((full, sub))
}
