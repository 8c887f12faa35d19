//! Eigenvalues of symmetric tridiagonal matrices by Sturm-count bisection.

use crate::error::{Error, Result};
use crate::tridiag::{GeneralTridiagonal, SymmetricTridiagonal};

/// Sorted eigenvalues together with the bracket width they were resolved to.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    pub fn new(values: Vec<f64>, tol: f64) -> Result<Self> {
        if !(tol > 0.0) {
            return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
        }
        if values.windows(2).any(|w| !(w[0] <= w[1])) {
            return Err(Error::Parameter("spectrum values must be sorted".into()));
        }
        Ok(Self { values, tol })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min_gap(&self) -> Result<f64> {
        min_gap(&self.values)
    }

    /// Largest absolute deviation from `target`, which must have the same length.
    pub fn max_deviation(&self, target: &[f64]) -> Result<f64> {
        if target.len() != self.values.len() {
            return Err(Error::Shape(format!(
                "spectrum has {} values, target has {}",
                self.values.len(),
                target.len()
            )));
        }
        Ok(self
            .values
            .iter()
            .zip(target)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Smallest difference between consecutive entries of a sorted sequence.
pub fn min_gap(values: &[f64]) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::Size {
            what: "a spacing",
            order: values.len(),
            min: 2,
        });
    }
    Ok(values
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min))
}

/// Interval `[lo, hi]` containing every eigenvalue, from Gershgorin discs.
pub fn gershgorin_bounds(t: &SymmetricTridiagonal) -> (f64, f64) {
    let a = t.diag();
    let b = t.offdiag();
    let n = a.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { b[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { b[i].abs() } else { 0.0 };
        lo = lo.min(a[i] - left - right);
        hi = hi.max(a[i] + left + right);
    }
    (lo, hi)
}

/// Number of eigenvalues strictly below `x`.
///
/// Counts negative pivots of the LDL^T factorization of `T - xI`. A zero pivot
/// that has to be divided by is replaced with `+eps * (1 + |b|)`, the limit
/// from below in `x`, so an eigenvalue equal to `x` is never counted.
pub fn negcount(t: &SymmetricTridiagonal, x: f64) -> usize {
    let a = t.diag();
    let b = t.offdiag();
    let mut d = a[0] - x;
    let mut count = usize::from(d < 0.0);
    for i in 1..a.len() {
        if d == 0.0 {
            d = f64::EPSILON * (1.0 + b[i - 1].abs());
        }
        d = (a[i] - x) - b[i - 1] * b[i - 1] / d;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Default bracket width: `1e-10 * max(1, spectral radius bound)`.
pub fn default_tol(t: &SymmetricTridiagonal) -> f64 {
    let (lo, hi) = gershgorin_bounds(t);
    1e-10 * lo.abs().max(hi.abs()).max(1.0)
}

/// All eigenvalues, ascending, each bisected to a bracket of width at most
/// `tol` (or to adjacent floating-point numbers, whichever comes first).
pub fn eigenvalues(t: &SymmetricTridiagonal, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = t.order();
    let (glo, ghi) = gershgorin_bounds(t);
    let pad = f64::EPSILON * glo.abs().max(ghi.abs()).max(1.0);
    let (glo, ghi) = (glo - pad, ghi + pad);

    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        // The k-th eigenvalue (zero-based) is the smallest x with negcount(x) > k.
        let mut lo = glo;
        let mut hi = ghi;
        loop {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= tol || mid <= lo || mid >= hi {
                break;
            }
            if negcount(t, mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        values.push(0.5 * (lo + hi));
    }
    Spectrum::new(values, tol)
}

/// Eigenvalues of a general tridiagonal matrix whose off-diagonal products
/// are nonnegative, via its symmetrization.
pub fn general_eigenvalues(t: &GeneralTridiagonal, tol: f64) -> Result<Spectrum> {
    eigenvalues(&t.symmetrized()?, tol)
}

/// `det(T - xI)` by the three-term recurrence. Intended for small orders;
/// nothing guards against overflow.
pub fn char_poly_eval(t: &SymmetricTridiagonal, x: f64) -> f64 {
    let a = t.diag();
    let b = t.offdiag();
    let mut prev = 1.0;
    let mut cur = a[0] - x;
    for i in 1..a.len() {
        let next = (a[i] - x) * cur - b[i - 1] * b[i - 1] * prev;
        prev = cur;
        cur = next;
    }
    cur
}
