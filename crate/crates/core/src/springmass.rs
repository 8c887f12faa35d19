//! Masses and stiffnesses of a fixed-free spring-mass chain whose natural
//! frequencies are `1, 3, ..., 2n-1` (right end free) and `2, 4, ..., 2n-2`
//! (right end fixed).
//!
//! With `alpha^2 = m_n`:
//!
//! ```text
//! m_{n-i}  = 2 alpha^2 (n+i-1)! (n-i-1)! / ((n-1)!)^2      i = 1..n-1
//! k_{i+1}  =   alpha^2 i! (2n-i-1)! / ((n-1)!)^2           i = 0..n-1
//! ```
//!
//! Both are evaluated as cancelled products of at most `n` integers.

use crate::eig::{eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::ratio::{factors, product_ratio};
use crate::tridiag::SymmetricTridiagonal;

/// Which end condition applies at the right-hand end of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCondition {
    /// Last mass free; frequencies are the eigenvalues of `M^-1/2 C M^-1/2`.
    FreeEnd,
    /// Last mass clamped; frequencies come from the leading principal submatrix.
    FixedEnd,
}

/// A chain of `n` masses joined by `n` springs, the first spring anchored
/// to a wall.
#[derive(Debug, Clone, PartialEq)]
pub struct SpringMassSystem {
    alpha: f64,
    masses: Vec<f64>,
    stiffnesses: Vec<f64>,
}

impl SpringMassSystem {
    /// Builds a system from explicit masses and stiffnesses; `alpha` is set to
    /// `sqrt(m_n)`.
    pub fn new(masses: Vec<f64>, stiffnesses: Vec<f64>) -> Result<Self> {
        if masses.len() < 2 {
            return Err(Error::Size {
                what: "a spring-mass chain",
                order: masses.len(),
                min: 2,
            });
        }
        if stiffnesses.len() != masses.len() {
            return Err(Error::Shape(format!(
                "{} masses need {} stiffnesses, got {}",
                masses.len(),
                masses.len(),
                stiffnesses.len()
            )));
        }
        if let Some(x) = masses
            .iter()
            .chain(&stiffnesses)
            .find(|x| !(x.is_finite() && **x > 0.0))
        {
            return Err(Error::Parameter(format!(
                "masses and stiffnesses must be positive and finite, got {x}"
            )));
        }
        Ok(Self {
            alpha: masses[masses.len() - 1].sqrt(),
            masses,
            stiffnesses,
        })
    }

    pub fn n(&self) -> usize {
        self.masses.len()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `m_1..m_n`.
    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    /// `k_1..k_n`.
    pub fn stiffnesses(&self) -> &[f64] {
        &self.stiffnesses
    }
}

fn check_params(n: usize, alpha: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Size {
            what: "a spring-mass chain",
            order: n,
            min: 2,
        });
    }
    let a2 = alpha * alpha;
    if !(alpha > 0.0 && a2 > 0.0 && a2.is_finite()) {
        return Err(Error::Parameter(format!(
            "alpha must be positive with alpha^2 representable, got {alpha}"
        )));
    }
    Ok(a2)
}

/// `m_{n-i} / alpha^2`.
fn mass_ratio(n: u64, i: u64) -> f64 {
    if i == 0 {
        return 1.0;
    }
    2.0 * product_ratio(&factors(n, n + i - 1), &factors(n - i, n - 1))
}

/// `k_{i+1} / alpha^2`.
fn stiffness_ratio(n: u64, i: u64) -> f64 {
    product_ratio(&factors(n, 2 * n - i - 1), &factors(i + 1, n - 1))
}

/// `k_1 / alpha^2 = (2n-1)! / ((n-1)!)^2`, the largest coefficient.
fn leading_ratios(n: u64) -> (f64, f64) {
    (mass_ratio(n, n - 1), stiffness_ratio(n, 0))
}

/// Largest chain length whose masses and stiffnesses fit in binary64 for
/// the given `alpha^2`.
fn max_supported_n(a2: f64) -> usize {
    let mut n = 2u64;
    loop {
        let (m, k) = leading_ratios(n + 1);
        if !((a2 * m).is_finite() && (a2 * k).is_finite()) {
            return n as usize;
        }
        n += 1;
    }
}

/// Closed-form masses and stiffnesses for the chain of length `n`.
pub fn solve_inverse_spring_mass(n: usize, alpha: f64) -> Result<SpringMassSystem> {
    let a2 = check_params(n, alpha)?;
    let n64 = n as u64;
    let (m1, k1) = leading_ratios(n64);
    if !((a2 * m1).is_finite() && (a2 * k1).is_finite()) {
        return Err(Error::Range {
            n,
            max_n: max_supported_n(a2),
        });
    }
    // masses[j] = m_{j+1} = m_{n-i} with i = n-1-j
    let masses = (0..n64).map(|j| a2 * mass_ratio(n64, n64 - 1 - j)).collect();
    let stiffnesses = (0..n64).map(|i| a2 * stiffness_ratio(n64, i)).collect();
    Ok(SpringMassSystem {
        alpha,
        masses,
        stiffnesses,
    })
}

/// Masses from back-substitution through `B(n) u = (k_1 / u_1, 0, ..., 0)`
/// with `u_i = sqrt(m_i)`, starting from `u_n = alpha`.
///
/// Independent of the factorial closed form; used to cross-check it.
pub fn masses_by_recurrence(n: usize, alpha: f64) -> Result<Vec<f64>> {
    let a2 = check_params(n, alpha)?;
    let nf = n as f64;
    let mut u = vec![0.0; n + 1]; // one-based
    u[n] = alpha;
    // last equation: -b_{n-1} u_{n-1} + n u_n = 0, b_{n-1} = sqrt(n(n-1)/2)
    u[n - 1] = 2f64.sqrt() * (nf / (nf - 1.0)).sqrt() * alpha;
    if n >= 3 {
        // equation n-1: -b_{n-2} u_{n-2} + n u_{n-1} - b_{n-1} u_n = 0
        let b_last = (nf * (nf - 1.0) / 2.0).sqrt();
        let b_prev = 0.5 * ((nf - 2.0) * (nf + 1.0)).sqrt();
        u[n - 2] = (nf * u[n - 1] - b_last * u[n]) / b_prev;
    }
    // equation i for 2 <= i <= n-2
    for i in (2..=n.saturating_sub(2)).rev() {
        let fi = i as f64;
        u[i - 1] = (2.0 * nf * u[i] - (fi * (2.0 * nf - fi - 1.0)).sqrt() * u[i + 1])
            / ((fi - 1.0) * (2.0 * nf - fi)).sqrt();
    }
    let masses: Vec<f64> = u[1..].iter().map(|x| x * x).collect();
    if masses.iter().any(|m| !m.is_finite()) {
        return Err(Error::Range {
            n,
            max_n: max_supported_n(a2),
        });
    }
    Ok(masses)
}

/// Stiffness matrix `C` and the diagonal of the mass matrix `M`.
pub fn assemble_system_matrices(s: &SpringMassSystem) -> (SymmetricTridiagonal, Vec<f64>) {
    let k = &s.stiffnesses;
    let n = k.len();
    let diag = (0..n)
        .map(|i| if i + 1 < n { k[i] + k[i + 1] } else { k[i] })
        .collect();
    let offdiag = k[1..].iter().map(|x| -x).collect();
    let c = SymmetricTridiagonal::new(diag, offdiag)
        .expect("positive finite stiffnesses give a well-formed matrix");
    (c, s.masses.clone())
}

/// `M^-1/2 C M^-1/2`.
pub fn mass_normalized_matrix(s: &SpringMassSystem) -> SymmetricTridiagonal {
    let (c, m) = assemble_system_matrices(s);
    let diag = c.diag().iter().zip(&m).map(|(x, mi)| x / mi).collect();
    let offdiag = c
        .offdiag()
        .iter()
        .zip(m.windows(2))
        .map(|(x, w)| x / (w[0] * w[1]).sqrt())
        .collect();
    SymmetricTridiagonal::new(diag, offdiag).expect("finite entries")
}

/// Natural frequencies (eigenvalues) for the chosen end condition.
pub fn forward_frequencies(
    s: &SpringMassSystem,
    bc: BoundaryCondition,
    tol: f64,
) -> Result<Spectrum> {
    let b = mass_normalized_matrix(s);
    match bc {
        BoundaryCondition::FreeEnd => eigenvalues(&b, tol),
        BoundaryCondition::FixedEnd => eigenvalues(&b.leading_principal_submatrix()?, tol),
    }
}

/// `(m_n / m_1, k_n / k_1)`.
pub fn growth_ratios(s: &SpringMassSystem) -> (f64, f64) {
    let n = s.n();
    (
        s.masses[n - 1] / s.masses[0],
        s.stiffnesses[n - 1] / s.stiffnesses[0],
    )
}
