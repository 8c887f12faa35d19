//! Symmetric and general tridiagonal matrices.
//!
//! Off-diagonal entries are stored as signed values of the `(i, i+1)`
//! position. A Jacobian matrix in the usual convention has every stored
//! off-diagonal strictly negative, i.e. the entries read `-b_i` with `b_i > 0`.

mod families;

pub use families::{build_a, build_b_spring, build_kac, build_w, kac_spectrum, TestMatrixSpec};

use crate::error::{Error, Result};

/// Real symmetric tridiagonal matrix of order `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymmetricTridiagonal {
    /// Builds a matrix from its diagonal (length `n`) and signed
    /// off-diagonal (length `n - 1`).
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Size {
                what: "a tridiagonal matrix",
                order: 0,
                min: 1,
            });
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Shape(format!(
                "order {} needs {} off-diagonal entries, got {}",
                diag.len(),
                diag.len() - 1,
                offdiag.len()
            )));
        }
        if let Some(i) = diag.iter().chain(&offdiag).position(|x| !x.is_finite()) {
            return Err(Error::Parameter(format!(
                "entry {} is not finite",
                i + 1
            )));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// True when every off-diagonal entry is nonzero.
    pub fn is_jacobian(&self) -> bool {
        self.offdiag.iter().all(|&b| b != 0.0)
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    /// Entry `(i, j)`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match i.abs_diff(j) {
            0 => self.diag[i],
            1 => self.offdiag[i.min(j)],
            _ => 0.0,
        }
    }

    /// Drops the last row and column.
    pub fn leading_principal_submatrix(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 {
            return Err(Error::Size {
                what: "the leading principal submatrix",
                order: n,
                min: 2,
            });
        }
        Ok(Self {
            diag: self.diag[..n - 1].to_vec(),
            offdiag: self.offdiag[..n - 2].to_vec(),
        })
    }

    /// Similarity by `diag(1,..,1,-1,..,-1)` with `m` leading ones: negates
    /// the `m`-th off-diagonal entry (one-based, `1 <= m <= n-1`).
    pub fn sign_flip(&self, m: usize) -> Result<Self> {
        let max = self.order() - 1;
        if m == 0 || m > max {
            return Err(Error::Index { index: m, max });
        }
        let mut out = self.clone();
        out.offdiag[m - 1] = -out.offdiag[m - 1];
        Ok(out)
    }

    /// Flips signs until every off-diagonal entry is negative.
    pub fn normalize_signs(&self) -> Result<Self> {
        if let Some(i) = self.offdiag.iter().position(|&b| b == 0.0) {
            return Err(Error::NotJacobian { index: i + 1 });
        }
        let mut out = self.clone();
        for m in 1..=self.offdiag.len() {
            if out.offdiag[m - 1] > 0.0 {
                out = out.sign_flip(m)?;
            }
        }
        Ok(out)
    }

    /// Returns `self + s I`.
    pub fn shifted(&self, s: f64) -> Self {
        Self {
            diag: self.diag.iter().map(|a| a + s).collect(),
            offdiag: self.offdiag.clone(),
        }
    }

    /// Largest entrywise absolute difference to another matrix of the same order.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.order() != other.order() {
            return Err(Error::Shape(format!(
                "orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(self
            .diag
            .iter()
            .zip(&other.diag)
            .chain(self.offdiag.iter().zip(&other.offdiag))
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Real tridiagonal matrix without symmetry.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralTridiagonal {
    diag: Vec<f64>,
    superdiag: Vec<f64>,
    subdiag: Vec<f64>,
}

impl GeneralTridiagonal {
    pub fn new(diag: Vec<f64>, superdiag: Vec<f64>, subdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Size {
                what: "a tridiagonal matrix",
                order: 0,
                min: 1,
            });
        }
        let want = diag.len() - 1;
        if superdiag.len() != want || subdiag.len() != want {
            return Err(Error::Shape(format!(
                "order {} needs {} super- and sub-diagonal entries, got {} and {}",
                diag.len(),
                want,
                superdiag.len(),
                subdiag.len()
            )));
        }
        if diag
            .iter()
            .chain(&superdiag)
            .chain(&subdiag)
            .any(|x| !x.is_finite())
        {
            return Err(Error::Parameter("entries must be finite".into()));
        }
        Ok(Self {
            diag,
            superdiag,
            subdiag,
        })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn superdiag(&self) -> &[f64] {
        &self.superdiag
    }

    pub fn subdiag(&self) -> &[f64] {
        &self.subdiag
    }

    /// Diagonal similarity to a symmetric tridiagonal matrix with
    /// off-diagonals `sign(super) * sqrt(super * sub)`.
    ///
    /// Requires `super[i] * sub[i] >= 0` for all `i`. A zero product makes the
    /// matrix block triangular, and the zero coupling keeps the spectrum.
    pub fn symmetrized(&self) -> Result<SymmetricTridiagonal> {
        let offdiag = self
            .superdiag
            .iter()
            .zip(&self.subdiag)
            .enumerate()
            .map(|(i, (&u, &l))| {
                let p = u * l;
                if p < 0.0 {
                    Err(Error::Parameter(format!(
                        "off-diagonal pair {} has negative product; spectrum may be complex",
                        i + 1
                    )))
                } else {
                    Ok(p.sqrt().copysign(u))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SymmetricTridiagonal::new(self.diag.clone(), offdiag)
    }

    pub fn leading_principal_submatrix(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 {
            return Err(Error::Size {
                what: "the leading principal submatrix",
                order: n,
                min: 2,
            });
        }
        Ok(Self {
            diag: self.diag[..n - 1].to_vec(),
            superdiag: self.superdiag[..n - 2].to_vec(),
            subdiag: self.subdiag[..n - 2].to_vec(),
        })
    }
}
