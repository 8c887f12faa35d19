//! JSON documents for matrices and spectra.
//!
//! Reals are written by `serde_json` in shortest round-trip form, which never
//! needs more than 17 significant digits and parses back to the same `f64`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iep::{validate_interlacing, SpectrumPair};
use crate::tridiag::{GeneralTridiagonal, SymmetricTridiagonal};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatrixDocument {
    SymmetricTridiagonal {
        order: usize,
        diag: Vec<f64>,
        offdiag: Vec<f64>,
    },
    GeneralTridiagonal {
        order: usize,
        diag: Vec<f64>,
        superdiag: Vec<f64>,
        subdiag: Vec<f64>,
    },
}

/// A parsed and validated matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix {
    Symmetric(SymmetricTridiagonal),
    General(GeneralTridiagonal),
}

impl From<&SymmetricTridiagonal> for MatrixDocument {
    fn from(t: &SymmetricTridiagonal) -> Self {
        MatrixDocument::SymmetricTridiagonal {
            order: t.order(),
            diag: t.diag().to_vec(),
            offdiag: t.offdiag().to_vec(),
        }
    }
}

impl From<&GeneralTridiagonal> for MatrixDocument {
    fn from(t: &GeneralTridiagonal) -> Self {
        MatrixDocument::GeneralTridiagonal {
            order: t.order(),
            diag: t.diag().to_vec(),
            superdiag: t.superdiag().to_vec(),
            subdiag: t.subdiag().to_vec(),
        }
    }
}

impl TryFrom<MatrixDocument> for Matrix {
    type Error = Error;

    fn try_from(doc: MatrixDocument) -> Result<Self> {
        let check = |order: usize, len: usize| {
            if order == len {
                Ok(())
            } else {
                Err(Error::Shape(format!(
                    "declared order {order} but diagonal has {len} entries"
                )))
            }
        };
        match doc {
            MatrixDocument::SymmetricTridiagonal {
                order,
                diag,
                offdiag,
            } => {
                check(order, diag.len())?;
                Ok(Matrix::Symmetric(SymmetricTridiagonal::new(diag, offdiag)?))
            }
            MatrixDocument::GeneralTridiagonal {
                order,
                diag,
                superdiag,
                subdiag,
            } => {
                check(order, diag.len())?;
                Ok(Matrix::General(GeneralTridiagonal::new(
                    diag, superdiag, subdiag,
                )?))
            }
        }
    }
}

impl Matrix {
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: MatrixDocument = serde_json::from_str(s)
            .map_err(|e| Error::Parameter(format!("malformed matrix document: {e}")))?;
        doc.try_into()
    }

    pub fn to_json(&self) -> String {
        let doc = match self {
            Matrix::Symmetric(t) => MatrixDocument::from(t),
            Matrix::General(t) => MatrixDocument::from(t),
        };
        serde_json::to_string_pretty(&doc).expect("finite entries serialize")
    }
}

/// `{"lambda": [...], "mu": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectraDocument {
    pub lambda: Vec<f64>,
    pub mu: Vec<f64>,
}

impl SpectraDocument {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| Error::Parameter(format!("malformed spectra document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite values serialize")
    }

    pub fn validate(&self) -> Result<SpectrumPair> {
        validate_interlacing(&self.lambda, &self.mu)
    }
}

impl From<&SpectrumPair> for SpectraDocument {
    fn from(p: &SpectrumPair) -> Self {
        Self {
            lambda: p.lambda().to_vec(),
            mu: p.mu().to_vec(),
        }
    }
}
