//! Inputs shared by the criterion benchmarks.

use jacobi_core::{validate_interlacing, SpectrumPair, TestMatrixSpec};

/// Exact spectra of `A(n)` and its leading principal submatrix.
pub fn a_spectra(n: usize) -> SpectrumPair {
    let spec = TestMatrixSpec::new(n, 0.0, 1.0).expect("n >= 2");
    validate_interlacing(&spec.spectrum(), &spec.sub_spectrum()).expect("interlaced")
}

pub const ORDERS: [usize; 4] = [10, 50, 100, 200];
