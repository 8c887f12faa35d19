//! Tridiagonal test matrices with equally spaced, uniformly interlaced
//! spectra, and the tools to exercise them:
//!
//! * [`tridiag`]: matrix types and the explicit families `A(n)`, `B(n)`,
//!   `W_n` and the Kac-Sylvester matrix.
//! * [`eig`]: Sturm-count bisection eigenvalues.
//! * [`iep`]: Jacobian reconstruction from two interlaced spectra.
//! * [`springmass`]: closed-form masses and stiffnesses for a chain with
//!   prescribed odd/even frequencies.
//! * [`proofcheck`]: the factor matrices behind the spectrum of `A(n)` and
//!   checks of their identities.
//! * [`sweep`]: reconstruction error versus order, written as CSV.

// `!(x > 0.0)` style checks are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eig;
pub mod error;
pub mod iep;
pub mod io;
pub mod proofcheck;
mod ratio;
pub mod springmass;
pub mod sweep;
pub mod tridiag;

pub use eig::{char_poly_eval, eigenvalues, gershgorin_bounds, min_gap, negcount, Spectrum};
pub use error::{Error, Result};
pub use iep::{
    last_components, reconstruct_jacobian, reconstruction_residual, validate_interlacing,
    LastComponents, SpectrumPair, Variant,
};
pub use proofcheck::{build_proof_factors, verify_proof_identities, ProofFactors, ProofReport};
pub use springmass::{
    forward_frequencies, growth_ratios, masses_by_recurrence, solve_inverse_spring_mass,
    BoundaryCondition, SpringMassSystem,
};
pub use sweep::{BenchRecord, Family};
pub use tridiag::{
    build_a, build_b_spring, build_kac, build_w, GeneralTridiagonal, SymmetricTridiagonal,
    TestMatrixSpec,
};
