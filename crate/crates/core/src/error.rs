use thiserror::Error;

/// Errors raised by the matrix generators, solvers and verifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} requires order at least {min}, got {order}")]
    Size {
        what: &'static str,
        order: usize,
        min: usize,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("inconsistent shape: {0}")]
    Shape(String),

    #[error("index {index} out of range 1..={max}")]
    Index { index: usize, max: usize },

    #[error("matrix is not Jacobian: off-diagonal entry {index} is zero")]
    NotJacobian { index: usize },

    #[error("spectra do not strictly interlace at index {index}: {detail}")]
    Interlacing { index: usize, detail: String },

    #[error("reconstruction broke down at step {step}: off-diagonal magnitude {value:e} below threshold {threshold:e}")]
    Breakdown {
        step: usize,
        value: f64,
        threshold: f64,
    },

    #[error("n = {n} exceeds binary64 range; largest supported n is {max_n}")]
    Range { n: usize, max_n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
