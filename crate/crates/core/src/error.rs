//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by cone, Jordan-algebra and special-function operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("jordan elements belong to different backends: {0} vs {1}")]
    BackendMismatch(&'static str, &'static str),
    #[error("classical Gamma factor at a pole: argument {0}")]
    PoleError(f64),
    #[error("partition step m{sign}e_{j} violates monotonicity")]
    InvalidStep { j: usize, sign: char },
    #[error("weight {got} exceeds the configured maximum {max}")]
    WeightLimitExceeded { got: usize, max: usize },
    #[error("Laguerre polynomial undefined at discrete Wallach point nu={nu}: (nu)_n vanishes for contributing n={n:?}")]
    WallachSingularity { nu: f64, n: Vec<u32> },
    #[error("nu={0} outside the continuous Wallach range (> (r-1)d/2)")]
    OutsideContinuousWallach(f64),
    #[error("degenerate denominator in recurrence coefficient product at (i,j)=({i},{j})")]
    DegenerateDenominator { i: usize, j: usize },
    #[error("element is numerically singular: |det| = {0:.3e}")]
    SingularElement(f64),
    #[error("element not in the open cone: min eigenvalue {0:.3e}")]
    NotInCone(f64),
    #[error("element not in the closed cone: min eigenvalue {0:.3e}")]
    NotInClosedCone(f64),
    #[error("point not in the required domain: {0}")]
    NotInDomain(&'static str),
    #[error("spectrum touches the branch cut: eigenvalue {0}")]
    BranchViolation(num_complex::Complex64),
    #[error("series truncation did not converge: last shell {shell:.3e} vs value {value:.3e}")]
    TruncationNotConverged { shell: f64, value: f64 },
    #[error("discrete Wallach point nu={nu} requires argument rank <= {k}")]
    WallachRankViolation { nu: f64, k: usize },
    #[error("quadrature did not converge: estimated relative error {0:.3e}")]
    QuadratureNotConverged(f64),
    #[error("operation not supported on the {0} backend")]
    UnsupportedBackend(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
