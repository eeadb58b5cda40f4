//! Exact univariate polynomial algebra over arbitrary-precision rationals:
//! arithmetic, gcd, shifts, Wronskians (continuous, quasi-polynomial,
//! exponential, discrete) and divided Wronskians.
//!
//! Exact division failures are first-class errors, never silent truncation:
//! the population identities downstream are the test surface.

mod linsolve;
mod poly;
mod quasi;
mod wronskian;

pub use linsolve::{solve_dense, solve_square, LinSolve};
pub use poly::{pow_product, Poly};
pub use quasi::{ExpPoly, QPoly};
pub use wronskian::{
    discrete_wronskian, discrete_wronskian_scaled, divided_wronskian, exp_wronskian, qwronskian,
    wronskian2, wronskian_det,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("operation undefined (gcd of two zero polynomials)")]
    Undefined,
    #[error("discrete Wronskian step h must be nonzero")]
    ZeroStep,
    #[error("exact polynomial division left a nonzero remainder")]
    NonDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
}
