//! Special functions and one-dimensional quadrature.

mod polynomial;
mod quadrature;
mod zeros;

pub use polynomial::{
    hermite_eval, hermite_function, laguerre_assoc_eval, laguerre_eval, laguerre_with_derivative,
    MAX_DEGREE,
};
pub(crate) use polynomial::{laguerre_pair, ln_factorial};
pub use quadrature::{
    gauss_legendre, integrate_adaptive, integrate_complex, integrate_with_breaks, IntegrationResult,
    QuadratureRule, MAX_EVALUATIONS,
};
pub use zeros::{laguerre_zeros, MAX_ZEROS_DEGREE};
