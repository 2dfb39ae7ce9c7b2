//! Special-function kernel: gamma, Jacobi and generalized Laguerre
//! polynomials, Bessel functions of real order, Gauss-Legendre rules.

mod bessel;
mod gamma;
mod jacobi;
mod laguerre;
mod quadrature;

pub use bessel::{bessel_j, bessel_j_jet, spherical_bessel_j, BESSEL_PRECISION_LIMIT};
pub use gamma::{gamma_fn, ln_gamma};
pub use jacobi::{jacobi, jacobi_derivative, jacobi_derivative_k, jacobi_jet};
pub use laguerre::{laguerre, laguerre_derivative_k, laguerre_jet};
pub use quadrature::{gauss_legendre, integrate_checked, QuadratureRule, Segment};
