//! Exact solutions of the three-dimensional Dunkl-Schrödinger equation.
//!
//! The Dunkl derivative `D_i = ∂_i + (mu_i / x_i)(1 - R_i)` replaces the
//! ordinary gradient, where `R_i` reflects `x_i -> -x_i`. In spherical
//! coordinates the equation separates; this crate provides
//!
//! * the model: deformation parameters, parity sectors, half-integer
//!   quantum numbers, separation constants and closed-form spectra
//!   ([`model`]);
//! * the special functions the solutions are built from ([`specfun`]);
//! * the analytic eigenfunctions ([`solutions`]);
//! * the Dunkl operators applied to arbitrary fields, for residual checks
//!   ([`ops`]);
//! * independent oracles: a finite-difference radial eigensolver, Gram
//!   matrices and explicit series ([`oracle`]);
//! * the verification suites used by the command-line tool ([`verify`]).
//!
//! Everything numerical is generic over [`Real`] (`f32` or `f64`); the
//! `*F64` aliases below fix the scalar to `f64`.

pub mod error;
pub mod halfint;
pub mod jet;
pub mod model;
pub mod ops;
pub mod oracle;
pub mod scalar;
pub mod solutions;
pub mod specfun;
pub mod verify;

pub use error::{DunklError, Result};
pub use halfint::HalfInt;
pub use jet::{Jet, Profile};
pub use model::{DunklParams, Parity, Potential, QuantumNumbers, SectorLabels};
pub use scalar::Real;

pub type DunklParamsF64 = DunklParams<f64>;
pub type PotentialF64 = Potential<f64>;
pub type WavefunctionF64 = solutions::Wavefunction<f64>;
pub type RadialSolutionF64 = solutions::RadialSolution<f64>;
