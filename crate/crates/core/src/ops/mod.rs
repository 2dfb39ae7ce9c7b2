//! Dunkl operators applied to evaluable functions.
//!
//! Smooth derivatives use central finite differences (or analytic jets when
//! a one-dimensional profile provides them); reflection terms are always
//! exact function evaluations.

mod dunkl;
mod momentum;
mod separated;
mod stencil;

pub use dunkl::{
    apply_dunkl_derivative, apply_dunkl_laplacian, apply_dunkl_laplacian_expanded, hamiltonian_residual, Axis, Field3,
};
pub use momentum::{angular_momentum_commutator_residual, apply_angular_momentum, CommutatorResidual};
pub use separated::{apply_b_phi, apply_m_r, apply_n_theta};
pub use stencil::{central_first, central_second, FdOrder, StencilConfig};
