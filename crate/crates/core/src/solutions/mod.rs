//! Analytic eigenfunctions: azimuthal `Φ`, polar `Θ`, the radial solutions
//! of the three potentials, and their separated product.

mod angular;
mod radial;
mod wavefunction;

pub use angular::{eta_normalization, iota_normalization, phi_weight, theta_weight, AngularPhi, AngularTheta};
pub use radial::{FreeRadial, MieRadial, PseudoRadial, RadialNormalization, RadialSolution};
pub use wavefunction::{spherical_from_cartesian, Wavefunction, WavefunctionSample};
