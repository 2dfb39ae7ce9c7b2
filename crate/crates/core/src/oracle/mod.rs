//! Independent numerical cross-checks: a finite-difference radial
//! eigensolver, weighted Gram matrices, and explicit series references.

mod fd;
mod gram;
mod series;

pub use fd::{fd_radial_spectrum, sturm_count, tridiagonal_lowest, RadialGrid, RadialOracleResult};
pub use gram::{gram_matrix, phi_gram, radial_gram, radial_gram_scaled, theta_gram, GramFamily, GramReport};
pub use series::{series_reference, SeriesKind, SERIES_CANCELLATION_LIMIT, SERIES_MAX_DEGREE};
