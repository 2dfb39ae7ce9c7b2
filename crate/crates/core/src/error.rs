use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant carries plain `f64` diagnostics so the type is independent
/// of the scalar used for the computation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DunklError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole of the gamma function at x = {0}")]
    Pole(f64),

    #[error("degenerate normalization: {0}")]
    Degenerate(String),

    #[error("invalid quantum numbers: {0}")]
    QuantumNumbers(String),

    #[error("singular point: |{coordinate}| = {distance:e} is within the exclusion radius {eps:e}")]
    SingularPoint {
        coordinate: &'static str,
        distance: f64,
        eps: f64,
    },

    #[error("invalid stencil configuration: {0}")]
    Stencil(String),

    #[error("quadrature did not converge: doubling the order changed an entry by {change:e} (limit {limit:e})")]
    QuadratureNonconvergence { change: f64, limit: f64 },

    #[error("grid too coarse: convergence estimate {estimate:e} exceeds tolerance {tol:e}")]
    GridTooCoarse { estimate: f64, tol: f64 },

    #[error("potential is not binding: found {found} bound states below the threshold, {requested} requested")]
    NotBinding { found: usize, requested: usize },

    #[error("series did not converge: {0}")]
    SeriesDivergence(String),
}

pub type Result<T, E = DunklError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> DunklError {
    DunklError::Domain(msg.into())
}
