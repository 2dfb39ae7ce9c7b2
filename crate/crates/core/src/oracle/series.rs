//! Direct power-series evaluation with explicit coefficients.
//!
//! These sums share no code with the recurrences in `specfun` and serve as
//! an independent reference inside their convergence envelope.

use crate::error::{DunklError, Result};
use crate::scalar::Real;
use crate::specfun::ln_gamma;

/// Largest polynomial degree accepted by the explicit sums.
pub const SERIES_MAX_DEGREE: u32 = 40;
/// Largest ratio of the biggest alternating term to `max(1, |sum|)` before
/// the result is considered cancellation-dominated.
pub const SERIES_CANCELLATION_LIMIT: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesKind<T> {
    Jacobi { n: u32, alpha: T, beta: T, x: T },
    Laguerre { n: u32, alpha: T, x: T },
    Bessel { order: T, x: T },
}

/// Generalized binomial coefficient `C(a, j)` as a finite product.
fn binomial<T: Real>(a: T, j: u32) -> T {
    (1..=j).fold(T::one(), |acc, i| {
        let i = T::from_u32(i).expect("u32 representable");
        acc * (a - T::from_u32(j).expect("u32 representable") + i) / i
    })
}

pub fn series_reference<T: Real>(kind: SeriesKind<T>) -> Result<T> {
    match kind {
        SeriesKind::Jacobi { n, alpha, beta, x } => {
            check_degree(n)?;
            let nf = T::from_u32(n).expect("u32 representable");
            let xm = (x - T::one()) * T::half();
            let xp = (x + T::one()) * T::half();
            Ok((0..=n).fold(T::zero(), |acc, k| {
                acc + binomial(nf + alpha, n - k) * binomial(nf + beta, k) * xm.powi(k as i32) * xp.powi((n - k) as i32)
            }))
        }
        SeriesKind::Laguerre { n, alpha, x } => {
            check_degree(n)?;
            let nf = T::from_u32(n).expect("u32 representable");
            let mut fact = T::one();
            let mut sum = T::zero();
            let mut biggest = T::zero();
            for k in 0..=n {
                if k > 0 {
                    fact = fact * T::from_u32(k).expect("u32 representable");
                }
                let term = binomial(nf + alpha, n - k) * x.powi(k as i32) / fact;
                biggest = biggest.max(term.abs());
                sum = sum + if k % 2 == 0 { term } else { -term };
            }
            check_cancellation(biggest, sum)?;
            Ok(sum)
        }
        SeriesKind::Bessel { order, x } => bessel_series(order, x),
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n > SERIES_MAX_DEGREE {
        return Err(DunklError::SeriesDivergence(format!("degree {n} exceeds {SERIES_MAX_DEGREE}")));
    }
    Ok(())
}

fn check_cancellation<T: Real>(biggest: T, sum: T) -> Result<()> {
    if biggest > T::lit(SERIES_CANCELLATION_LIMIT) * sum.abs().max(T::one()) {
        return Err(DunklError::SeriesDivergence(format!("cancellation: largest term {biggest} against sum {sum}")));
    }
    Ok(())
}

/// `Σ_k (-1)^k (x/2)^(2k+v) / (k! Γ(k+v+1))`, every term from its own Γ factors.
fn bessel_series<T: Real>(order: T, x: T) -> Result<T> {
    if !(order >= T::zero()) || !(x > T::zero()) {
        return Err(DunklError::SeriesDivergence(format!("outside envelope: order {order}, x {x}")));
    }
    let ln_half_x = (x * T::half()).ln();
    let mut sum = T::zero();
    let mut biggest = T::zero();
    for k in 0..400u32 {
        let kf = T::from_u32(k).expect("u32 representable");
        let ln_term = (T::two() * kf + order) * ln_half_x - ln_gamma(kf + T::one())? - ln_gamma(kf + order + T::one())?;
        let term = ln_term.exp();
        biggest = biggest.max(term);
        sum = sum + if k % 2 == 0 { term } else { -term };
        if kf > x && term <= T::epsilon() * biggest * T::lit(1e-3) {
            check_cancellation(biggest, sum)?;
            return Ok(sum);
        }
    }
    Err(DunklError::SeriesDivergence(format!("no convergence for order {order}, x {x}")))
}
