use crate::error::{domain, Result};
use crate::jet::Jet;
use crate::scalar::Real;
use crate::specfun::gamma::{gamma_fn, ln_gamma};

/// Above this argument the accuracy guarantee no longer holds.
pub const BESSEL_PRECISION_LIMIT: f64 = 100.0;

const SERIES_RADIUS: f64 = 2.0;
const MILLER_ACCURACY: f64 = 160.0;

/// Bessel function of the first kind `J_order(x)` for real `order >= 0`, `x >= 0`.
///
/// Ascending series where it is free of cancellation (`x <= 2` or
/// `x^2 <= 4 (order + 1)`), otherwise Miller's backward recurrence
/// normalized with the Neumann sum `(x/2)^v = Σ (v+2k) Γ(v+k)/k! J_{v+2k}(x)`.
pub fn bessel_j<T: Real>(order: T, x: T) -> Result<T> {
    if !(order >= T::zero()) || !order.is_finite() {
        return Err(domain(format!("Bessel order must be finite and non-negative, got {order}")));
    }
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(domain(format!("Bessel argument must be finite and non-negative, got {x}")));
    }
    if x == T::zero() {
        return Ok(if order == T::zero() { T::one() } else { T::zero() });
    }
    if x > T::lit(BESSEL_PRECISION_LIMIT) {
        log::warn!("J_{order}({x}): argument beyond {BESSEL_PRECISION_LIMIT}, precision may degrade");
    }
    if x <= T::lit(SERIES_RADIUS) || x * x <= T::lit(4.0) * (order + T::one()) {
        ascending_series(order, x)
    } else {
        miller(order, x)
    }
}

fn ascending_series<T: Real>(order: T, x: T) -> Result<T> {
    let half_x = x * T::half();
    let mut term = (order * half_x.ln() - ln_gamma(order + T::one())?).exp();
    let q = -half_x * half_x;
    let mut sum = term;
    for k in 1..1000 {
        let k = T::from_u32(k).expect("u32 representable");
        term = term * q / (k * (k + order));
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() * T::lit(0.5) {
            break;
        }
    }
    Ok(sum)
}

fn miller<T: Real>(order: T, x: T) -> Result<T> {
    let nint = order.floor();
    let frac = order - nint;
    let target = nint.to_usize().expect("order fits usize");
    let big = x.max(nint);
    let start_f = big + T::lit(15.0) + (T::lit(MILLER_ACCURACY) * big).sqrt();
    let mut start = start_f.to_usize().expect("start index fits usize");
    start += start % 2;
    start = start.max(target + 2);

    // Neumann coefficients c_k multiplying J_{frac + 2k}
    let half_count = start / 2;
    let mut coef = Vec::with_capacity(half_count + 1);
    let g1 = gamma_fn(frac + T::one())?;
    coef.push(g1);
    let mut g = g1; // Γ(frac + k) / k!
    for k in 1..=half_count {
        let kf = T::from_usize_lossy(k);
        coef.push((frac + T::two() * kf) * g);
        g = g * (frac + kf) / (kf + T::one());
    }

    let rescale_at = T::max_value().sqrt();
    let mut upper = T::zero(); // J_{k+1}
    let mut current = T::min_positive_value().sqrt(); // J_k, unnormalized
    let mut norm = if start % 2 == 0 { coef[start / 2] * current } else { T::zero() };
    let mut value = if start == target { current } else { T::zero() };
    for k in (1..=start).rev() {
        let kf = T::from_usize_lossy(k);
        let lower = T::two() * (frac + kf) / x * current - upper;
        upper = current;
        current = lower;
        let idx = k - 1;
        if idx == target {
            value = current;
        }
        if idx % 2 == 0 {
            norm = norm + coef[idx / 2] * current;
        }
        if current.abs() > rescale_at {
            let s = T::one() / rescale_at;
            current = current * s;
            upper = upper * s;
            norm = norm * s;
            value = value * s;
        }
    }
    Ok(value * (x * T::half()).powf(frac) / norm)
}

/// `J_order`, `J'_order`, `J''_order` at `x > 0` using only orders `>= order`:
/// `J'_v = (v/x) J_v - J_{v+1}` and its derivative.
pub fn bessel_j_jet<T: Real>(order: T, x: T) -> Result<Jet<T>> {
    if !(x > T::zero()) {
        return Err(domain(format!("Bessel derivatives require x > 0, got {x}")));
    }
    let one = T::one();
    let j0 = bessel_j(order, x)?;
    let j1 = bessel_j(order + one, x)?;
    let j2 = bessel_j(order + T::two(), x)?;
    let d_j0 = order / x * j0 - j1;
    let d_j1 = (order + one) / x * j1 - j2;
    let dd = -order / (x * x) * j0 + order / x * d_j0 - d_j1;
    Ok(Jet::new(j0, d_j0, dd))
}

/// Spherical Bessel function `j_s(z) = sqrt(π/(2z)) J_{s+1/2}(z)` for real `s >= 0`.
pub fn spherical_bessel_j<T: Real>(s: T, z: T) -> Result<T> {
    if !(z > T::zero()) {
        return Err(domain(format!("spherical Bessel requires z > 0, got {z}")));
    }
    Ok((T::PI() / (T::two() * z)).sqrt() * bessel_j(s + T::half(), z)?)
}
