use crate::error::{domain, Result};
use crate::jet::Jet;
use crate::scalar::Real;

fn check_params<T: Real>(alpha: T, beta: T) -> Result<()> {
    if !(alpha > -T::one()) || !(beta > -T::one()) {
        return Err(domain(format!("Jacobi parameters must exceed -1, got alpha = {alpha}, beta = {beta}")));
    }
    Ok(())
}

/// Jacobi polynomial `P_n^(alpha, beta)(x)` by the three-term recurrence.
pub fn jacobi<T: Real>(n: u32, alpha: T, beta: T, x: T) -> Result<T> {
    check_params(alpha, beta)?;
    Ok(jacobi_unchecked(n, alpha, beta, x))
}

pub(crate) fn jacobi_unchecked<T: Real>(n: u32, alpha: T, beta: T, x: T) -> T {
    let one = T::one();
    let two = T::two();
    let mut p_prev = one;
    if n == 0 {
        return p_prev;
    }
    let ab = alpha + beta;
    let mut p = (alpha + one) + (ab + two) * (x - one) * T::half();
    let a2b2 = alpha * alpha - beta * beta;
    for k in 2..=n {
        let k = T::from_u32(k).expect("u32 representable");
        let c = two * k + ab;
        let denom = two * k * (k + ab) * (c - two);
        let b1 = (c - one) * (c * (c - two) * x + a2b2);
        let b2 = two * (k + alpha - one) * (k + beta - one) * c;
        let next = (b1 * p - b2 * p_prev) / denom;
        p_prev = p;
        p = next;
    }
    p
}

/// `d^k/dx^k P_n^(alpha, beta)(x) = Γ(n+α+β+1+k) / (2^k Γ(n+α+β+1)) P_{n-k}^(α+k, β+k)(x)`.
pub fn jacobi_derivative_k<T: Real>(k: u32, n: u32, alpha: T, beta: T, x: T) -> Result<T> {
    check_params(alpha, beta)?;
    Ok(jacobi_derivative_unchecked(k, n, alpha, beta, x))
}

fn jacobi_derivative_unchecked<T: Real>(k: u32, n: u32, alpha: T, beta: T, x: T) -> T {
    if k > n {
        return T::zero();
    }
    let base = T::from_u32(n).expect("u32 representable") + alpha + beta + T::one();
    let coef = (0..k).fold(T::one(), |c, j| c * (base + T::from_u32(j).expect("u32 representable")) * T::half());
    let shift = T::from_u32(k).expect("u32 representable");
    coef * jacobi_unchecked(n - k, alpha + shift, beta + shift, x)
}

/// First derivative `((n+α+β+1)/2) P_{n-1}^(α+1, β+1)(x)`.
pub fn jacobi_derivative<T: Real>(n: u32, alpha: T, beta: T, x: T) -> Result<T> {
    jacobi_derivative_k(1, n, alpha, beta, x)
}

/// Value with first and second derivative in `x`.
pub fn jacobi_jet<T: Real>(n: u32, alpha: T, beta: T, x: T) -> Result<Jet<T>> {
    check_params(alpha, beta)?;
    Ok(Jet::new(
        jacobi_unchecked(n, alpha, beta, x),
        jacobi_derivative_unchecked(1, n, alpha, beta, x),
        jacobi_derivative_unchecked(2, n, alpha, beta, x),
    ))
}
