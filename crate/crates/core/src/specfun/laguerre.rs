use crate::error::{domain, Result};
use crate::jet::Jet;
use crate::scalar::Real;

fn check_alpha<T: Real>(alpha: T) -> Result<()> {
    if !(alpha > -T::one()) {
        return Err(domain(format!("Laguerre parameter must exceed -1, got {alpha}")));
    }
    Ok(())
}

/// Generalized Laguerre polynomial `L_n^alpha(x)` by the three-term recurrence.
pub fn laguerre<T: Real>(n: u32, alpha: T, x: T) -> Result<T> {
    check_alpha(alpha)?;
    Ok(laguerre_unchecked(n, alpha, x))
}

pub(crate) fn laguerre_unchecked<T: Real>(n: u32, alpha: T, x: T) -> T {
    let one = T::one();
    let mut l_prev = one;
    if n == 0 {
        return l_prev;
    }
    let mut l = one + alpha - x;
    for k in 2..=n {
        let k = T::from_u32(k).expect("u32 representable");
        let next = ((T::two() * k - one + alpha - x) * l - (k - one + alpha) * l_prev) / k;
        l_prev = l;
        l = next;
    }
    l
}

/// `d^k/dx^k L_n^alpha(x) = (-1)^k L_{n-k}^{alpha+k}(x)`.
pub fn laguerre_derivative_k<T: Real>(k: u32, n: u32, alpha: T, x: T) -> Result<T> {
    check_alpha(alpha)?;
    if k > n {
        return Ok(T::zero());
    }
    let v = laguerre_unchecked(n - k, alpha + T::from_u32(k).expect("u32 representable"), x);
    Ok(if k % 2 == 0 { v } else { -v })
}

pub fn laguerre_jet<T: Real>(n: u32, alpha: T, x: T) -> Result<Jet<T>> {
    Ok(Jet::new(
        laguerre(n, alpha, x)?,
        laguerre_derivative_k(1, n, alpha, x)?,
        laguerre_derivative_k(2, n, alpha, x)?,
    ))
}
