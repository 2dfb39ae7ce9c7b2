//! Second-order jets: a value together with its first two derivatives.
//!
//! Analytic eigenfunctions are products and compositions of elementary
//! factors; carrying `(f, f', f'')` through the product rule keeps every
//! residual test free of finite-difference error.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T> {
    pub v: T,
    pub d1: T,
    pub d2: T,
}

impl<T: Real> Jet<T> {
    pub fn new(v: T, d1: T, d2: T) -> Self {
        Self { v, d1, d2 }
    }

    pub fn constant(v: T) -> Self {
        Self::new(v, T::zero(), T::zero())
    }

    /// `x^p` at `x > 0`.
    pub fn power(x: T, p: T) -> Self {
        if p == T::zero() {
            return Self::constant(T::one());
        }
        let v = x.powf(p);
        Self::new(v, p * v / x, p * (p - T::one()) * v / (x * x))
    }

    /// Jet of `f(c·x)` given the jet of `f` at `c·x`.
    pub fn chain_linear(self, c: T) -> Self {
        Self::new(self.v, c * self.d1, c * c * self.d2)
    }

    /// Jet of `f(g(x))` given the jet of `f` at `g(x)` and the jet of `g` at `x`.
    pub fn compose(outer: Self, inner: Self) -> Self {
        Self::new(
            outer.v,
            outer.d1 * inner.d1,
            outer.d2 * inner.d1 * inner.d1 + outer.d1 * inner.d2,
        )
    }

    pub fn scale(self, c: T) -> Self {
        Self::new(c * self.v, c * self.d1, c * self.d2)
    }
}

impl<T: Real> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let two = T::two();
        Self::new(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + two * self.d1 * o.d1 + self.v * o.d2,
        )
    }
}

impl<T: Real> Add for Jet<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl<T: Real> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.v - o.v, self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl<T: Real> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.v, -self.d1, -self.d2)
    }
}

/// A function of one variable that may expose analytic derivatives.
pub trait Profile<T>: Sync {
    fn value(&self, x: T) -> T;

    /// `(f, f', f'')` when available analytically.
    fn jet(&self, _x: T) -> Option<Jet<T>> {
        None
    }
}

impl<T, F> Profile<T> for F
where
    F: Fn(T) -> T + Sync,
{
    fn value(&self, x: T) -> T {
        self(x)
    }
}

/// Jet of `g^p` for a non-negative integer power, given the jet of `g`.
pub fn int_power<T: Real>(g: Jet<T>, p: u32) -> Jet<T> {
    match p {
        0 => Jet::constant(T::one()),
        1 => g,
        _ => {
            let pf = T::from_u32(p).expect("u32 representable");
            let gm1 = g.v.powi(p as i32 - 1);
            let gm2 = if p >= 2 { g.v.powi(p as i32 - 2) } else { T::zero() };
            Jet::new(
                gm1 * g.v,
                pf * gm1 * g.d1,
                pf * (pf - T::one()) * gm2 * g.d1 * g.d1 + pf * gm1 * g.d2,
            )
        }
    }
}

/// Jet of `cos^p(t) sin^q(t)`.
pub fn cos_sin_power<T: Real>(p: u32, q: u32, t: T) -> Jet<T> {
    let (s, c) = t.sin_cos();
    int_power(Jet::new(c, -s, -c), p) * int_power(Jet::new(s, c, -s), q)
}
