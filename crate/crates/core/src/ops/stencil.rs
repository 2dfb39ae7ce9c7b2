use crate::error::{DunklError, Result};
use crate::scalar::Real;

/// Accuracy order of the central difference stencils.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FdOrder {
    Two,
    #[default]
    Four,
    Six,
}

impl FdOrder {
    pub fn from_order(order: u32) -> Result<Self> {
        match order {
            2 => Ok(Self::Two),
            4 => Ok(Self::Four),
            6 => Ok(Self::Six),
            _ => Err(DunklError::Stencil(format!("stencil order must be 2, 4 or 6, got {order}"))),
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Self::Two => 2,
            Self::Four => 4,
            Self::Six => 6,
        }
    }

    // weights for offsets 1..=k; first derivative is antisymmetric
    fn first(self) -> &'static [f64] {
        match self {
            Self::Two => &[0.5],
            Self::Four => &[2.0 / 3.0, -1.0 / 12.0],
            Self::Six => &[3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0],
        }
    }

    // (centre, offsets 1..=k); second derivative is symmetric
    fn second(self) -> (f64, &'static [f64]) {
        match self {
            Self::Two => (-2.0, &[1.0]),
            Self::Four => (-5.0 / 2.0, &[4.0 / 3.0, -1.0 / 12.0]),
            Self::Six => (-49.0 / 18.0, &[3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0]),
        }
    }
}

/// Step, stencil order and exclusion radius around coordinate planes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilConfig<T> {
    h: T,
    order: FdOrder,
    eps: T,
    floor: T,
}

impl<T: Real> StencilConfig<T> {
    pub fn new(h: T, order: FdOrder, eps: T) -> Result<Self> {
        if !(h > T::zero()) || !h.is_finite() {
            return Err(DunklError::Stencil(format!("step must be positive, got {h}")));
        }
        if !(eps > h) {
            return Err(DunklError::Stencil(format!("exclusion radius {eps} must exceed the step {h}")));
        }
        Ok(Self { h, order, eps, floor: T::lit(1e-12) })
    }

    /// Smallest `|ψ|` used to normalize relative residuals.
    pub fn with_floor(mut self, floor: T) -> Self {
        self.floor = floor;
        self
    }

    pub fn h(&self) -> T {
        self.h
    }

    pub fn order(&self) -> FdOrder {
        self.order
    }

    pub fn eps(&self) -> T {
        self.eps
    }

    pub fn floor(&self) -> T {
        self.floor
    }
}

impl<T: Real> Default for StencilConfig<T> {
    /// Fourth order, `h = 1e-3`, `eps = 10 h`.
    fn default() -> Self {
        let h = T::lit(1e-3);
        Self::new(h, FdOrder::Four, T::lit(10.0) * h).expect("valid default")
    }
}

/// Central difference approximation of `f'(x)`.
pub fn central_first<T: Real>(f: impl Fn(T) -> T, x: T, cfg: &StencilConfig<T>) -> T {
    let h = cfg.h;
    let mut acc = T::zero();
    for (k, &w) in cfg.order.first().iter().enumerate() {
        let d = T::from_usize_lossy(k + 1) * h;
        acc = acc + T::lit(w) * (f(x + d) - f(x - d));
    }
    acc / h
}

/// Central difference approximation of `f''(x)`.
pub fn central_second<T: Real>(f: impl Fn(T) -> T, x: T, cfg: &StencilConfig<T>) -> T {
    let h = cfg.h;
    let (c, ws) = cfg.order.second();
    let mut acc = T::lit(c) * f(x);
    for (k, &w) in ws.iter().enumerate() {
        let d = T::from_usize_lossy(k + 1) * h;
        acc = acc + T::lit(w) * (f(x + d) + f(x - d));
    }
    acc / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(StencilConfig::new(0.0, FdOrder::Four, 0.1).is_err());
        assert!(StencilConfig::new(0.01, FdOrder::Four, 0.005).is_err());
        let d = StencilConfig::<f64>::default();
        assert_eq!(d.order(), FdOrder::Four);
        assert!((d.eps() - 0.01).abs() < 1e-15);
        assert!(FdOrder::from_order(3).is_err());
        assert_eq!(FdOrder::from_order(6).unwrap().order(), 6);
    }

    #[test]
    fn exact_on_low_degree_polynomials() {
        for order in [FdOrder::Two, FdOrder::Four, FdOrder::Six] {
            let cfg = StencilConfig::new(0.1, order, 1.0).unwrap();
            let p = order.order() as i32;
            // degree p polynomial: first derivative exact to degree p, second to degree p+1
            let f = |x: f64| x.powi(p);
            assert!((central_first(f, 0.7, &cfg) - f64::from(p) * 0.7f64.powi(p - 1)).abs() < 1e-10);
            let g = |x: f64| x.powi(p + 1);
            let exact = f64::from((p + 1) * p) * 0.7f64.powi(p - 1);
            assert!((central_second(g, 0.7, &cfg) - exact).abs() < 1e-9);
        }
    }

    #[test]
    fn error_shrinks_with_order() {
        let x = 0.4;
        let errs: Vec<f64> = [FdOrder::Two, FdOrder::Four, FdOrder::Six]
            .iter()
            .map(|&o| {
                let cfg = StencilConfig::new(0.05, o, 1.0).unwrap();
                (central_second(f64::sin, x, &cfg) + x.sin()).abs()
            })
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2]);
    }
}
