use crate::error::{DunklError, Result};
use crate::model::{DunklParams, Potential};
use crate::ops::stencil::{central_first, central_second, StencilConfig};
use crate::scalar::Real;
use crate::solutions::Wavefunction;

/// A real function on `R^3`, deterministic and shareable across threads.
pub trait Field3<T>: Sync {
    fn eval(&self, x: [T; 3]) -> T;

    /// Radius of the ball around a point inside which the field is smooth,
    /// when known. Informational; stencils do not consult it.
    fn smoothness_radius(&self) -> Option<T> {
        None
    }
}

impl<T, F> Field3<T> for F
where
    F: Fn([T; 3]) -> T + Sync,
{
    fn eval(&self, x: [T; 3]) -> T {
        self(x)
    }
}

impl<T: Real> Field3<T> for Wavefunction<T> {
    fn eval(&self, x: [T; 3]) -> T {
        self.eval_cartesian(x).unwrap_or_else(|_| T::nan())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X1,
    X2,
    X3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X1, Axis::X2, Axis::X3];

    pub fn index(self) -> usize {
        match self {
            Axis::X1 => 0,
            Axis::X2 => 1,
            Axis::X3 => 2,
        }
    }

    /// From a 1-based coordinate number.
    pub fn from_number(n: usize) -> Result<Self> {
        match n {
            1 => Ok(Axis::X1),
            2 => Ok(Axis::X2),
            3 => Ok(Axis::X3),
            _ => Err(DunklError::Domain(format!("axis must be 1, 2 or 3, got {n}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X1 => "x1",
            Axis::X2 => "x2",
            Axis::X3 => "x3",
        }
    }
}

pub(crate) fn reflect<T: Real>(mut x: [T; 3], axis: Axis) -> [T; 3] {
    x[axis.index()] = -x[axis.index()];
    x
}

pub(crate) fn check_off_plane<T: Real>(x: [T; 3], axis: Axis, cfg: &StencilConfig<T>) -> Result<()> {
    let d = x[axis.index()].abs();
    if !(d > cfg.eps()) {
        return Err(DunklError::SingularPoint { coordinate: axis.name(), distance: d.to_f64_lossy(), eps: cfg.eps().to_f64_lossy() });
    }
    Ok(())
}

fn check_all_planes<T: Real>(x: [T; 3], cfg: &StencilConfig<T>) -> Result<()> {
    Axis::ALL.iter().try_for_each(|&a| check_off_plane(x, a, cfg))
}

fn partial<T: Real, F: Field3<T> + ?Sized>(f: &F, axis: Axis, x: [T; 3], cfg: &StencilConfig<T>) -> T {
    let i = axis.index();
    central_first(
        |t| {
            let mut y = x;
            y[i] = t;
            f.eval(y)
        },
        x[i],
        cfg,
    )
}

fn partial2<T: Real, F: Field3<T> + ?Sized>(f: &F, axis: Axis, x: [T; 3], cfg: &StencilConfig<T>) -> T {
    let i = axis.index();
    central_second(
        |t| {
            let mut y = x;
            y[i] = t;
            f.eval(y)
        },
        x[i],
        cfg,
    )
}

/// `D_i f` without the plane check, for nesting inside other stencils.
pub(crate) fn dunkl_derivative_raw<T: Real, F: Field3<T> + ?Sized>(
    f: &F,
    axis: Axis,
    p: &DunklParams<T>,
    x: [T; 3],
    cfg: &StencilConfig<T>,
) -> T {
    let i = axis.index();
    let mu = p.mu()[i];
    let d = partial(f, axis, x, cfg);
    if mu == T::zero() {
        return d;
    }
    d + mu / x[i] * (f.eval(x) - f.eval(reflect(x, axis)))
}

/// `D_i f = ∂_i f + (mu_i / x_i)(f(x) - f(R_i x))`.
pub fn apply_dunkl_derivative<T: Real, F: Field3<T> + ?Sized>(
    f: &F,
    axis: Axis,
    p: &DunklParams<T>,
    x: [T; 3],
    cfg: &StencilConfig<T>,
) -> Result<T> {
    check_off_plane(x, axis, cfg)?;
    Ok(dunkl_derivative_raw(f, axis, p, x, cfg))
}

/// `Σ_i D_i (D_i f)` by nesting the first-order operator.
pub fn apply_dunkl_laplacian<T: Real, F: Field3<T> + ?Sized>(f: &F, p: &DunklParams<T>, x: [T; 3], cfg: &StencilConfig<T>) -> Result<T> {
    check_all_planes(x, cfg)?;
    let mut acc = T::zero();
    for axis in Axis::ALL {
        let inner = |y: [T; 3]| dunkl_derivative_raw(f, axis, p, y, cfg);
        acc = acc + dunkl_derivative_raw(&inner, axis, p, x, cfg);
    }
    Ok(acc)
}

/// `Σ_i [∂_i^2 + (2 mu_i / x_i) ∂_i - (mu_i / x_i^2)(1 - R_i)] f`.
pub fn apply_dunkl_laplacian_expanded<T: Real, F: Field3<T> + ?Sized>(
    f: &F,
    p: &DunklParams<T>,
    x: [T; 3],
    cfg: &StencilConfig<T>,
) -> Result<T> {
    check_all_planes(x, cfg)?;
    let f0 = f.eval(x);
    let mut acc = T::zero();
    for axis in Axis::ALL {
        let i = axis.index();
        let mu = p.mu()[i];
        acc = acc + partial2(f, axis, x, cfg);
        if mu != T::zero() {
            let xi = x[i];
            acc = acc + T::two() * mu / xi * partial(f, axis, x, cfg) - mu / (xi * xi) * (f0 - f.eval(reflect(x, axis)));
        }
    }
    Ok(acc)
}

/// `|(-∇_D^2/2 + V) ψ - E ψ| / max(|ψ|, floor)` at one Cartesian point,
/// using the expanded Laplacian.
pub fn hamiltonian_residual<T: Real, F: Field3<T> + ?Sized>(
    psi: &F,
    energy: T,
    p: &DunklParams<T>,
    potential: &Potential<T>,
    x: [T; 3],
    cfg: &StencilConfig<T>,
) -> Result<T> {
    let lap = apply_dunkl_laplacian_expanded(psi, p, x, cfg)?;
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let v = psi.eval(x);
    let lhs = -T::half() * lap + potential.eval(r) * v;
    Ok((lhs - energy * v).abs() / v.abs().max(cfg.floor()))
}
