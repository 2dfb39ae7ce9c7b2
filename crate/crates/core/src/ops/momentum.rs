use crate::error::Result;
use crate::model::DunklParams;
use crate::ops::dunkl::{check_off_plane, dunkl_derivative_raw, reflect, Axis, Field3};
use crate::ops::stencil::StencilConfig;
use crate::scalar::Real;

/// `(a, b)` with `L_j = x_a D_b - x_b D_a` and `(j, a, b)` cyclic.
fn generator_axes(j: Axis) -> (Axis, Axis) {
    match j {
        Axis::X1 => (Axis::X2, Axis::X3),
        Axis::X2 => (Axis::X3, Axis::X1),
        Axis::X3 => (Axis::X1, Axis::X2),
    }
}

fn third_axis(j: Axis, k: Axis) -> Axis {
    Axis::ALL.into_iter().find(|&a| a != j && a != k).expect("distinct axes")
}

fn l_raw<T: Real, F: Field3<T> + ?Sized>(f: &F, j: Axis, p: &DunklParams<T>, x: [T; 3], cfg: &StencilConfig<T>) -> T {
    let (a, b) = generator_axes(j);
    x[a.index()] * dunkl_derivative_raw(f, b, p, x, cfg) - x[b.index()] * dunkl_derivative_raw(f, a, p, x, cfg)
}

/// `L_j f = (x_a D_b - x_b D_a) f`, the real generator with `J_j = -i L_j`.
pub fn apply_angular_momentum<T: Real, F: Field3<T> + ?Sized>(
    f: &F,
    j: Axis,
    p: &DunklParams<T>,
    x: [T; 3],
    cfg: &StencilConfig<T>,
) -> Result<T> {
    let (a, b) = generator_axes(j);
    check_off_plane(x, a, cfg)?;
    check_off_plane(x, b, cfg)?;
    Ok(l_raw(f, j, p, x, cfg))
}

/// Both sides of `[J_j, J_k] f = i ε_jkl J_l (1 + 2 mu_l R_l) f`.
///
/// With `J = -i L` the identity is real: `-[L_j, L_k] f = ε_jkl L_l (f + 2 mu_l R_l f)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorResidual<T> {
    pub lhs: T,
    pub rhs: T,
    /// `|lhs - rhs| / max(1, |rhs|)`
    pub residual: T,
}

pub fn angular_momentum_commutator_residual<T: Real, F: Field3<T> + ?Sized>(
    f: &F,
    p: &DunklParams<T>,
    pair: (Axis, Axis),
    x: [T; 3],
    cfg: &StencilConfig<T>,
) -> Result<CommutatorResidual<T>> {
    let (j, k) = pair;
    if j == k {
        return Err(crate::error::domain("commutator needs two distinct axes"));
    }
    for a in Axis::ALL {
        check_off_plane(x, a, cfg)?;
    }
    let l = third_axis(j, k);
    let sign = if generator_axes(j) == (k, l) { T::one() } else { -T::one() };
    let lk = |y: [T; 3]| l_raw(f, k, p, y, cfg);
    let lj = |y: [T; 3]| l_raw(f, j, p, y, cfg);
    let lhs = -(l_raw(&lk, j, p, x, cfg) - l_raw(&lj, k, p, x, cfg));
    let mu_l = p.mu()[l.index()];
    let shifted = |y: [T; 3]| f.eval(y) + T::two() * mu_l * f.eval(reflect(y, l));
    let rhs = sign * l_raw(&shifted, l, p, x, cfg);
    Ok(CommutatorResidual { lhs, rhs, residual: (lhs - rhs).abs() / rhs.abs().max(T::one()) })
}
