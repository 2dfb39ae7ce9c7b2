use crate::error::{domain, Result};
use crate::halfint::HalfInt;
use crate::model::{alpha_pseudo, DunklParams, Parity, Potential};
use crate::scalar::Real;
use crate::solutions::{phi_weight, theta_weight, AngularPhi, AngularTheta, MieRadial, PseudoRadial, RadialNormalization};
use crate::specfun::{integrate_checked, Segment};

/// Largest change allowed in any entry when the quadrature order doubles.
pub const GRAM_QUADRATURE_TOL: f64 = 1e-9;

/// A family of eigenfunctions sharing one sector, indexed by `m`, `l` or `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GramFamily<T> {
    /// `Φ_m` for `m` in the index list.
    Phi { s1: Parity, s2: Parity },
    /// `Θ_l` at fixed `m` for `l` in the index list.
    Theta { m: HalfInt, s3: Parity },
    /// Physically normalized bound states at fixed `s`, `n` in the index list.
    Radial { potential: Potential<T>, s: T },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GramReport<T> {
    pub matrix: Vec<Vec<T>>,
    pub max_off_diagonal: T,
    pub max_diagonal_deviation: T,
    pub max_asymmetry: T,
}

impl<T: Real> GramReport<T> {
    fn from_matrix(matrix: Vec<Vec<T>>) -> Self {
        let mut off = T::zero();
        let mut diag = T::zero();
        let mut asym = T::zero();
        for (i, row) in matrix.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i == j {
                    diag = diag.max((v - T::one()).abs());
                } else {
                    off = off.max(v.abs());
                    asym = asym.max((v - matrix[j][i]).abs());
                }
            }
        }
        Self { matrix, max_off_diagonal: off, max_diagonal_deviation: diag, max_asymmetry: asym }
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.max_off_diagonal <= tol && self.max_diagonal_deviation <= tol
    }

    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }
}

fn check_order(order: usize, max_degree: u32) -> Result<()> {
    let need = 2 * max_degree as usize + 20;
    if order < need {
        return Err(domain(format!("quadrature order {order} is below 2 x degree + 20 = {need}")));
    }
    Ok(())
}

/// Fills the symmetric matrix of `∫ f_i f_j w` from the upper triangle.
fn symmetric_gram<T: Real, F: Fn(T) -> T + Sync>(
    funcs: &[F],
    weight: impl Fn(T) -> T,
    segments: &[Segment<T>],
    order: usize,
) -> Result<Vec<Vec<T>>> {
    let k = funcs.len();
    let mut m = vec![vec![T::zero(); k]; k];
    let tol = T::lit(GRAM_QUADRATURE_TOL);
    for i in 0..k {
        for j in i..k {
            let v = integrate_checked(|t| funcs[i](t) * funcs[j](t) * weight(t), segments, order, tol)?;
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    Ok(m)
}

/// Gram matrix of `Φ_m` under `|cos φ|^(2mu_1) |sin φ|^(2mu_2) dφ` on `[0, 2π)`.
pub fn phi_gram<T: Real>(params: &DunklParams<T>, s1: Parity, s2: Parity, ms: &[HalfInt], order: usize) -> Result<GramReport<T>> {
    let phis = ms.iter().map(|&m| AngularPhi::new(m, s1, s2, *params)).collect::<Result<Vec<_>>>()?;
    check_order(order, ms.iter().map(|m| m.twice()).max().unwrap_or(0))?;
    let quarter = T::FRAC_PI_2();
    let segments: Vec<_> = (0..4)
        .map(|q| {
            let start = T::from_u32(q).expect("small") * quarter;
            Segment::Clustered { start, end: start + quarter }
        })
        .collect();
    let funcs: Vec<_> = phis.iter().map(|p| move |t: T| p.eval(t)).collect();
    Ok(GramReport::from_matrix(symmetric_gram(&funcs, |t| phi_weight(params, t), &segments, order)?))
}

/// Gram matrix of `Θ_l` at fixed `m` under
/// `|cos θ|^(2mu_3) sin^(2mu_1+2mu_2+1) θ dθ` on `[0, π]`.
pub fn theta_gram<T: Real>(params: &DunklParams<T>, m: HalfInt, s3: Parity, ls: &[HalfInt], order: usize) -> Result<GramReport<T>> {
    let thetas = ls.iter().map(|&l| AngularTheta::new(l, m, s3, *params)).collect::<Result<Vec<_>>>()?;
    check_order(order, ls.iter().map(|l| l.twice() + m.twice()).max().unwrap_or(0))?;
    let half = T::FRAC_PI_2();
    let segments = [Segment::Clustered { start: T::zero(), end: half }, Segment::Clustered { start: half, end: T::PI() }];
    let funcs: Vec<_> = thetas.iter().map(|p| move |t: T| p.eval(t)).collect();
    Ok(GramReport::from_matrix(symmetric_gram(&funcs, |t| theta_weight(params, t), &segments, order)?))
}

type RadialFn<'a, T> = Box<dyn Fn(T) -> T + Sync + 'a>;

fn radial_functions<T: Real>(
    params: &DunklParams<T>,
    potential: &Potential<T>,
    s: T,
    ns: &[u32],
    norm: RadialNormalization,
) -> Result<(Vec<RadialFn<'static, T>>, T)> {
    let mut funcs: Vec<RadialFn<'static, T>> = Vec::with_capacity(ns.len());
    let n_max = T::from_u32(ns.iter().copied().max().unwrap_or(0)).expect("u32 representable");
    let scale = match *potential {
        Potential::FreeParticle => return Err(domain("free-particle states are not normalizable")),
        Potential::PseudoHarmonic { a, b, c } => {
            for &n in ns {
                let f = PseudoRadial::new(n, s, params, a, b, c, norm)?;
                funcs.push(match norm {
                    RadialNormalization::Scaled => Box::new(move |x| f.eval_scaled(x)),
                    RadialNormalization::Physical => Box::new(move |r| f.eval(r).unwrap_or(T::zero())),
                });
            }
            let alpha = alpha_pseudo(s, b)?;
            let turning = (T::two() * n_max + alpha + T::one()).sqrt();
            match norm {
                RadialNormalization::Scaled => turning,
                RadialNormalization::Physical => turning / (T::two() * a).sqrt().sqrt(),
            }
        }
        Potential::MieType { a, b, c } => {
            let mut widest = T::zero();
            for &n in ns {
                let f = MieRadial::bound_state(n, s, params, a, b, c, norm)?;
                widest = widest.max(T::one() / f.kappa());
                funcs.push(match norm {
                    RadialNormalization::Scaled => Box::new(move |x| f.eval_scaled(x)),
                    RadialNormalization::Physical => Box::new(move |r| f.eval(r).unwrap_or(T::zero())),
                });
            }
            let beta = T::two() * alpha_pseudo(s, b)?;
            let reach = T::lit(4.0) * (n_max + beta + T::one());
            match norm {
                RadialNormalization::Scaled => reach,
                RadialNormalization::Physical => reach * widest,
            }
        }
    };
    Ok((funcs, scale))
}

fn radial_segments<T: Real>(scale: T) -> [Segment<T>; 2] {
    [Segment::Clustered { start: T::zero(), end: scale }, Segment::SemiInfinite { start: scale, scale }]
}

/// Gram matrix of physically normalized bound states under `r^(2a) dr`.
pub fn radial_gram<T: Real>(params: &DunklParams<T>, potential: &Potential<T>, s: T, ns: &[u32], order: usize) -> Result<GramReport<T>> {
    check_order(order, 2 * ns.iter().copied().max().unwrap_or(0))?;
    let (funcs, scale) = radial_functions(params, potential, s, ns, RadialNormalization::Physical)?;
    let two_a = T::two() * params.a();
    Ok(GramReport::from_matrix(symmetric_gram(&funcs, |r| r.powf(two_a), &radial_segments(scale), order)?))
}

/// Norms `∫ R_n(x)^2 x^(2a) dx` with each state in its own scaled variable.
///
/// Only the diagonal is computed: for the Mie-type states `x` depends on
/// `n`, so products of different states in their own variables carry no
/// orthogonality statement.
pub fn radial_gram_scaled<T: Real>(params: &DunklParams<T>, potential: &Potential<T>, s: T, ns: &[u32], order: usize) -> Result<Vec<T>> {
    check_order(order, 2 * ns.iter().copied().max().unwrap_or(0))?;
    let (funcs, scale) = radial_functions(params, potential, s, ns, RadialNormalization::Scaled)?;
    let two_a = T::two() * params.a();
    let segs = radial_segments(scale);
    funcs
        .iter()
        .map(|f| integrate_checked(|x| f(x) * f(x) * x.powf(two_a), &segs, order, T::lit(GRAM_QUADRATURE_TOL)))
        .collect()
}

/// Dispatches on the family; `indices` are `m`, `l` or `n` as half-integers.
pub fn gram_matrix<T: Real>(family: &GramFamily<T>, params: &DunklParams<T>, indices: &[HalfInt], order: usize) -> Result<GramReport<T>> {
    match *family {
        GramFamily::Phi { s1, s2 } => phi_gram(params, s1, s2, indices, order),
        GramFamily::Theta { m, s3 } => theta_gram(params, m, s3, indices, order),
        GramFamily::Radial { potential, s } => {
            let ns = indices
                .iter()
                .map(|i| {
                    if i.is_integer() {
                        Ok(i.twice() / 2)
                    } else {
                        Err(domain(format!("radial index must be an integer, got {i}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            radial_gram(params, &potential, s, &ns, order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::s_value;

    fn ints(v: &[u32]) -> Vec<HalfInt> {
        v.iter().map(|&i| HalfInt::from_int(i)).collect()
    }

    #[test]
    fn phi_family_is_orthonormal() {
        let p = DunklParams::<f64>::new(0.5, 0.5, 0.0).unwrap();
        let g = phi_gram(&p, Parity::Even, Parity::Even, &ints(&[0, 1, 2]), 120).unwrap();
        assert!(g.is_identity(1e-8), "{g:?}");
        assert!(g.max_asymmetry <= 1e-12);
    }

    #[test]
    fn single_index_is_unit() {
        let p = DunklParams::<f64>::new(0.3, 0.7, 0.2).unwrap();
        let g = phi_gram(&p, Parity::Odd, Parity::Even, &[HalfInt::from_twice(3)], 120).unwrap();
        assert_eq!(g.dimension(), 1);
        assert!((g.matrix[0][0] - 1.0).abs() < 1e-8);
    }

    #[test]
    fn theta_family_is_orthonormal() {
        let p = DunklParams::<f64>::new(0.3, 0.3, 0.3).unwrap();
        let ls: Vec<_> = [1, 3, 5, 7].iter().map(|&t| HalfInt::from_twice(t)).collect();
        let g = theta_gram(&p, HalfInt::from_int(1), Parity::Odd, &ls, 120).unwrap();
        assert!(g.is_identity(1e-8), "{g:?}");
    }

    #[test]
    fn radial_families_are_orthonormal() {
        let p = DunklParams::<f64>::new(0.3, 0.3, 0.3).unwrap();
        let s = s_value(HalfInt::ZERO, HalfInt::ZERO, &p);
        let pseudo = Potential::pseudo_harmonic(0.5, 1.5, 0.0).unwrap();
        assert!(radial_gram(&p, &pseudo, s, &[0, 1, 2], 100).unwrap().is_identity(1e-7));
        let mie = Potential::mie(1.0, 0.8, 0.0).unwrap();
        assert!(radial_gram(&p, &mie, s, &[0, 1, 2], 100).unwrap().is_identity(1e-7));
        for v in radial_gram_scaled(&p, &mie, s, &[0, 1, 2], 100).unwrap() {
            assert!((v - 1.0).abs() < 1e-7);
        }
    }

    #[test]
    fn order_precondition() {
        let p = DunklParams::<f64>::undeformed();
        assert!(phi_gram(&p, Parity::Even, Parity::Even, &ints(&[0, 4]), 20).is_err());
        let fam = GramFamily::Radial { potential: Potential::FreeParticle, s: 0.0 };
        assert!(gram_matrix(&fam, &p, &ints(&[0]), 60).is_err());
    }
}
