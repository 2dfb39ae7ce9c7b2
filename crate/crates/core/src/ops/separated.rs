use crate::error::{DunklError, Result};
use crate::jet::{Jet, Profile};
use crate::model::{DunklParams, Potential};
use crate::ops::stencil::{central_first, central_second, StencilConfig};
use crate::scalar::Real;

fn derivatives<T: Real, G: Profile<T> + ?Sized>(g: &G, x: T, cfg: &StencilConfig<T>) -> Jet<T> {
    g.jet(x).unwrap_or_else(|| {
        let f = |t| g.value(t);
        Jet::new(g.value(x), central_first(f, x, cfg), central_second(f, x, cfg))
    })
}

/// Fails when `angle` lies within `eps` of a multiple of `π/2`.
fn check_angle<T: Real>(angle: T, name: &'static str, cfg: &StencilConfig<T>) -> Result<()> {
    let quarter = T::FRAC_PI_2();
    let rem = angle - (angle / quarter).floor() * quarter;
    let d = rem.min(quarter - rem);
    if !(d > cfg.eps()) {
        return Err(DunklError::SingularPoint { coordinate: name, distance: d.to_f64_lossy(), eps: cfg.eps().to_f64_lossy() });
    }
    Ok(())
}

/// Azimuthal operator
/// `B_φ g = -g''/2 + (mu_1 tan φ - mu_2 cot φ) g'
///   + mu_1/(2cos^2 φ) (g(φ) - g(π-φ)) + mu_2/(2sin^2 φ) (g(φ) - g(-φ))`.
pub fn apply_b_phi<T: Real, G: Profile<T> + ?Sized>(g: &G, p: &DunklParams<T>, phi: T, cfg: &StencilConfig<T>) -> Result<T> {
    check_angle(phi, "phi", cfg)?;
    let j = derivatives(g, phi, cfg);
    let (s, c) = phi.sin_cos();
    let (mu1, mu2) = (p.mu1(), p.mu2());
    let mut out = -T::half() * j.d2 + (mu1 * s / c - mu2 * c / s) * j.d1;
    if mu1 != T::zero() {
        out = out + mu1 / (T::two() * c * c) * (j.v - g.value(T::PI() - phi));
    }
    if mu2 != T::zero() {
        out = out + mu2 / (T::two() * s * s) * (j.v - g.value(-phi));
    }
    Ok(out)
}

/// Polar operator including the azimuthal constant,
/// `-g''/2 + (mu_3 tan θ - (1/2 + mu_1 + mu_2) cot θ) g'
///   + mu_3/(2cos^2 θ) (g(θ) - g(π-θ)) + k^2/(2 sin^2 θ) g`.
pub fn apply_n_theta<T: Real, G: Profile<T> + ?Sized>(
    g: &G,
    p: &DunklParams<T>,
    theta: T,
    k2: T,
    cfg: &StencilConfig<T>,
) -> Result<T> {
    check_angle(theta, "theta", cfg)?;
    let j = derivatives(g, theta, cfg);
    let (s, c) = theta.sin_cos();
    let mu3 = p.mu3();
    let mut out = -T::half() * j.d2 + (mu3 * s / c - (T::half() + p.mu1() + p.mu2()) * c / s) * j.d1 + k2 / (T::two() * s * s) * j.v;
    if mu3 != T::zero() {
        out = out + mu3 / (T::two() * c * c) * (j.v - g.value(T::PI() - theta));
    }
    Ok(out)
}

/// Radial operator `M_r g = -g''/2 - ((1 + mu_1 + mu_2 + mu_3)/r) g' + V(r) g`.
pub fn apply_m_r<T: Real, G: Profile<T> + ?Sized>(
    g: &G,
    p: &DunklParams<T>,
    potential: &Potential<T>,
    r: T,
    cfg: &StencilConfig<T>,
) -> Result<T> {
    if !(r > cfg.eps()) {
        return Err(DunklError::SingularPoint { coordinate: "r", distance: r.to_f64_lossy(), eps: cfg.eps().to_f64_lossy() });
    }
    let j = derivatives(g, r, cfg);
    Ok(-T::half() * j.d2 - p.a() / r * j.d1 + potential.eval(r) * j.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::HalfInt;
    use crate::model::{k_squared, q_squared, Parity};
    use crate::solutions::{AngularPhi, AngularTheta, PseudoRadial, RadialNormalization};

    fn cfg() -> StencilConfig<f64> {
        StencilConfig::default()
    }

    #[test]
    fn cosine_example() {
        let p = DunklParams::<f64>::new(0.4, 0.0, 0.0).unwrap();
        let g = |t: f64| t.cos();
        for phi in [0.3, 1.2, 2.5] {
            let v = apply_b_phi(&g, &p, phi, &cfg()).unwrap();
            assert!((v - 0.9 * phi.cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn constants_are_annihilated() {
        let p = DunklParams::<f64>::undeformed();
        let g = |_t: f64| 1.0;
        assert!(apply_b_phi(&g, &p, 0.4, &cfg()).unwrap().abs() < 1e-9);
        assert!(apply_n_theta(&g, &p, 0.4, 0.0, &cfg()).unwrap().abs() < 1e-9);
        let p = DunklParams::<f64>::new(0.4, 0.2, 0.9).unwrap();
        assert!(apply_m_r(&g, &p, &Potential::FreeParticle, 0.7, &cfg()).unwrap().abs() < 1e-9);
    }

    #[test]
    fn angular_eigenrelations_with_jets_and_stencils() {
        let p = DunklParams::<f64>::new(0.3, 0.5, 0.2).unwrap();
        let m: HalfInt = "3/2".parse().unwrap();
        let phi = AngularPhi::new(m, Parity::Odd, Parity::Even, p).unwrap();
        let k2 = k_squared(m, &p);
        let fd_only = |t: f64| phi.eval(t);
        for t in [0.4, 1.9, 3.7, 5.5] {
            let lhs = apply_b_phi(&phi, &p, t, &cfg()).unwrap();
            assert!((lhs - 0.5 * k2 * phi.eval(t)).abs() < 1e-10);
            let lhs = apply_b_phi(&fd_only, &p, t, &cfg()).unwrap();
            assert!((lhs - 0.5 * k2 * phi.eval(t)).abs() < 1e-5);
        }
        let l: HalfInt = "1/2".parse().unwrap();
        let th = AngularTheta::new(l, m, Parity::Odd, p).unwrap();
        let q2 = q_squared(l, m, &p);
        for t in [0.3, 1.1, 2.0, 2.9] {
            let lhs = apply_n_theta(&th, &p, t, k2, &cfg()).unwrap();
            assert!((lhs - 0.5 * q2 * th.eval(t)).abs() < 1e-10 * th.eval(t).abs().max(1.0));
        }
    }

    #[test]
    fn radial_eigenrelation() {
        let p = DunklParams::<f64>::new(0.3, 0.3, 0.3).unwrap();
        let (l, m) = (HalfInt::ONE, HalfInt::HALF);
        let s = crate::model::s_value(l, m, &p);
        let pot = Potential::pseudo_harmonic(0.5, 1.5, 0.0).unwrap();
        let g = PseudoRadial::new(1, s, &p, 0.5, 1.5, 0.0, RadialNormalization::Physical).unwrap();
        let prof = |r: f64| g.eval(r).unwrap();
        let q2 = q_squared(l, m, &p);
        for r in [0.5, 1.2, 2.5] {
            let v = prof(r);
            let lhs = apply_m_r(&prof, &p, &pot, r, &cfg()).unwrap() + q2 / (2.0 * r * r) * v;
            assert!((lhs - g.energy() * v).abs() < 1e-6 * v.abs().max(1e-3));
        }
    }

    #[test]
    fn singular_angles_rejected() {
        let p = DunklParams::<f64>::undeformed();
        let g = |t: f64| t;
        assert!(apply_b_phi(&g, &p, std::f64::consts::PI, &cfg()).is_err());
        assert!(apply_n_theta(&g, &p, std::f64::consts::FRAC_PI_2 + 1e-3, 0.0, &cfg()).is_err());
        assert!(apply_m_r(&g, &p, &Potential::FreeParticle, 1e-3, &cfg()).is_err());
    }
}
