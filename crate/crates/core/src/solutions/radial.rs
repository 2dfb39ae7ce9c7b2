use crate::error::{domain, DunklError, Result};
use crate::jet::{Jet, Profile};
use crate::model::{alpha_pseudo, beta_nu_mie, energy_mie_quadratic, energy_pseudo, DunklParams, Potential, QuantumNumbers};
use crate::scalar::Real;
use crate::specfun::{bessel_j, bessel_j_jet, laguerre_jet, ln_gamma, spherical_bessel_j};

/// How a bound-state radial function is normalized.
///
/// `Scaled` gives `∫ R^2 x^(2a) dx = 1` in the dimensionless variable `x`;
/// `Physical` gives `∫ R^2 r^(2a) dr = 1`. The two differ by the constant
/// factor `κ^(a + 1/2)` where `x = κ r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadialNormalization {
    #[default]
    Scaled,
    Physical,
}

fn check_r<T: Real>(r: T) -> Result<()> {
    if !(r > T::zero()) || !r.is_finite() {
        return Err(domain(format!("radial coordinate must be positive and finite, got {r}")));
    }
    Ok(())
}

fn exp_neg_half_square<T: Real>(x: T) -> Jet<T> {
    let e = (-x * x * T::half()).exp();
    Jet::new(e, -x * e, (x * x - T::one()) * e)
}

fn exp_neg_half<T: Real>(x: T) -> Jet<T> {
    let e = (-x * T::half()).exp();
    Jet::new(e, -T::half() * e, T::lit(0.25) * e)
}

/// Relative residual of `-R''/2 - (a/r) R' + (q^2/(2 r^2) + V - E) R = 0`,
/// `|Σ terms| / Σ |terms|`.
fn radial_equation_residual<T: Real>(j: Jet<T>, r: T, a: T, q2: T, v_minus_e: T) -> T {
    let terms = [
        -T::half() * j.d2,
        -a / r * j.d1,
        q2 / (T::two() * r * r) * j.v,
        v_minus_e * j.v,
    ];
    let sum = terms.iter().fold(T::zero(), |acc, &t| acc + t);
    let scale = terms.iter().fold(T::zero(), |acc, &t| acc + t.abs());
    if scale == T::zero() {
        T::zero()
    } else {
        sum.abs() / scale
    }
}

/// `q^2` recovered from `s` and `a` through `a^2 - a + q^2 = s (s + 1)`.
fn q2_from<T: Real>(s: T, a: T) -> T {
    s * (s + T::one()) - a * a + a
}

/// Free-particle radial function `R(r) = r^(1/2 - a) J_(s+1/2)(k r)`, `k = sqrt(2E)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeRadial<T> {
    energy: T,
    k: T,
    s: T,
    a: T,
}

impl<T: Real> FreeRadial<T> {
    pub fn new(energy: T, s: T, params: &DunklParams<T>) -> Result<Self> {
        if !(energy > T::zero()) || !energy.is_finite() {
            return Err(domain(format!("free-particle energy must be positive, got {energy}")));
        }
        if !(s >= T::zero()) {
            return Err(domain(format!("angular index s must be non-negative, got {s}")));
        }
        Ok(Self { energy, k: (T::two() * energy).sqrt(), s, a: params.a() })
    }

    pub fn energy(&self) -> T {
        self.energy
    }

    pub fn wavenumber(&self) -> T {
        self.k
    }

    pub fn eval(&self, r: T) -> Result<T> {
        check_r(r)?;
        Ok(r.powf(T::half() - self.a) * bessel_j(self.s + T::half(), self.k * r)?)
    }

    /// The same function written as `r^(1-a) sqrt(2k/π) j_s(k r)`.
    pub fn eval_spherical(&self, r: T) -> Result<T> {
        check_r(r)?;
        let pref = (T::two() * self.k / T::PI()).sqrt();
        Ok(r.powf(T::one() - self.a) * pref * spherical_bessel_j(self.s, self.k * r)?)
    }

    pub fn jet(&self, r: T) -> Result<Jet<T>> {
        check_r(r)?;
        let bessel = bessel_j_jet(self.s + T::half(), self.k * r)?.chain_linear(self.k);
        Ok(Jet::power(r, T::half() - self.a) * bessel)
    }

    pub fn ode_residual(&self, r: T) -> Result<T> {
        Ok(radial_equation_residual(self.jet(r)?, r, self.a, q2_from(self.s, self.a), -self.energy))
    }
}

/// Pseudo-harmonic bound state `R = x^(-a) C_0 e^(-x^2/2) x^(α+1/2) L_n^α(x^2)`,
/// `x = (2A)^(1/4) r`, `C_0 = sqrt(2 n! / Γ(n+α+1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoRadial<T> {
    n: u32,
    s: T,
    a: T,
    alpha: T,
    kappa: T,
    c0: T,
    energy: T,
    potential: Potential<T>,
    factor: T,
}

impl<T: Real> PseudoRadial<T> {
    pub fn new(n: u32, s: T, params: &DunklParams<T>, a_coef: T, b: T, c: T, norm: RadialNormalization) -> Result<Self> {
        let potential = Potential::pseudo_harmonic(a_coef, b, c)?;
        let alpha = alpha_pseudo(s, b)?;
        let nf = T::from_u32(n).expect("u32 representable");
        let ln_c0 = T::half() * (T::two().ln() + ln_gamma(nf + T::one())? - ln_gamma(nf + alpha + T::one())?);
        let kappa = (T::two() * a_coef).sqrt().sqrt();
        let a = params.a();
        let factor = match norm {
            RadialNormalization::Scaled => T::one(),
            RadialNormalization::Physical => kappa.powf(a + T::half()),
        };
        Ok(Self {
            n,
            s,
            a,
            alpha,
            kappa,
            c0: ln_c0.exp(),
            energy: energy_pseudo(n, s, a_coef, b, c)?,
            potential,
            factor,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn kappa(&self) -> T {
        self.kappa
    }

    pub fn c0(&self) -> T {
        self.c0
    }

    pub fn energy(&self) -> T {
        self.energy
    }

    /// `x^(-a) G(x)` with unit scaled normalization, as a jet in `x`.
    pub fn scaled_jet(&self, x: T) -> Jet<T> {
        let x2 = Jet::new(x * x, T::two() * x, T::two());
        let lag = laguerre_jet(self.n, self.alpha, x * x).expect("alpha > -1");
        (exp_neg_half_square(x) * Jet::power(x, self.alpha + T::half() - self.a) * Jet::compose(lag, x2)).scale(self.c0)
    }

    pub fn eval_scaled(&self, x: T) -> T {
        self.scaled_jet(x).v
    }

    pub fn eval(&self, r: T) -> Result<T> {
        check_r(r)?;
        Ok(self.factor * self.eval_scaled(self.kappa * r))
    }

    pub fn jet(&self, r: T) -> Result<Jet<T>> {
        check_r(r)?;
        Ok(self.scaled_jet(self.kappa * r).chain_linear(self.kappa).scale(self.factor))
    }

    pub fn ode_residual(&self, r: T) -> Result<T> {
        let v = self.potential.eval(r) - self.energy;
        Ok(radial_equation_residual(self.jet(r)?, r, self.a, q2_from(self.s, self.a), v))
    }
}

/// Mie-type bound state `R = C e^(-x/2) x^ν L_n^β(x)`, `x = sqrt(8(C-E)) r`,
/// `C = sqrt(n! / ((2n+β+1) Γ(n+β+1)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MieRadial<T> {
    n: u32,
    s: T,
    a: T,
    beta: T,
    nu: T,
    kappa: T,
    norm_c: T,
    energy: T,
    potential: Potential<T>,
    factor: T,
}

impl<T: Real> MieRadial<T> {
    /// Builds the function at a caller-supplied energy. It solves the radial
    /// equation only when `energy` is the `n`-th eigenvalue; see
    /// [`MieRadial::bound_state`].
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        n: u32,
        s: T,
        params: &DunklParams<T>,
        a_coef: T,
        b: T,
        c: T,
        energy: T,
        norm: RadialNormalization,
    ) -> Result<Self> {
        let potential = Potential::mie(a_coef, b, c)?;
        if !(c - energy > T::zero()) {
            return Err(domain(format!("bound state requires C - E > 0, got C = {c}, E = {energy}")));
        }
        let idx = beta_nu_mie(s, b, params)?;
        let nf = T::from_u32(n).expect("u32 representable");
        let ln_c = T::half()
            * (ln_gamma(nf + T::one())?
                - (T::two() * nf + idx.beta + T::one()).ln()
                - ln_gamma(nf + idx.beta + T::one())?);
        let kappa = (T::lit(8.0) * (c - energy)).sqrt();
        let a = params.a();
        let factor = match norm {
            RadialNormalization::Scaled => T::one(),
            RadialNormalization::Physical => kappa.powf(a + T::half()),
        };
        Ok(Self {
            n,
            s,
            a,
            beta: idx.beta,
            nu: idx.nu,
            kappa,
            norm_c: ln_c.exp(),
            energy,
            potential,
            factor,
        })
    }

    /// The `n`-th bound state at `E = -A^2/(2 (n + (β+1)/2)^2) + C`.
    pub fn bound_state(n: u32, s: T, params: &DunklParams<T>, a_coef: T, b: T, c: T, norm: RadialNormalization) -> Result<Self> {
        let e = energy_mie_quadratic(n, s, a_coef, b, c)?;
        Self::new(n, s, params, a_coef, b, c, e, norm)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn nu(&self) -> T {
        self.nu
    }

    pub fn kappa(&self) -> T {
        self.kappa
    }

    pub fn norm_constant(&self) -> T {
        self.norm_c
    }

    pub fn energy(&self) -> T {
        self.energy
    }

    pub fn scaled_jet(&self, x: T) -> Jet<T> {
        let lag = laguerre_jet(self.n, self.beta, x).expect("beta > -1");
        (exp_neg_half(x) * Jet::power(x, self.nu) * lag).scale(self.norm_c)
    }

    pub fn eval_scaled(&self, x: T) -> T {
        self.scaled_jet(x).v
    }

    pub fn eval(&self, r: T) -> Result<T> {
        check_r(r)?;
        Ok(self.factor * self.eval_scaled(self.kappa * r))
    }

    pub fn jet(&self, r: T) -> Result<Jet<T>> {
        check_r(r)?;
        Ok(self.scaled_jet(self.kappa * r).chain_linear(self.kappa).scale(self.factor))
    }

    pub fn ode_residual(&self, r: T) -> Result<T> {
        let v = self.potential.eval(r) - self.energy;
        Ok(radial_equation_residual(self.jet(r)?, r, self.a, q2_from(self.s, self.a), v))
    }
}

/// A radial solution of any of the three potentials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialSolution<T> {
    Free(FreeRadial<T>),
    Pseudo(PseudoRadial<T>),
    Mie(MieRadial<T>),
}

impl<T: Real> RadialSolution<T> {
    /// Radial factor for quantum numbers `qn`. Bound states use `qn.n()`; the
    /// free particle ignores it and needs `free_energy`.
    pub fn for_state(
        qn: &QuantumNumbers,
        params: &DunklParams<T>,
        potential: &Potential<T>,
        free_energy: Option<T>,
        norm: RadialNormalization,
    ) -> Result<Self> {
        let s = qn.s(params);
        match *potential {
            Potential::FreeParticle => {
                let e = free_energy.ok_or_else(|| domain("the free particle needs an energy"))?;
                Ok(Self::Free(FreeRadial::new(e, s, params)?))
            }
            Potential::PseudoHarmonic { a, b, c } => Ok(Self::Pseudo(PseudoRadial::new(qn.n(), s, params, a, b, c, norm)?)),
            Potential::MieType { a, b, c } => Ok(Self::Mie(MieRadial::bound_state(qn.n(), s, params, a, b, c, norm)?)),
        }
    }

    pub fn energy(&self) -> T {
        match self {
            Self::Free(f) => f.energy(),
            Self::Pseudo(p) => p.energy(),
            Self::Mie(m) => m.energy(),
        }
    }

    pub fn eval(&self, r: T) -> Result<T> {
        match self {
            Self::Free(f) => f.eval(r),
            Self::Pseudo(p) => p.eval(r),
            Self::Mie(m) => m.eval(r),
        }
    }

    pub fn jet(&self, r: T) -> Result<Jet<T>> {
        match self {
            Self::Free(f) => f.jet(r),
            Self::Pseudo(p) => p.jet(r),
            Self::Mie(m) => m.jet(r),
        }
    }

    pub fn ode_residual(&self, r: T) -> Result<T> {
        match self {
            Self::Free(f) => f.ode_residual(r),
            Self::Pseudo(p) => p.ode_residual(r),
            Self::Mie(m) => m.ode_residual(r),
        }
    }

    /// Value in the dimensionless variable with unit scaled normalization.
    pub fn value_in_scaled_variable(&self, x: T) -> Result<T> {
        check_r(x)?;
        match self {
            Self::Free(_) => Err(DunklError::Domain("the free particle has no scaled bound-state form".into())),
            Self::Pseudo(p) => Ok(p.eval_scaled(x)),
            Self::Mie(m) => Ok(m.eval_scaled(x)),
        }
    }
}

impl<T: Real> Profile<T> for RadialSolution<T> {
    fn value(&self, x: T) -> T {
        self.eval(x).unwrap_or_else(|_| T::nan())
    }

    fn jet(&self, x: T) -> Option<Jet<T>> {
        RadialSolution::jet(self, x).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::HalfInt;
    use crate::model::{s_value, SectorLabels};
    use crate::specfun::{integrate_checked, Segment};
    use std::f64::consts::PI;

    fn mu(a: f64, b: f64, c: f64) -> DunklParams<f64> {
        DunklParams::<f64>::new(a, b, c).unwrap()
    }

    fn log_points() -> impl Iterator<Item = f64> {
        (0..50).map(|i| 0.05 * (400.0f64).powf(f64::from(i) / 49.0))
    }

    fn interior_zeros(f: impl Fn(f64) -> f64, r_max: f64) -> usize {
        let mut count = 0;
        let mut prev = f(1e-3);
        for i in 1..=20_000 {
            let v = f(1e-3 + r_max * f64::from(i) / 20_000.0);
            if v * prev < 0.0 {
                count += 1;
            }
            if v != 0.0 {
                prev = v;
            }
        }
        count
    }

    #[test]
    fn free_sine_zero() {
        let f = FreeRadial::new(0.5, 0.0, &DunklParams::<f64>::undeformed()).unwrap();
        assert!(f.eval(PI).unwrap().abs() < 1e-15);
        let r = 1.3f64;
        let expect = (2.0 / PI).sqrt() * r.sin() / r;
        assert!((f.eval(r).unwrap() - expect).abs() < 1e-14);
    }

    #[test]
    fn free_forms_agree() {
        let p = mu(0.3, 0.3, 0.3);
        let f = FreeRadial::new(0.8, s_value(HalfInt::ONE, HalfInt::ZERO, &p), &p).unwrap();
        for r in log_points() {
            let (a, b) = (f.eval(r).unwrap(), f.eval_spherical(r).unwrap());
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300) + 1e-300, "r={r}: {a} vs {b}");
        }
    }

    #[test]
    fn free_residual() {
        let p = mu(0.3, 0.3, 0.3);
        let f = FreeRadial::new(0.8, s_value(HalfInt::ONE, HalfInt::ZERO, &p), &p).unwrap();
        for r in log_points() {
            assert!(f.ode_residual(r).unwrap() < 1e-6);
        }
        assert!(f.eval(0.0).is_err());
        assert!(FreeRadial::new(-1.0, 0.0, &p).is_err());
    }

    #[test]
    fn oscillator_ground_state() {
        let g = PseudoRadial::new(0, 0.0, &DunklParams::<f64>::undeformed(), 0.5, 0.0, 0.0, RadialNormalization::Physical).unwrap();
        assert_eq!(g.kappa(), 1.0);
        assert!((g.energy() - 1.5).abs() < 1e-15);
        // R = 2 π^(-1/4) e^(-r^2/2)
        let c = 2.0 / PI.powf(0.25);
        for r in [0.1, 0.7, 2.0] {
            assert!((g.eval(r).unwrap() - c * (-r * r / 2.0).exp()).abs() < 1e-14);
        }
    }

    #[test]
    fn hydrogen_ground_state() {
        let h = MieRadial::bound_state(0, 0.0, &DunklParams::<f64>::undeformed(), 1.0, 0.0, 0.0, RadialNormalization::Physical).unwrap();
        assert!((h.energy() + 0.5).abs() < 1e-15);
        assert!((h.kappa() - 2.0).abs() < 1e-15);
        for r in [0.1, 1.0, 4.0] {
            assert!((h.eval(r).unwrap() - 2.0 * (-r).exp()).abs() < 1e-14);
        }
    }

    #[test]
    fn pseudo_residual_and_nodes() {
        let p = mu(0.3, 0.3, 0.3);
        let s = s_value(HalfInt::ONE, HalfInt::HALF, &p);
        for n in 0..4 {
            let g = PseudoRadial::new(n, s, &p, 0.5, 1.5, 0.2, RadialNormalization::Physical).unwrap();
            for r in log_points() {
                assert!(g.ode_residual(r).unwrap() < 1e-6, "n={n} r={r}");
            }
            assert_eq!(interior_zeros(|r| g.eval(r).unwrap(), 12.0), n as usize);
        }
    }

    #[test]
    fn mie_residual_and_nodes() {
        let p = mu(0.25, 0.25, 0.25);
        let s = s_value(HalfInt::HALF, HalfInt::HALF, &p);
        for n in 0..4 {
            let m = MieRadial::bound_state(n, s, &p, 1.0, 0.8, 0.0, RadialNormalization::Scaled).unwrap();
            for r in log_points() {
                assert!(m.ode_residual(r).unwrap() < 1e-6, "n={n} r={r}");
            }
            assert_eq!(interior_zeros(|r| m.eval(r).unwrap(), 300.0), n as usize);
        }
    }

    #[test]
    fn mie_linear_energy_fails_residual_off_unit_coupling() {
        let p = mu(0.2, 0.2, 0.2);
        let e_lin = crate::model::energy_mie(0, 0.6, 2.0, 0.0, 0.0).unwrap();
        let m = MieRadial::new(0, 0.6, &p, 2.0, 0.0, 0.0, e_lin, RadialNormalization::Scaled).unwrap();
        assert!(m.ode_residual(1.0).unwrap() > 1e-3);
        let q = MieRadial::bound_state(0, 0.6, &p, 2.0, 0.0, 0.0, RadialNormalization::Scaled).unwrap();
        assert!(q.ode_residual(1.0).unwrap() < 1e-12);
    }

    #[test]
    fn mie_rejects_unbound_energy() {
        let p = DunklParams::<f64>::undeformed();
        assert!(MieRadial::new(0, 0.0, &p, 1.0, 0.0, 0.0, 0.1, RadialNormalization::Scaled).is_err());
    }

    #[test]
    fn scaled_and_physical_norms() {
        let p = mu(0.5, 1.0, 0.25);
        let a = p.a();
        let s = s_value(HalfInt::ZERO, HalfInt::ZERO, &p);
        let seg = [Segment::SemiInfinite { start: 0.0, scale: 2.0 }];
        let g = PseudoRadial::new(2, s, &p, 0.8, 1.5, 0.0, RadialNormalization::Scaled).unwrap();
        let scaled = integrate_checked(|x| g.eval_scaled(x).powi(2) * x.powf(2.0 * a), &seg, 200, 1e-10).unwrap();
        assert!((scaled - 1.0).abs() < 1e-9);
        let g = PseudoRadial::new(2, s, &p, 0.8, 1.5, 0.0, RadialNormalization::Physical).unwrap();
        let phys = integrate_checked(|r| g.eval(r).map_or(0.0, |v| v * v * r.powf(2.0 * a)), &seg, 200, 1e-10).unwrap();
        assert!((phys - 1.0).abs() < 1e-9);
        let m = MieRadial::bound_state(1, s, &p, 1.3, 0.8, 0.0, RadialNormalization::Physical).unwrap();
        let seg = [Segment::SemiInfinite { start: 0.0, scale: 10.0 }];
        let phys = integrate_checked(|r| m.eval(r).map_or(0.0, |v| v * v * r.powf(2.0 * a)), &seg, 200, 1e-10).unwrap();
        assert!((phys - 1.0).abs() < 1e-9);
    }

    #[test]
    fn for_state_dispatch() {
        let p = mu(0.3, 0.3, 0.3);
        let qn = QuantumNumbers::new(HalfInt::ZERO, HalfInt::ZERO, 1, SectorLabels::even()).unwrap();
        let pot = Potential::pseudo_harmonic(0.5, 0.0, 0.0).unwrap();
        let r = RadialSolution::for_state(&qn, &p, &pot, None, RadialNormalization::Scaled).unwrap();
        assert!((r.energy() - 4.4).abs() < 1e-13);
        assert!(RadialSolution::for_state(&qn, &p, &Potential::FreeParticle, None, RadialNormalization::Scaled).is_err());
        let f = RadialSolution::for_state(&qn, &p, &Potential::FreeParticle, Some(1.0), RadialNormalization::Scaled).unwrap();
        assert!(f.value_in_scaled_variable(1.0).is_err());
    }
}
