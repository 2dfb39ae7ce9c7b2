use crate::error::{DunklError, Result};
use crate::halfint::HalfInt;
use crate::jet::{cos_sin_power, Jet, Profile};
use crate::model::{DunklParams, Parity, QuantumNumbers};
use crate::scalar::Real;
use crate::specfun::{jacobi_jet, ln_gamma};

fn half_int<T: Real>(twice: u32) -> T {
    T::from_u32(twice).expect("u32 representable") * T::half()
}

/// Jet of `P_n^(α,β)(cos 2t)` in `t`.
fn jacobi_cos2_jet<T: Real>(n: u32, alpha: T, beta: T, t: T) -> Jet<T> {
    let (s2, c2) = (T::two() * t).sin_cos();
    let inner = Jet::new(c2, -T::two() * s2, -T::lit(4.0) * c2);
    let outer = jacobi_jet(n, alpha, beta, c2).expect("parameters validated at construction");
    Jet::compose(outer, inner)
}

/// Normalization `η_m` of the azimuthal eigenfunctions, evaluated as the
/// closed-form product of factorial and Γ factors.
///
/// Returns [`DunklError::Degenerate`] when `2m + mu_1 + mu_2 = 0`, where the
/// product is `0 · ∞`; [`AngularPhi`] resolves that case by its limit.
pub fn eta_normalization<T: Real>(m: HalfInt, s1: Parity, s2: Parity, p: &DunklParams<T>) -> Result<T> {
    let (e1, e2) = (s1.exponent(), s2.exponent());
    let degree = m.integer_after_shift(e1 + e2).ok_or_else(|| {
        DunklError::QuantumNumbers(format!("m = {m} incompatible with (s1, s2) = ({}, {})", s1.symbol(), s2.symbol()))
    })?;
    let mf: T = m.to_real();
    let lead = T::two() * mf + p.mu1() + p.mu2();
    if lead == T::zero() {
        return Err(DunklError::Degenerate(
            "2m + mu1 + mu2 = 0; the constant azimuthal mode takes the limit 1/sqrt(2 pi)".into(),
        ));
    }
    let g = |x: T| ln_gamma(x);
    let ln_sq = (lead * T::half()).ln() + g(T::from_u32(degree + 1).expect("u32 representable"))?
        + g(mf + p.mu1() + p.mu2() + half_int(e1 + e2))?
        - g(mf + p.mu1() + half_int::<T>(1 + e1) - half_int(e2))?
        - g(mf + p.mu2() + half_int::<T>(1 + e2) - half_int(e1))?;
    Ok((T::half() * ln_sq).exp())
}

/// Normalization `ι_l` of the polar eigenfunctions with respect to the
/// measure `|cos θ|^(2 mu_3) sin^(2 mu_1 + 2 mu_2 + 1) θ dθ`.
///
/// `ι_l^2 = (2l+2m+Σμ+1/2) Γ(l+2m+Σμ+1/2+e_3/2) (l-e_3/2)! / (Γ(l+2m+μ_1+μ_2+1-e_3/2) Γ(l+μ_3+1/2+e_3/2))`.
pub fn iota_normalization<T: Real>(l: HalfInt, m: HalfInt, s3: Parity, p: &DunklParams<T>) -> Result<T> {
    let e3 = s3.exponent();
    let degree = l
        .integer_after_shift(e3)
        .ok_or_else(|| DunklError::QuantumNumbers(format!("l = {l} incompatible with s3 = {}", s3.symbol())))?;
    let lf: T = l.to_real();
    let mf: T = m.to_real();
    let half_e3: T = half_int(e3);
    let sum = p.sum();
    let ln_sq = (T::two() * lf + T::two() * mf + sum + T::half()).ln()
        + ln_gamma(lf + T::two() * mf + sum + T::half() + half_e3)?
        + ln_gamma(T::from_u32(degree + 1).expect("u32 representable"))?
        - ln_gamma(lf + T::two() * mf + p.mu1() + p.mu2() + T::one() - half_e3)?
        - ln_gamma(lf + p.mu3() + T::half() + half_e3)?;
    Ok((T::half() * ln_sq).exp())
}

/// Azimuthal measure `|cos φ|^(2 mu_1) |sin φ|^(2 mu_2)`.
pub fn phi_weight<T: Real>(p: &DunklParams<T>, phi: T) -> T {
    let (s, c) = phi.sin_cos();
    c.abs().powf(T::two() * p.mu1()) * s.abs().powf(T::two() * p.mu2())
}

/// Polar measure `|cos θ|^(2 mu_3) |sin θ|^(2 mu_1 + 2 mu_2 + 1)`.
pub fn theta_weight<T: Real>(p: &DunklParams<T>, theta: T) -> T {
    let (s, c) = theta.sin_cos();
    c.abs().powf(T::two() * p.mu3()) * s.abs().powf(T::two() * (p.mu1() + p.mu2()) + T::one())
}

/// `Φ_m^(s1,s2)(φ) = η_m cos^e1 φ sin^e2 φ P_{m-(e1+e2)/2}^(mu_2-1/2+e2, mu_1-1/2+e1)(cos 2φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularPhi<T> {
    m: HalfInt,
    s1: Parity,
    s2: Parity,
    params: DunklParams<T>,
    eta: T,
    degree: u32,
    alpha: T,
    beta: T,
}

impl<T: Real> AngularPhi<T> {
    pub fn new(m: HalfInt, s1: Parity, s2: Parity, params: DunklParams<T>) -> Result<Self> {
        let (e1, e2) = (s1.exponent(), s2.exponent());
        let degree = m.integer_after_shift(e1 + e2).ok_or_else(|| {
            DunklError::QuantumNumbers(format!("m = {m} incompatible with (s1, s2) = ({}, {})", s1.symbol(), s2.symbol()))
        })?;
        let eta = if m == HalfInt::ZERO {
            // m = 0 forces e1 = e2 = 0; (mu1+mu2)/2 · Γ(mu1+mu2) = Γ(1+mu1+mu2)/2
            // removes the 0·∞ form and gives 1/sqrt(2π) at mu1 = mu2 = 0.
            let ln_sq = ln_gamma(T::one() + params.mu1() + params.mu2())?
                - T::two().ln()
                - ln_gamma(params.mu1() + T::half())?
                - ln_gamma(params.mu2() + T::half())?;
            (T::half() * ln_sq).exp()
        } else {
            eta_normalization(m, s1, s2, &params)?
        };
        Ok(Self {
            m,
            s1,
            s2,
            eta,
            degree,
            alpha: params.mu2() - T::half() + half_int(2 * e2),
            beta: params.mu1() - T::half() + half_int(2 * e1),
            params,
        })
    }

    pub fn from_quantum_numbers(qn: &QuantumNumbers, params: DunklParams<T>) -> Result<Self> {
        let [s1, s2, _] = qn.sector().s;
        Self::new(qn.m(), s1, s2, params)
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    pub fn sector(&self) -> (Parity, Parity) {
        (self.s1, self.s2)
    }

    pub fn eta(&self) -> T {
        self.eta
    }

    pub fn params(&self) -> &DunklParams<T> {
        &self.params
    }

    pub fn eval(&self, phi: T) -> T {
        self.jet_at(phi).v
    }

    pub fn jet_at(&self, phi: T) -> Jet<T> {
        let pre = cos_sin_power(self.s1.exponent(), self.s2.exponent(), phi);
        (pre * jacobi_cos2_jet(self.degree, self.alpha, self.beta, phi)).scale(self.eta)
    }
}

impl<T: Real> Profile<T> for AngularPhi<T> {
    fn value(&self, x: T) -> T {
        self.eval(x)
    }

    fn jet(&self, x: T) -> Option<Jet<T>> {
        Some(self.jet_at(x))
    }
}

/// `Θ_l^(s3)(θ) = ι_l cos^e3 θ sin^2m θ P_{l-e3/2}^(2m+mu_1+mu_2, mu_3+e3-1/2)(cos 2θ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularTheta<T> {
    l: HalfInt,
    m: HalfInt,
    s3: Parity,
    params: DunklParams<T>,
    iota: T,
    degree: u32,
    alpha: T,
    beta: T,
}

impl<T: Real> AngularTheta<T> {
    pub fn new(l: HalfInt, m: HalfInt, s3: Parity, params: DunklParams<T>) -> Result<Self> {
        let e3 = s3.exponent();
        let degree = l
            .integer_after_shift(e3)
            .ok_or_else(|| DunklError::QuantumNumbers(format!("l = {l} incompatible with s3 = {}", s3.symbol())))?;
        let iota = iota_normalization(l, m, s3, &params)?;
        let mf: T = m.to_real();
        Ok(Self {
            l,
            m,
            s3,
            iota,
            degree,
            alpha: T::two() * mf + params.mu1() + params.mu2(),
            beta: params.mu3() + half_int::<T>(2 * e3) - T::half(),
            params,
        })
    }

    pub fn from_quantum_numbers(qn: &QuantumNumbers, params: DunklParams<T>) -> Result<Self> {
        Self::new(qn.l(), qn.m(), qn.sector().s[2], params)
    }

    pub fn l(&self) -> HalfInt {
        self.l
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    pub fn s3(&self) -> Parity {
        self.s3
    }

    pub fn iota(&self) -> T {
        self.iota
    }

    pub fn params(&self) -> &DunklParams<T> {
        &self.params
    }

    pub fn eval(&self, theta: T) -> T {
        self.jet_at(theta).v
    }

    pub fn jet_at(&self, theta: T) -> Jet<T> {
        let pre = cos_sin_power(self.s3.exponent(), self.m.twice(), theta);
        (pre * jacobi_cos2_jet(self.degree, self.alpha, self.beta, theta)).scale(self.iota)
    }
}

impl<T: Real> Profile<T> for AngularTheta<T> {
    fn value(&self, x: T) -> T {
        self.eval(x)
    }

    fn jet(&self, x: T) -> Option<Jet<T>> {
        Some(self.jet_at(x))
    }
}
