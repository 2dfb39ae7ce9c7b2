//! Closed-form scalar formulas: deformation parameters, parity sectors,
//! quantum numbers, separation constants and the bound-state spectra.
//!
//! Quantum-number validation lives here and nowhere else; the other
//! modules take validated [`QuantumNumbers`] as given.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, DunklError, Result};
use crate::halfint::HalfInt;
use crate::scalar::Real;

/// Above this value of any `mu_i` quadrature and normalization accuracy degrade.
pub const LARGE_MU_WARNING: f64 = 10.0;

/// The three reflection-coupling constants `mu_1, mu_2, mu_3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DunklParams<T> {
    mu: [T; 3],
}

impl<T: Real> DunklParams<T> {
    /// Accepts `mu_i >= 0`; `mu = 0` is the undeformed (ordinary derivative) limit.
    pub fn new(mu1: T, mu2: T, mu3: T) -> Result<Self> {
        let mu = [mu1, mu2, mu3];
        for (i, m) in mu.iter().enumerate() {
            if !m.is_finite() || *m < T::zero() {
                return Err(domain(format!("mu{} = {} must be a finite non-negative number", i + 1, m)));
            }
            if *m > T::lit(LARGE_MU_WARNING) {
                log::warn!("mu{} = {} is large; normalization and quadrature accuracy degrade", i + 1, m);
            }
        }
        Ok(Self { mu })
    }

    /// The undeformed case `mu = (0, 0, 0)`.
    pub fn undeformed() -> Self {
        Self { mu: [T::zero(); 3] }
    }

    pub fn mu(&self) -> [T; 3] {
        self.mu
    }

    pub fn mu1(&self) -> T {
        self.mu[0]
    }

    pub fn mu2(&self) -> T {
        self.mu[1]
    }

    pub fn mu3(&self) -> T {
        self.mu[2]
    }

    pub fn sum(&self) -> T {
        self.mu[0] + self.mu[1] + self.mu[2]
    }

    /// `a = 1 + mu_1 + mu_2 + mu_3`, the exponent relating `G(r) = r^a R(r)`.
    pub fn a(&self) -> T {
        T::one() + self.sum()
    }
}

impl FromStr for DunklParams<f64> {
    type Err = DunklError;

    /// Parses a comma triple such as `"0.3,0.3,0.3"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(domain(format!("expected three comma-separated values, got '{s}'")));
        }
        let mut mu = [0.0; 3];
        for (slot, p) in mu.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| domain(format!("'{p}' is not a number")))?;
        }
        DunklParams::new(mu[0], mu[1], mu[2])
    }
}

/// Eigenvalue `s_i = ±1` of a reflection operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Indicator exponent: 0 for `s = +1`, 1 for `s = -1`.
    pub fn exponent(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Parity::Even => '+',
            Parity::Odd => '-',
        }
    }
}

/// Reflection eigenvalues `(s_1, s_2, s_3)` labelling a parity sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorLabels {
    pub s: [Parity; 3],
}

impl SectorLabels {
    pub fn new(s1: Parity, s2: Parity, s3: Parity) -> Self {
        Self { s: [s1, s2, s3] }
    }

    pub fn even() -> Self {
        Self::new(Parity::Even, Parity::Even, Parity::Even)
    }

    /// Indicator exponents `(e_1, e_2, e_3)`.
    pub fn exponents(&self) -> [u32; 3] {
        [self.s[0].exponent(), self.s[1].exponent(), self.s[2].exponent()]
    }

    pub fn all() -> impl Iterator<Item = SectorLabels> {
        (0..8u32).map(|bits| {
            let p = |b: u32| if bits & b == 0 { Parity::Even } else { Parity::Odd };
            SectorLabels::new(p(4), p(2), p(1))
        })
    }
}

impl fmt::Display for SectorLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.s[0].symbol(), self.s[1].symbol(), self.s[2].symbol())
    }
}

impl FromStr for SectorLabels {
    type Err = DunklError;

    /// Parses three sign characters, e.g. `"+-+"`.
    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<Parity> = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(Parity::Even),
                '-' => Ok(Parity::Odd),
                _ => Err(domain(format!("sector '{s}' must consist of '+' and '-'"))),
            })
            .collect::<Result<_>>()?;
        match signs[..] {
            [a, b, c] => Ok(SectorLabels::new(a, b, c)),
            _ => Err(domain(format!("sector '{s}' must have exactly three signs"))),
        }
    }
}

/// Validated quantum numbers `(m, l, n)` in a given parity sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    m: HalfInt,
    l: HalfInt,
    n: u32,
    sector: SectorLabels,
}

impl QuantumNumbers {
    /// Checks that `m - (e_1+e_2)/2` and `l - e_3/2` are non-negative
    /// integers. This also enforces the half-integer rules: `m` is a
    /// half-integer iff `s_1 s_2 = -1`, `l` is a half-integer iff `s_3 = -1`.
    pub fn new(m: HalfInt, l: HalfInt, n: u32, sector: SectorLabels) -> Result<Self> {
        let [e1, e2, e3] = sector.exponents();
        if m.integer_after_shift(e1 + e2).is_none() {
            return Err(DunklError::QuantumNumbers(format!(
                "m = {m} is not allowed in sector {sector}: m - {}/2 must be a non-negative integer",
                e1 + e2
            )));
        }
        if l.integer_after_shift(e3).is_none() {
            return Err(DunklError::QuantumNumbers(format!(
                "l = {l} is not allowed in sector {sector}: l - {e3}/2 must be a non-negative integer"
            )));
        }
        Ok(Self { m, l, n, sector })
    }

    pub fn m(&self) -> HalfInt {
        self.m
    }

    pub fn l(&self) -> HalfInt {
        self.l
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sector(&self) -> SectorLabels {
        self.sector
    }

    /// Degree of the azimuthal Jacobi polynomial, `m - (e_1+e_2)/2`.
    pub fn phi_degree(&self) -> u32 {
        let [e1, e2, _] = self.sector.exponents();
        self.m.integer_after_shift(e1 + e2).expect("validated")
    }

    /// Degree of the polar Jacobi polynomial, `l - e_3/2`.
    pub fn theta_degree(&self) -> u32 {
        let [_, _, e3] = self.sector.exponents();
        self.l.integer_after_shift(e3).expect("validated")
    }

    pub fn s<T: Real>(&self, p: &DunklParams<T>) -> T {
        s_value(self.l, self.m, p)
    }
}

/// Central potentials with exact solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential<T> {
    FreeParticle,
    /// `V(r) = A r^2 + B / r^2 + C`
    PseudoHarmonic { a: T, b: T, c: T },
    /// `V(r) = -A / r + B / r^2 + C`
    MieType { a: T, b: T, c: T },
}

impl<T: Real> Potential<T> {
    pub fn pseudo_harmonic(a: T, b: T, c: T) -> Result<Self> {
        let p = Potential::PseudoHarmonic { a, b, c };
        p.validate()?;
        Ok(p)
    }

    pub fn mie(a: T, b: T, c: T) -> Result<Self> {
        let p = Potential::MieType { a, b, c };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Potential::FreeParticle => Ok(()),
            Potential::PseudoHarmonic { a, b, c } | Potential::MieType { a, b, c } => {
                if !(a.is_finite() && b.is_finite() && c.is_finite()) {
                    return Err(domain("potential coefficients must be finite"));
                }
                if a <= T::zero() {
                    return Err(domain(format!("coefficient A = {a} must be positive")));
                }
                if b < T::zero() {
                    return Err(domain(format!("coefficient B = {b} must be non-negative")));
                }
                Ok(())
            }
        }
    }

    pub fn eval(&self, r: T) -> T {
        match *self {
            Potential::FreeParticle => T::zero(),
            Potential::PseudoHarmonic { a, b, c } => a * r * r + b / (r * r) + c,
            Potential::MieType { a, b, c } => -a / r + b / (r * r) + c,
        }
    }

    /// The inverse-square coefficient `B`, zero for the free particle.
    pub fn inverse_square(&self) -> T {
        match *self {
            Potential::FreeParticle => T::zero(),
            Potential::PseudoHarmonic { b, .. } | Potential::MieType { b, .. } => b,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Potential::FreeParticle => "free",
            Potential::PseudoHarmonic { .. } => "pseudo",
            Potential::MieType { .. } => "mie",
        }
    }
}

/// Azimuthal separation constant `k^2 = 4 m (m + mu_1 + mu_2)`.
pub fn k_squared<T: Real>(m: HalfInt, p: &DunklParams<T>) -> T {
    let m: T = m.to_real();
    T::lit(4.0) * m * (m + p.mu1() + p.mu2())
}

/// Polar separation constant `q^2 = 4 (l+m)(l + m + mu_1 + mu_2 + mu_3 + 1/2)`.
pub fn q_squared<T: Real>(l: HalfInt, m: HalfInt, p: &DunklParams<T>) -> T {
    let lm: T = (l + m).to_real();
    T::lit(4.0) * lm * (lm + p.sum() + T::half())
}

/// Effective angular index `s = 2l + 2m + mu_1 + mu_2 + mu_3`.
pub fn s_value<T: Real>(l: HalfInt, m: HalfInt, p: &DunklParams<T>) -> T {
    let twice_lm = T::from_u32(l.twice() + m.twice()).expect("u32 representable");
    twice_lm + p.sum()
}

fn effective_radicand<T: Real>(s: T, b: T) -> Result<T> {
    let sh = s + T::half();
    let rad = sh * sh + T::two() * b;
    if !rad.is_finite() || rad < T::zero() {
        return Err(domain(format!("(s + 1/2)^2 + 2B = {rad} is negative (s = {s}, B = {b})")));
    }
    Ok(rad)
}

/// Laguerre index of the pseudo-harmonic solutions, `alpha = sqrt((s+1/2)^2 + 2B)`.
pub fn alpha_pseudo<T: Real>(s: T, b: T) -> Result<T> {
    Ok(effective_radicand(s, b)?.sqrt())
}

/// Laguerre index `beta` and power `nu` of the Mie-type solutions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MieIndices<T> {
    pub beta: T,
    pub nu: T,
}

/// `beta = 2 sqrt((s+1/2)^2 + 2B)` and `nu = 1/2 - a + sqrt((s+1/2)^2 + 2B)`.
pub fn beta_nu_mie<T: Real>(s: T, b: T, p: &DunklParams<T>) -> Result<MieIndices<T>> {
    let root = effective_radicand(s, b)?.sqrt();
    Ok(MieIndices {
        beta: T::two() * root,
        nu: T::half() - p.a() + root,
    })
}

/// The same indices from the unreduced radicand `4a^2 - 4a + 4q^2 + 8B + 1`.
pub fn beta_nu_mie_raw<T: Real>(q2: T, b: T, p: &DunklParams<T>) -> Result<MieIndices<T>> {
    let a = p.a();
    let four = T::lit(4.0);
    let rad = four * a * a - four * a + four * q2 + T::lit(8.0) * b + T::one();
    if rad < T::zero() {
        return Err(domain(format!("radicand {rad} is negative")));
    }
    let beta = rad.sqrt();
    Ok(MieIndices {
        beta,
        nu: T::half() - a + T::half() * beta,
    })
}

/// `E = sqrt(2A) (2n + 1 + alpha) + C`.
pub fn energy_pseudo<T: Real>(n: u32, s: T, a: T, b: T, c: T) -> Result<T> {
    if a <= T::zero() {
        return Err(domain(format!("A = {a} must be positive")));
    }
    let alpha = alpha_pseudo(s, b)?;
    let n: T = T::from_u32(n).expect("u32 representable");
    Ok((T::two() * a).sqrt() * (T::two() * n + T::one() + alpha) + c)
}

/// Mie-type spectrum exactly as `E = -A / (2 (n + (beta+1)/2)^2) + C`.
///
/// The coupling enters linearly, which equals the Coulomb result only for
/// `A = 1`; see [`energy_mie_quadratic`] for the spectrum of the radial
/// equation at general `A`.
pub fn energy_mie<T: Real>(n: u32, s: T, a: T, b: T, c: T) -> Result<T> {
    let big_n = mie_principal(n, s, a, b)?;
    Ok(-a / (T::two() * big_n * big_n) + c)
}

/// `E = -A^2 / (2 (n + (beta+1)/2)^2) + C`, the eigenvalues of the radial
/// Mie-type equation for any `A > 0`.
pub fn energy_mie_quadratic<T: Real>(n: u32, s: T, a: T, b: T, c: T) -> Result<T> {
    let big_n = mie_principal(n, s, a, b)?;
    Ok(-a * a / (T::two() * big_n * big_n) + c)
}

/// Effective principal number `n + (beta + 1)/2`.
fn mie_principal<T: Real>(n: u32, s: T, a: T, b: T) -> Result<T> {
    if a <= T::zero() {
        return Err(domain(format!("A = {a} must be positive")));
    }
    // beta does not depend on the deformation once s is known
    let beta = T::two() * alpha_pseudo(s, b)?;
    Ok(T::from_u32(n).expect("u32 representable") + T::half() * (beta + T::one()))
}

/// Both sides of the two centrifugal identities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CentrifugalIdentities<T> {
    /// `a^2 - a + q^2`
    pub lhs1: T,
    /// `s (s + 1)`
    pub rhs1: T,
    /// `(a - 1/2)^2 + q^2`
    pub lhs2: T,
    /// `(s + 1/2)^2`
    pub rhs2: T,
}

impl<T: Real> CentrifugalIdentities<T> {
    /// Largest relative mismatch, scaled by `max(1, |rhs|)`.
    pub fn max_relative_error(&self) -> T {
        let rel = |l: T, r: T| (l - r).abs() / r.abs().max(T::one());
        rel(self.lhs1, self.rhs1).max(rel(self.lhs2, self.rhs2))
    }
}

pub fn centrifugal_identities<T: Real>(l: HalfInt, m: HalfInt, p: &DunklParams<T>) -> CentrifugalIdentities<T> {
    let a = p.a();
    let q2 = q_squared(l, m, p);
    let s = s_value(l, m, p);
    let ah = a - T::half();
    let sh = s + T::half();
    CentrifugalIdentities {
        lhs1: a * a - a + q2,
        rhs1: s * (s + T::one()),
        lhs2: ah * ah + q2,
        rhs2: sh * sh,
    }
}
