use crate::error::Result;
use crate::model::{DunklParams, Potential, QuantumNumbers};
use crate::scalar::Real;
use crate::solutions::{AngularPhi, AngularTheta, RadialNormalization, RadialSolution};

/// `(r, θ, φ)` of a Cartesian point with `x_3 = r cos θ`, `φ = atan2(x_2, x_1)`.
pub fn spherical_from_cartesian<T: Real>(x: [T; 3]) -> (T, T, T) {
    let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let theta = if r == T::zero() { T::zero() } else { (x[2] / r).max(-T::one()).min(T::one()).acos() };
    (r, theta, x[1].atan2(x[0]))
}

/// The separated factors at one point and their product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavefunctionSample<T> {
    pub radial: T,
    pub theta: T,
    pub phi: T,
    pub psi: T,
}

/// `ψ(r, θ, φ) = R(r) Θ(θ) Φ(φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction<T> {
    qn: QuantumNumbers,
    potential: Potential<T>,
    radial: RadialSolution<T>,
    theta: AngularTheta<T>,
    phi: AngularPhi<T>,
}

impl<T: Real> Wavefunction<T> {
    pub fn new(
        qn: QuantumNumbers,
        params: DunklParams<T>,
        potential: Potential<T>,
        free_energy: Option<T>,
        norm: RadialNormalization,
    ) -> Result<Self> {
        potential.validate()?;
        Ok(Self {
            radial: RadialSolution::for_state(&qn, &params, &potential, free_energy, norm)?,
            theta: AngularTheta::from_quantum_numbers(&qn, params)?,
            phi: AngularPhi::from_quantum_numbers(&qn, params)?,
            qn,
            potential,
        })
    }

    pub fn quantum_numbers(&self) -> &QuantumNumbers {
        &self.qn
    }

    pub fn potential(&self) -> &Potential<T> {
        &self.potential
    }

    pub fn energy(&self) -> T {
        self.radial.energy()
    }

    pub fn radial(&self) -> &RadialSolution<T> {
        &self.radial
    }

    pub fn theta_factor(&self) -> &AngularTheta<T> {
        &self.theta
    }

    pub fn phi_factor(&self) -> &AngularPhi<T> {
        &self.phi
    }

    pub fn sample(&self, r: T, theta: T, phi: T) -> Result<WavefunctionSample<T>> {
        let radial = self.radial.eval(r)?;
        let th = self.theta.eval(theta);
        let ph = self.phi.eval(phi);
        Ok(WavefunctionSample { radial, theta: th, phi: ph, psi: radial * th * ph })
    }

    pub fn eval_spherical(&self, r: T, theta: T, phi: T) -> Result<T> {
        Ok(self.sample(r, theta, phi)?.psi)
    }

    pub fn eval_cartesian(&self, x: [T; 3]) -> Result<T> {
        let (r, theta, phi) = spherical_from_cartesian(x);
        self.eval_spherical(r, theta, phi)
    }
}
