//! Residual and orthogonality suites shared by the command-line tool and
//! the acceptance tests. Everything here runs in `f64`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{domain, DunklError, Result};
use crate::halfint::HalfInt;
use crate::model::{
    beta_nu_mie, beta_nu_mie_raw, centrifugal_identities, energy_mie, energy_mie_quadratic, energy_pseudo, k_squared,
    q_squared, s_value, DunklParams, Parity, Potential, QuantumNumbers, SectorLabels,
};
use crate::ops::{angular_momentum_commutator_residual, apply_b_phi, apply_n_theta, hamiltonian_residual, Axis, StencilConfig};
use crate::oracle::{fd_radial_spectrum, phi_gram, radial_gram, radial_gram_scaled, theta_gram, RadialGrid};
use crate::solutions::{AngularPhi, AngularTheta, FreeRadial, RadialNormalization, RadialSolution, Wavefunction};

/// Quadrature order used by the Gram checks.
pub const GRAM_ORDER: usize = 120;
/// Minimum residual the Hamiltonian negative control must produce.
pub const NEGATIVE_CONTROL_MIN: f64 = 0.05;
/// Energy shift applied in the negative control.
pub const NEGATIVE_CONTROL_SHIFT: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    Angular,
    Radial,
    Orthogonality,
    Hamiltonian,
    Commutators,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Identities, Suite::Angular, Suite::Radial, Suite::Orthogonality, Suite::Hamiltonian, Suite::Commutators];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Angular => "angular",
            Suite::Radial => "radial",
            Suite::Orthogonality => "orthogonality",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Commutators => "commutators",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = DunklError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

/// Whether a check passes below or above its threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// pass iff `value <= threshold`
    AtMost,
    /// pass iff `value >= threshold`
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub samples: usize,
    /// Largest residual, or smallest for [`Bound::AtLeast`] checks.
    pub value: f64,
    pub threshold: f64,
    pub bound: Bound,
    pub passed: bool,
}

impl CheckResult {
    fn new(suite: Suite, name: impl Into<String>, samples: usize, value: f64, threshold: f64, bound: Bound) -> Self {
        let passed = match bound {
            Bound::AtMost => value <= threshold,
            Bound::AtLeast => value >= threshold,
        };
        Self { suite, name: name.into(), samples, value, threshold, bound, passed }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub params: DunklParams<f64>,
    /// Overrides every suite's default tolerance when set.
    pub tol: Option<f64>,
    pub seed: u64,
}

impl VerifyOptions {
    pub fn new(params: DunklParams<f64>, tol: Option<f64>, seed: u64) -> Self {
        Self { params, tol, seed }
    }

    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    /// Independent generator per check so results do not depend on order.
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    match suite {
        Suite::Identities => identities(opts),
        Suite::Angular => angular(opts),
        Suite::Radial => radial(opts),
        Suite::Orthogonality => orthogonality(opts),
        Suite::Hamiltonian => hamiltonian(opts),
        Suite::Commutators => commutators(opts),
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values.into_iter().fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

fn half_ints_upto(twice_max: u32) -> impl Iterator<Item = HalfInt> + Clone {
    (0..=twice_max).map(HalfInt::from_twice)
}

fn identities(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let tol = opts.tol(1e-12);
    let p = &opts.params;
    let mut out = Vec::new();

    let mut fixed = Vec::new();
    for l in half_ints_upto(5) {
        for m in half_ints_upto(5) {
            fixed.push(centrifugal_identities(l, m, p).max_relative_error());
        }
    }
    out.push(CheckResult::new(Suite::Identities, "centrifugal identities, l,m <= 5/2", fixed.len(), max_of(fixed), tol, Bound::AtMost));

    let mut rng = opts.rng(1);
    let mut random = Vec::with_capacity(200);
    for _ in 0..200 {
        let mu = DunklParams::new(rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0))?;
        let l = HalfInt::from_twice(rng.gen_range(0..=5));
        let m = HalfInt::from_twice(rng.gen_range(0..=5));
        random.push(centrifugal_identities(l, m, &mu).max_relative_error());
    }
    out.push(CheckResult::new(Suite::Identities, "centrifugal identities, 200 random tuples", 200, max_of(random), tol, Bound::AtMost));

    let mut mie = Vec::new();
    for l in half_ints_upto(5) {
        for m in half_ints_upto(5) {
            for b in [0.0, 0.8, 3.0] {
                let reduced = beta_nu_mie(s_value(l, m, p), b, p)?;
                let raw = beta_nu_mie_raw(q_squared(l, m, p), b, p)?;
                mie.push(((reduced.beta - raw.beta).abs() / raw.beta.max(1.0)).max((reduced.nu - raw.nu).abs() / raw.nu.abs().max(1.0)));
            }
        }
    }
    out.push(CheckResult::new(Suite::Identities, "Mie indices, raw and reduced forms", mie.len(), max_of(mie), tol, Bound::AtMost));

    let mut reduction = Vec::new();
    for n in 0..4u32 {
        for l in half_ints_upto(4) {
            for m in half_ints_upto(4) {
                let s = s_value(l, m, p);
                let e = energy_pseudo(n, s, 0.5, 0.0, 0.0)?;
                let direct = 2.0 * f64::from(n) + 2.0 * l.to_f64() + 2.0 * m.to_f64() + p.sum() + 1.5;
                reduction.push((e - direct).abs() / direct);
            }
        }
    }
    out.push(CheckResult::new(Suite::Identities, "pseudo-harmonic B = C = 0 reduction", reduction.len(), max_of(reduction), tol, Bound::AtMost));
    Ok(out)
}

/// Angle uniformly drawn from `(lo, hi)` at least `margin` away from multiples of π/2.
fn safe_angle(rng: &mut ChaCha8Rng, lo: f64, hi: f64, margin: f64) -> f64 {
    loop {
        let t: f64 = rng.gen_range(lo..hi);
        let rem = t.rem_euclid(std::f64::consts::FRAC_PI_2);
        if rem > margin && std::f64::consts::FRAC_PI_2 - rem > margin {
            return t;
        }
    }
}

fn eigen_relative(lhs: f64, lambda: f64, g: f64) -> f64 {
    (lhs - lambda * g).abs() / (lambda * g).abs().max(g.abs()).max(1.0)
}

/// `(m, l)` pairs with `m, l <= 2` allowed in `sector`.
fn angular_states(sector: SectorLabels) -> Vec<(HalfInt, HalfInt)> {
    let mut v = Vec::new();
    for m in half_ints_upto(4) {
        for l in half_ints_upto(4) {
            if QuantumNumbers::new(m, l, 0, sector).is_ok() {
                v.push((m, l));
            }
        }
    }
    v
}

fn angular(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let tol = opts.tol(1e-6);
    let p = opts.params;
    let cfg = StencilConfig::default();
    let mut rng = opts.rng(2);
    let phis: Vec<f64> = (0..40).map(|_| safe_angle(&mut rng, 0.0, 2.0 * std::f64::consts::PI, 0.05)).collect();
    let thetas: Vec<f64> = (0..40).map(|_| safe_angle(&mut rng, 0.0, std::f64::consts::PI, 0.05)).collect();
    let per_sector: Vec<Result<(usize, f64, f64, f64)>> = SectorLabels::all()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|sector| {
            let [s1, s2, s3] = sector.s;
            let (mut count, mut b_res, mut n_res, mut parity) = (0, 0.0f64, 0.0f64, 0.0f64);
            for (m, l) in angular_states(sector) {
                let phi = AngularPhi::new(m, s1, s2, p)?;
                let theta = AngularTheta::new(l, m, s3, p)?;
                let k2 = k_squared(m, &p);
                let q2 = q_squared(l, m, &p);
                for (&a, &t) in phis.iter().zip(&thetas) {
                    let g = phi.eval(a);
                    b_res = max_of([b_res, eigen_relative(apply_b_phi(&phi, &p, a, &cfg)?, 0.5 * k2, g)]);
                    let h = theta.eval(t);
                    n_res = max_of([n_res, eigen_relative(apply_n_theta(&theta, &p, t, k2, &cfg)?, 0.5 * q2, h)]);
                    let pr = [
                        (phi.eval(std::f64::consts::PI - a) - f64::from(s1.sign()) * g).abs(),
                        (phi.eval(-a) - f64::from(s2.sign()) * g).abs(),
                        (theta.eval(std::f64::consts::PI - t) - f64::from(s3.sign()) * h).abs(),
                    ];
                    parity = max_of([parity, max_of(pr) / g.abs().max(h.abs()).max(1.0)]);
                    count += 1;
                }
            }
            Ok((count, b_res, n_res, parity))
        })
        .collect();
    let per_sector = per_sector.into_iter().collect::<Result<Vec<_>>>()?;
    let samples = per_sector.iter().map(|x| x.0).sum();
    Ok(vec![
        CheckResult::new(Suite::Angular, "B_phi Phi = (k^2/2) Phi, m <= 2, all sectors", samples, max_of(per_sector.iter().map(|x| x.1)), tol, Bound::AtMost),
        CheckResult::new(Suite::Angular, "N_theta Theta = (q^2/2) Theta, l, m <= 2, all sectors", samples, max_of(per_sector.iter().map(|x| x.2)), tol, Bound::AtMost),
        CheckResult::new(Suite::Angular, "reflection parity of Phi and Theta", samples, max_of(per_sector.iter().map(|x| x.3)), tol, Bound::AtMost),
    ])
}

/// 50 log-spaced radii in `[0.05, 20]`.
pub fn radial_sample_points() -> Vec<f64> {
    (0..50).map(|i| 0.05 * 400f64.powf(f64::from(i) / 49.0)).collect()
}

/// Two `(l, m)` choices, one integer and one half-integer sector.
fn radial_sectors() -> [(HalfInt, HalfInt); 2] {
    [(HalfInt::ZERO, HalfInt::ZERO), (HalfInt::HALF, HalfInt::ONE)]
}

fn radial(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let tol = opts.tol(1e-6);
    let p = opts.params;
    let pts = radial_sample_points();
    let mut pseudo = Vec::new();
    let mut mie = Vec::new();
    for (l, m) in radial_sectors() {
        let s = s_value(l, m, &p);
        for n in 0..4 {
            for b in [0.0, 1.5] {
                let sol = RadialSolution::Pseudo(crate::solutions::PseudoRadial::new(n, s, &p, 0.5, b, 0.1, RadialNormalization::Physical)?);
                for &r in &pts {
                    pseudo.push(sol.ode_residual(r)?);
                }
            }
            for b in [0.0, 0.8] {
                let sol = RadialSolution::Mie(crate::solutions::MieRadial::bound_state(n, s, &p, 1.0, b, 0.0, RadialNormalization::Physical)?);
                for &r in &pts {
                    mie.push(sol.ode_residual(r)?);
                }
            }
        }
    }
    let mut free = Vec::new();
    let mut forms = Vec::new();
    for (e, (l, m)) in [(0.8, radial_sectors()[0]), (0.5, radial_sectors()[1]), (1.7, (HalfInt::ONE, HalfInt::ZERO)), (0.2, (HalfInt::from_twice(3), HalfInt::HALF)), (3.0, (HalfInt::from_int(2), HalfInt::from_int(2)))] {
        let f = FreeRadial::new(e, s_value(l, m, &p), &p)?;
        for &r in &pts {
            free.push(f.ode_residual(r)?);
            let (a, b) = (f.eval(r)?, f.eval_spherical(r)?);
            forms.push((a - b).abs() / a.abs().max(1e-300).max(b.abs()));
        }
    }
    Ok(vec![
        CheckResult::new(Suite::Radial, "pseudo-harmonic radial equation, n <= 3", pseudo.len(), max_of(pseudo), tol, Bound::AtMost),
        CheckResult::new(Suite::Radial, "Mie-type radial equation, n <= 3", mie.len(), max_of(mie), tol, Bound::AtMost),
        CheckResult::new(Suite::Radial, "free-particle radial equation", free.len(), max_of(free), tol, Bound::AtMost),
        CheckResult::new(Suite::Radial, "Bessel and spherical-Bessel forms agree", forms.len(), max_of(forms), opts.tol(1e-12), Bound::AtMost),
    ])
}

fn gram_deviation(r: &crate::oracle::GramReport<f64>) -> f64 {
    r.max_off_diagonal.max(r.max_diagonal_deviation)
}

fn orthogonality(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let p = opts.params;
    let ang_tol = opts.tol(1e-8);
    let rad_tol = opts.tol(1e-7);
    let mut out = Vec::new();

    let pairs = [(Parity::Even, Parity::Even), (Parity::Odd, Parity::Even), (Parity::Even, Parity::Odd), (Parity::Odd, Parity::Odd)];
    let phi_devs = pairs
        .par_iter()
        .map(|&(s1, s2)| {
            let shift = s1.exponent() + s2.exponent();
            let ms: Vec<_> = (0..=8).map(HalfInt::from_twice).filter(|m| m.integer_after_shift(shift).is_some()).collect();
            phi_gram(&p, s1, s2, &ms, GRAM_ORDER).map(|g| (ms.len(), gram_deviation(&g)))
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(CheckResult::new(Suite::Orthogonality, "Phi Gram matrices, m <= 4", phi_devs.iter().map(|x| x.0).sum(), max_of(phi_devs.iter().map(|x| x.1)), ang_tol, Bound::AtMost));

    let theta_cases: Vec<(HalfInt, Parity)> =
        half_ints_upto(4).flat_map(|m| [(m, Parity::Even), (m, Parity::Odd)]).collect();
    let theta_devs = theta_cases
        .par_iter()
        .map(|&(m, s3)| {
            let ls: Vec<_> = (0..=8).map(HalfInt::from_twice).filter(|l| l.integer_after_shift(s3.exponent()).is_some()).collect();
            theta_gram(&p, m, s3, &ls, GRAM_ORDER).map(|g| (ls.len(), gram_deviation(&g)))
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(CheckResult::new(Suite::Orthogonality, "Theta Gram matrices, l <= 4, m <= 2", theta_devs.iter().map(|x| x.0).sum(), max_of(theta_devs.iter().map(|x| x.1)), ang_tol, Bound::AtMost));

    // different sectors are orthogonal under the same weight by parity
    let mut cross = Vec::new();
    let seg: Vec<_> = (0..4)
        .map(|q| {
            let start = f64::from(q) * std::f64::consts::FRAC_PI_2;
            crate::specfun::Segment::Clustered { start, end: start + std::f64::consts::FRAC_PI_2 }
        })
        .collect();
    for (i, &(a1, a2)) in pairs.iter().enumerate() {
        for &(b1, b2) in &pairs[i + 1..] {
            let fa = AngularPhi::new(HalfInt::from_twice(a1.exponent() + a2.exponent() + 2), a1, a2, p)?;
            let fb = AngularPhi::new(HalfInt::from_twice(b1.exponent() + b2.exponent()), b1, b2, p)?;
            let v = crate::specfun::integrate_checked(
                |t| fa.eval(t) * fb.eval(t) * crate::solutions::phi_weight(&p, t),
                &seg,
                GRAM_ORDER,
                1e-9,
            )?;
            cross.push(v.abs());
        }
    }
    out.push(CheckResult::new(Suite::Orthogonality, "Phi cross-sector overlaps", cross.len(), max_of(cross), ang_tol, Bound::AtMost));

    let mut radial = Vec::new();
    let mut scaled = Vec::new();
    for (l, m) in radial_sectors() {
        let s = s_value(l, m, &p);
        for pot in [Potential::pseudo_harmonic(0.5, 1.5, 0.0)?, Potential::pseudo_harmonic(1.3, 0.0, 0.2)?, Potential::mie(1.0, 0.8, 0.0)?, Potential::mie(1.0, 0.0, 0.0)?] {
            radial.push(gram_deviation(&radial_gram(&p, &pot, s, &[0, 1, 2], GRAM_ORDER)?));
            scaled.extend(radial_gram_scaled(&p, &pot, s, &[0, 1, 2], GRAM_ORDER)?.into_iter().map(|v| (v - 1.0).abs()));
        }
    }
    out.push(CheckResult::new(Suite::Orthogonality, "radial Gram matrices in r, n <= 2", radial.len() * 3, max_of(radial), rad_tol, Bound::AtMost));
    out.push(CheckResult::new(Suite::Orthogonality, "radial norms in the scaled variable, n <= 2", scaled.len(), max_of(scaled), rad_tol, Bound::AtMost));
    Ok(out)
}

/// A state and potential used by the Hamiltonian suite.
#[derive(Debug, Clone)]
pub struct HamiltonianCase {
    pub label: &'static str,
    pub wavefunction: Wavefunction<f64>,
    /// Half-width of the sampling cube.
    pub extent: f64,
}

/// One state of each potential.
pub fn hamiltonian_cases(p: DunklParams<f64>) -> Result<Vec<HamiltonianCase>> {
    let sec = |a: &str| a.parse::<SectorLabels>();
    let pseudo = QuantumNumbers::new(HalfInt::HALF, HalfInt::ZERO, 0, sec("-++")?)?;
    let mie = QuantumNumbers::new(HalfInt::ZERO, HalfInt::HALF, 0, sec("++-")?)?;
    let free = QuantumNumbers::new(HalfInt::ONE, HalfInt::ZERO, 0, sec("--+")?)?;
    Ok(vec![
        HamiltonianCase {
            label: "pseudo-harmonic n=0 l=0 m=1/2 (-++)",
            wavefunction: Wavefunction::new(pseudo, p, Potential::pseudo_harmonic(0.5, 0.5, 0.1)?, None, RadialNormalization::Physical)?,
            extent: 1.5,
        },
        HamiltonianCase {
            label: "Mie-type n=0 l=1/2 m=0 (++-)",
            wavefunction: Wavefunction::new(mie, p, Potential::mie(1.0, 0.8, 0.0)?, None, RadialNormalization::Physical)?,
            extent: 2.0,
        },
        HamiltonianCase {
            label: "free particle E=1/2 l=0 m=1 (--+)",
            wavefunction: Wavefunction::new(free, p, Potential::FreeParticle, Some(0.5), RadialNormalization::Physical)?,
            extent: 1.7,
        },
    ])
}

/// `n` points with every `|x_i|` in `[0.2, extent]` and random signs.
pub fn off_plane_points(rng: &mut ChaCha8Rng, n: usize, extent: f64) -> Vec<[f64; 3]> {
    (0..n)
        .map(|_| {
            let mut x = [0.0; 3];
            for c in &mut x {
                let mag: f64 = rng.gen_range(0.2..extent);
                *c = if rng.gen_bool(0.5) { mag } else { -mag };
            }
            x
        })
        .collect()
}

fn hamiltonian(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let tol = opts.tol(1e-4);
    let p = opts.params;
    let cfg = StencilConfig::default();
    let mut out = Vec::new();
    for (i, case) in hamiltonian_cases(p)?.into_iter().enumerate() {
        let pts = off_plane_points(&mut opts.rng(10 + i as u64), 20, case.extent);
        let w = &case.wavefunction;
        let e = w.energy();
        let (good, bad): (Vec<f64>, Vec<f64>) = pts
            .par_iter()
            .map(|&x| {
                Ok((
                    hamiltonian_residual(w, e, &p, w.potential(), x, &cfg)?,
                    hamiltonian_residual(w, e + NEGATIVE_CONTROL_SHIFT, &p, w.potential(), x, &cfg)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .unzip();
        out.push(CheckResult::new(Suite::Hamiltonian, case.label, pts.len(), max_of(good), tol, Bound::AtMost));
        let worst = bad.iter().copied().fold(f64::INFINITY, f64::min);
        out.push(CheckResult::new(
            Suite::Hamiltonian,
            format!("{} with E + 0.1 (negative control)", case.label),
            pts.len(),
            worst,
            NEGATIVE_CONTROL_MIN,
            Bound::AtLeast,
        ));
    }
    Ok(out)
}

fn gaussian(x: [f64; 3]) -> f64 {
    (-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 2.0).exp()
}

/// Test functions for the commutator identity, with their labels.
pub fn commutator_test_functions() -> [(&'static str, fn([f64; 3]) -> f64); 3] {
    [
        ("x1 x2 x3 exp(-r^2/2)", |x| x[0] * x[1] * x[2] * gaussian(x)),
        ("(x1 + x2^2/2 - x3) exp(-r^2/2)", |x| (x[0] + 0.5 * x[1] * x[1] - x[2]) * gaussian(x)),
        ("(x1^2 x2 + x3^3 + x1) exp(-r^2/4)", |x| {
            (x[0] * x[0] * x[1] + x[2] * x[2] * x[2] + x[0]) * (-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 4.0).exp()
        }),
    ]
}

pub const COMMUTATOR_PAIRS: [(Axis, Axis); 3] = [(Axis::X1, Axis::X2), (Axis::X2, Axis::X3), (Axis::X3, Axis::X1)];

fn commutators(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let tol = opts.tol(1e-4);
    let p = opts.params;
    let cfg = StencilConfig::default();
    let mut out = Vec::new();
    for (i, (label, f)) in commutator_test_functions().into_iter().enumerate() {
        let pts = off_plane_points(&mut opts.rng(20 + i as u64), 10, 1.5);
        let res = COMMUTATOR_PAIRS
            .par_iter()
            .flat_map_iter(|&pair| pts.iter().map(move |&x| (pair, x)))
            .map(|(pair, x)| angular_momentum_commutator_residual(&f, &p, pair, x, &cfg).map(|r| r.residual))
            .collect::<Result<Vec<_>>>()?;
        out.push(CheckResult::new(Suite::Commutators, format!("[J_j, J_k] identity on {label}, 3 pairs"), res.len(), max_of(res), tol, Bound::AtMost));
    }
    Ok(out)
}

/// One analytic energy next to its finite-difference counterpart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRow {
    pub n: u32,
    pub analytic: f64,
    /// `E = -A^2/(2N^2) + C` for the Mie-type potential; `None` otherwise.
    pub analytic_quadratic: Option<f64>,
    /// Richardson-extrapolated finite-difference energy.
    pub fd: f64,
    /// Finite-difference energy on the requested grid.
    pub fd_grid: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub convergence_estimate: f64,
}

/// Analytic spectrum formula for the `n`-th state of a bound potential.
pub fn analytic_energy(potential: &Potential<f64>, s: f64, n: u32) -> Result<f64> {
    match *potential {
        Potential::FreeParticle => Err(DunklError::NotBinding { found: 0, requested: n as usize + 1 }),
        Potential::PseudoHarmonic { a, b, c } => energy_pseudo(n, s, a, b, c),
        Potential::MieType { a, b, c } => energy_mie(n, s, a, b, c),
    }
}

/// Compares the lowest `k` analytic energies with the finite-difference
/// oracle on `grid`.
pub fn oracle_compare(potential: &Potential<f64>, s: f64, grid: &RadialGrid<f64>, k: usize) -> Result<Vec<OracleRow>> {
    let res = fd_radial_spectrum(potential, s, grid, k)?;
    (0..k)
        .map(|i| {
            let n = i as u32;
            let analytic = analytic_energy(potential, s, n)?;
            let analytic_quadratic = match *potential {
                Potential::MieType { a, b, c } => Some(energy_mie_quadratic(n, s, a, b, c)?),
                _ => None,
            };
            let fd = res.extrapolated[i];
            let abs_diff = (analytic - fd).abs();
            Ok(OracleRow {
                n,
                analytic,
                analytic_quadratic,
                fd,
                fd_grid: res.eigenvalues[i],
                abs_diff,
                rel_diff: abs_diff / analytic.abs().max(f64::MIN_POSITIVE),
                convergence_estimate: res.convergence_estimate[i],
            })
        })
        .collect()
}
