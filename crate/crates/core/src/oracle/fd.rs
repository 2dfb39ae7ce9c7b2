use crate::error::{domain, DunklError, Result};
use crate::model::{alpha_pseudo, Potential};
use crate::scalar::Real;

/// Smallest accepted number of interior points.
pub const MIN_INTERIOR_POINTS: usize = 100;
/// Largest number of eigenvalues one call may request.
pub const MAX_EIGENVALUES: usize = 10;

/// Uniform grid on `(0, r_max)` with `n` interior nodes `r_j = j h`,
/// `h = r_max / (n + 1)`, and Dirichlet conditions at both ends. The first
/// node sits one spacing off the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid<T> {
    r_max: T,
    n: usize,
}

impl<T: Real> RadialGrid<T> {
    pub fn new(r_max: T, n: usize) -> Result<Self> {
        if !(r_max > T::zero()) || !r_max.is_finite() {
            return Err(domain(format!("r_max must be positive and finite, got {r_max}")));
        }
        if n < MIN_INTERIOR_POINTS {
            return Err(domain(format!("grid needs at least {MIN_INTERIOR_POINTS} interior points, got {n}")));
        }
        Ok(Self { r_max, n })
    }

    /// Box size covering the turning point and decay tail of the `k` lowest
    /// states: `12 / (2A)^(1/4)` for the oscillator and
    /// `N (2N + 36) / A` with `N = k - 1 + (β+1)/2` for the Mie-type case.
    pub fn default_r_max(potential: &Potential<T>, s: T, k: usize) -> Result<T> {
        match *potential {
            Potential::FreeParticle => Ok(T::lit(30.0)),
            Potential::PseudoHarmonic { a, .. } => Ok(T::lit(12.0) / (T::two() * a).sqrt().sqrt()),
            Potential::MieType { a, b, .. } => {
                let beta = T::two() * alpha_pseudo(s, b)?;
                let big_n = T::from_usize_lossy(k.max(1) - 1) + T::half() * (beta + T::one());
                Ok(big_n * (T::two() * big_n + T::lit(36.0)) / a)
            }
        }
    }

    pub fn r_max(&self) -> T {
        self.r_max
    }

    pub fn r_min(&self) -> T {
        self.h()
    }

    pub fn interior_points(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> T {
        self.r_max / T::from_usize_lossy(self.n + 1)
    }

    pub fn node(&self, j: usize) -> T {
        T::from_usize_lossy(j + 1) * self.h()
    }

    /// The grid with half the spacing on the same box.
    pub fn refined(&self) -> Self {
        Self { r_max: self.r_max, n: 2 * self.n + 1 }
    }
}

/// Lowest eigenvalues of the discretized radial problem.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialOracleResult<T> {
    /// Energies on the requested grid, ascending.
    pub eigenvalues: Vec<T>,
    /// Energies on the grid with half the spacing.
    pub refined: Vec<T>,
    /// Richardson combination `(4 E_fine - E_coarse) / 3`.
    pub extrapolated: Vec<T>,
    /// Estimated error of `eigenvalues`, `4 |E_coarse - E_fine| / 3`.
    pub convergence_estimate: Vec<T>,
    pub grid: RadialGrid<T>,
}

impl<T: Real> RadialOracleResult<T> {
    /// Fails with [`DunklError::GridTooCoarse`] when any estimate exceeds `tol`.
    pub fn check_converged(&self, tol: T) -> Result<()> {
        let worst = self.convergence_estimate.iter().fold(T::zero(), |m, &e| m.max(e));
        if worst > tol {
            return Err(DunklError::GridTooCoarse { estimate: worst.to_f64_lossy(), tol: tol.to_f64_lossy() });
        }
        Ok(())
    }
}

/// Number of eigenvalues of the symmetric tridiagonal matrix `(diag, off)`
/// strictly below `x`, from the signs of the LDLᵀ pivots.
pub fn sturm_count<T: Real>(diag: &[T], off: &[T], x: T) -> usize {
    let tiny = T::min_positive_value().sqrt();
    let mut count = 0;
    let mut q = T::one();
    for (i, &d) in diag.iter().enumerate() {
        let coupling = if i == 0 { T::zero() } else { off[i - 1] * off[i - 1] / q };
        q = d - x - coupling;
        if q == T::zero() {
            q = -tiny;
        }
        if q < T::zero() {
            count += 1;
        }
    }
    count
}

/// The `k` smallest eigenvalues of a symmetric tridiagonal matrix by
/// bisection on the Sturm count.
pub fn tridiagonal_lowest<T: Real>(diag: &[T], off: &[T], k: usize) -> Result<Vec<T>> {
    if diag.is_empty() || off.len() + 1 != diag.len() {
        return Err(domain("tridiagonal matrix needs n diagonal and n-1 off-diagonal entries"));
    }
    if k > diag.len() {
        return Err(domain(format!("requested {k} eigenvalues of a {}x{} matrix", diag.len(), diag.len())));
    }
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for i in 0..diag.len() {
        let radius = if i > 0 { off[i - 1].abs() } else { T::zero() } + if i < off.len() { off[i].abs() } else { T::zero() };
        lo = lo.min(diag[i] - radius);
        hi = hi.max(diag[i] + radius);
    }
    let eps = T::epsilon();
    let mut out = Vec::with_capacity(k);
    let mut floor = lo;
    for idx in 0..k {
        let (mut a, mut b) = (floor, hi);
        for _ in 0..200 {
            let mid = T::half() * (a + b);
            if sturm_count(diag, off, mid) > idx {
                b = mid;
            } else {
                a = mid;
            }
            if b - a <= T::lit(4.0) * eps * a.abs().max(b.abs()).max(T::one()) {
                break;
            }
        }
        let ev = T::half() * (a + b);
        out.push(ev);
        floor = a;
    }
    Ok(out)
}

fn lowest_on_grid<T: Real>(potential: &Potential<T>, s: T, grid: &RadialGrid<T>, k: usize) -> Result<Vec<T>> {
    let h = grid.h();
    let inv_h2 = T::one() / (h * h);
    let centrifugal = s * (s + T::one());
    let diag: Vec<T> = (0..grid.n)
        .map(|j| {
            let r = grid.node(j);
            T::two() * inv_h2 + centrifugal / (r * r) + T::two() * potential.eval(r)
        })
        .collect();
    let off = vec![-inv_h2; grid.n - 1];
    // eigenvalues of the matrix are 2E
    Ok(tridiagonal_lowest(&diag, &off, k)?.into_iter().map(|l| T::half() * l).collect())
}

/// Lowest `k` energies of `-G'' + [s(s+1)/r^2 + 2V] G = 2E G` by second-order
/// central differences, with error estimates from one grid doubling.
///
/// Mie-type potentials fail with [`DunklError::NotBinding`] when fewer than
/// `k` discrete energies lie below the threshold `C`.
pub fn fd_radial_spectrum<T: Real>(potential: &Potential<T>, s: T, grid: &RadialGrid<T>, k: usize) -> Result<RadialOracleResult<T>> {
    potential.validate()?;
    if k == 0 || k > MAX_EIGENVALUES {
        return Err(domain(format!("number of eigenvalues must be in 1..={MAX_EIGENVALUES}, got {k}")));
    }
    if !(s >= T::zero()) {
        return Err(domain(format!("angular index s must be non-negative, got {s}")));
    }
    let fine_grid = grid.refined();
    let (coarse, fine) = rayon::join(
        || lowest_on_grid(potential, s, grid, k),
        || lowest_on_grid(potential, s, &fine_grid, k),
    );
    let (coarse, fine) = (coarse?, fine?);
    if let Potential::MieType { c, .. } = *potential {
        let found = fine.iter().filter(|&&e| e < c).count();
        if found < k {
            return Err(DunklError::NotBinding { found, requested: k });
        }
    }
    let four_thirds = T::lit(4.0) / T::lit(3.0);
    let extrapolated = coarse.iter().zip(&fine).map(|(&c, &f)| (T::lit(4.0) * f - c) / T::lit(3.0)).collect();
    let convergence_estimate = coarse.iter().zip(&fine).map(|(&c, &f)| four_thirds * (c - f).abs()).collect();
    Ok(RadialOracleResult { eigenvalues: coarse, refined: fine, extrapolated, convergence_estimate, grid: *grid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{energy_mie, energy_pseudo};

    #[test]
    fn sturm_count_on_diagonal() {
        let d = [1.0, 3.0, 2.0];
        let e = [0.0, 0.0];
        assert_eq!(sturm_count(&d, &e, 0.5), 0);
        assert_eq!(sturm_count(&d, &e, 2.5), 2);
        assert_eq!(sturm_count(&d, &e, 9.0), 3);
    }

    #[test]
    fn discrete_laplacian_closed_form() {
        // eigenvalues of tridiag(-1, 2, -1) are 2 - 2 cos(jπ/(n+1))
        let n = 50;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let ev = tridiagonal_lowest(&d, &e, 5).unwrap();
        for (j, v) in ev.iter().enumerate() {
            let exact = 2.0 - 2.0 * (std::f64::consts::PI * (j + 1) as f64 / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13);
        }
    }

    #[test]
    fn oscillator_lowest_levels() {
        let pot = Potential::pseudo_harmonic(0.5, 0.0, 0.0).unwrap();
        let grid = RadialGrid::new(12.0, 4000).unwrap();
        let res = fd_radial_spectrum(&pot, 0.0, &grid, 3).unwrap();
        for (n, e) in res.eigenvalues.iter().enumerate() {
            let exact = energy_pseudo::<f64>(n as u32, 0.0, 0.5, 0.0, 0.0).unwrap();
            assert!((e - exact).abs() < 1e-4, "n={n}: {e} vs {exact}");
        }
        assert!(res.check_converged(1e-4).is_ok());
        assert!(res.check_converged(1e-12).is_err());
    }

    #[test]
    fn second_order_convergence_ratio() {
        let pot = Potential::pseudo_harmonic(0.5, 0.0, 0.0).unwrap();
        let err = |n| {
            let g = RadialGrid::new(12.0, n).unwrap();
            (lowest_on_grid(&pot, 0.0, &g, 1).unwrap()[0] - 1.5f64).abs()
        };
        let ratio = err(400) / err(801);
        assert!((3.0..=5.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn hydrogen_ground_level() {
        let pot = Potential::mie(1.0, 0.0, 0.0).unwrap();
        let grid = RadialGrid::new(60.0, 6000).unwrap();
        let res = fd_radial_spectrum(&pot, 0.0, &grid, 2).unwrap();
        assert!((res.eigenvalues[0] - energy_mie::<f64>(0, 0.0, 1.0, 0.0, 0.0).unwrap()).abs() < 1e-4);
        assert!((res.extrapolated[1] + 0.125).abs() < 1e-5);
    }

    #[test]
    fn free_particle_spectrum_positive() {
        let grid = RadialGrid::new(30.0, 500).unwrap();
        let res = fd_radial_spectrum(&Potential::FreeParticle, 0.0, &grid, 4).unwrap();
        assert!(res.eigenvalues.iter().all(|&e| e > 0.0));
        assert!(res.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn shallow_box_reports_not_binding() {
        let pot = Potential::mie(1.0, 0.0, 0.0).unwrap();
        let grid = RadialGrid::new(5.0, 200).unwrap();
        assert!(matches!(fd_radial_spectrum(&pot, 0.0, &grid, 6), Err(DunklError::NotBinding { .. })));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(RadialGrid::new(10.0, 50).is_err());
        assert!(RadialGrid::new(-1.0, 500).is_err());
        let grid = RadialGrid::new(10.0, 200).unwrap();
        assert!(fd_radial_spectrum(&Potential::FreeParticle, 0.0, &grid, 11).is_err());
        assert!(fd_radial_spectrum(&Potential::FreeParticle, -1.0, &grid, 1).is_err());
    }
}
