use crate::error::{DunklError, Result};
use crate::scalar::Real;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// `∫_a^b f(x) dx` with the affine image of the rule.
    pub fn integrate<F: Fn(T) -> T>(&self, f: F, a: T, b: T) -> T {
        let half = (b - a) * T::half();
        let mid = (b + a) * T::half();
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |acc, (&x, &w)| acc + w * f(mid + half * x))
            * half
    }
}

/// Gauss-Legendre rule of the given order (exact through degree `2 order - 1`).
///
/// Roots of `P_order` by Newton iteration from the Tricomi initial guess;
/// only the non-negative half is computed and mirrored.
pub fn gauss_legendre<T: Real>(order: usize) -> QuadratureRule<T> {
    assert!(order >= 1, "quadrature order must be at least 1");
    let n = order;
    let nf = T::from_usize_lossy(n);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let tol = T::epsilon() * T::lit(4.0);
    for i in 0..(n + 1) / 2 {
        let mut x = (T::PI() * (T::from_usize_lossy(i) + T::lit(0.75)) / (nf + T::half())).cos();
        let mut dp = T::one();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x = x - dx;
            if dx.abs() <= tol {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d.is_finite() { d } else { dp };
        let w = T::two() / ((T::one() - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    QuadratureRule { nodes, weights }
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let k = T::from_usize_lossy(k);
        let p2 = ((T::two() * k - T::one()) * x * p1 - (k - T::one()) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (T::one(), T::zero());
    }
    let nf = T::from_usize_lossy(n);
    (p1, nf * (x * p1 - p0) / (x * x - T::one()))
}

/// Integration domains understood by [`integrate_checked`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment<T> {
    /// Affine Gauss-Legendre on `[start, end]`.
    Plain { start: T, end: T },
    /// `[start, end]` split into three panels; the two end panels use
    /// `x = a + d u^4` so algebraic endpoint behaviour such as
    /// `|cos φ|^(2 mu)` becomes smooth in `u`.
    Clustered { start: T, end: T },
    /// `[start, ∞)` mapped by `x = start + scale · u/(1-u)`, `u = t^4`.
    SemiInfinite { start: T, scale: T },
}

const CLUSTER_POWER: i32 = 4;
const CLUSTER_FRACTION: f64 = 0.25;
const TAIL_POWER: i32 = 4;

impl<T: Real> Segment<T> {
    fn integrate<F: Fn(T) -> T>(&self, f: &F, rule: &QuadratureRule<T>) -> T {
        match *self {
            Segment::Plain { start, end } => rule.integrate(f, start, end),
            Segment::Clustered { start, end } => {
                // end panels mapped by x = a + d u^q, plain panel in between
                let d = (end - start) * T::lit(CLUSTER_FRACTION);
                let q = T::from_i32(CLUSTER_POWER).expect("small int");
                let left = rule.integrate(|u| f(start + d * u.powi(CLUSTER_POWER)) * d * q * u.powi(CLUSTER_POWER - 1), T::zero(), T::one());
                let right = rule.integrate(|u| f(end - d * u.powi(CLUSTER_POWER)) * d * q * u.powi(CLUSTER_POWER - 1), T::zero(), T::one());
                left + rule.integrate(f, start + d, end - d) + right
            }
            Segment::SemiInfinite { start, scale } => {
                let p = T::from_i32(TAIL_POWER).expect("small int");
                rule.integrate(
                    |t| {
                        let u = t.powi(TAIL_POWER);
                        let du = p * t.powi(TAIL_POWER - 1);
                        let om = T::one() - u;
                        let x = start + scale * u / om;
                        let v = f(x) * scale * du / (om * om);
                        if v.is_finite() {
                            v
                        } else {
                            T::zero()
                        }
                    },
                    T::zero(),
                    T::one(),
                )
            }
        }
    }
}

/// Integrates over a union of segments at `order` and `2 order` points and
/// returns the higher-order value, or an error when the two differ by more
/// than `tol · max(1, |I|)`.
pub fn integrate_checked<T: Real, F: Fn(T) -> T>(f: F, segments: &[Segment<T>], order: usize, tol: T) -> Result<T> {
    let coarse_rule = gauss_legendre(order);
    let fine_rule = gauss_legendre(2 * order);
    let coarse = segments.iter().fold(T::zero(), |acc, s| acc + s.integrate(&f, &coarse_rule));
    let fine = segments.iter().fold(T::zero(), |acc, s| acc + s.integrate(&f, &fine_rule));
    let change = (fine - coarse).abs();
    let limit = tol * fine.abs().max(T::one());
    if !(change <= limit) {
        return Err(DunklError::QuadratureNonconvergence {
            change: change.to_f64_lossy(),
            limit: limit.to_f64_lossy(),
        });
    }
    Ok(fine)
}
