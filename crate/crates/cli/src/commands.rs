use log::warn;
use rayon::prelude::*;

use dunkl_core::model::{alpha_pseudo, beta_nu_mie, energy_mie, energy_mie_quadratic, energy_pseudo, s_value};
use dunkl_core::oracle::RadialGrid;
use dunkl_core::solutions::{RadialNormalization, Wavefunction};
use dunkl_core::verify::{oracle_compare, run_suite, Bound, Suite, VerifyOptions};
use dunkl_core::{DunklParams, HalfInt, Potential, QuantumNumbers};

use crate::args::{BoundKind, Cli, Coefficients, EvalArgs, NormArg, OracleArgs, PotentialKind, SpectrumArgs, SuiteArg, VerifyArgs};
use crate::report::{Cell, Report};
use crate::CliError;

/// Default absolute tolerance of the oracle comparison.
pub const ORACLE_TOL: f64 = 1e-4;

/// Points with a Cartesian coordinate below this fraction of `r` count as
/// lying on a coordinate plane.
pub const PLANE_TOL: f64 = 1e-12;

fn potential_name(kind: PotentialKind) -> &'static str {
    match kind {
        PotentialKind::Pseudo => "pseudo",
        PotentialKind::Mie => "mie",
        PotentialKind::Free => "free",
    }
}

fn build_potential(kind: PotentialKind, coef: &Coefficients) -> Result<Potential<f64>, CliError> {
    let a = || coef.a.ok_or_else(|| CliError::Usage(format!("--A is required for --potential {}", potential_name(kind))));
    Ok(match kind {
        PotentialKind::Pseudo => Potential::pseudo_harmonic(a()?, coef.b, coef.c)?,
        PotentialKind::Mie => Potential::mie(a()?, coef.b, coef.c)?,
        PotentialKind::Free => Potential::FreeParticle,
    })
}

fn params(mu: [f64; 3]) -> Result<DunklParams<f64>, CliError> {
    Ok(DunklParams::new(mu[0], mu[1], mu[2])?)
}

fn echo_common(r: &mut Report, cli: &Cli) {
    r.param("tol", cli.tol).param("seed", cli.seed);
}

fn echo_potential(r: &mut Report, kind: PotentialKind, coef: &Coefficients) {
    r.param("potential", potential_name(kind));
    if kind != PotentialKind::Free {
        r.param("A", coef.a).param("B", coef.b).param("C", coef.c);
    }
}

pub fn spectrum(cli: &Cli, args: &SpectrumArgs) -> Result<Report, CliError> {
    let p = params(args.mu)?;
    let kind = PotentialKind::from(args.potential);
    let pot = build_potential(kind, &args.coef)?;
    let columns = match args.potential {
        BoundKind::Pseudo => vec!["n", "l", "m", "sector", "s", "alpha", "energy"],
        BoundKind::Mie => vec!["n", "l", "m", "sector", "s", "beta", "energy", "energy_quadratic"],
    };
    let mut report = Report::new("spectrum", columns);
    echo_potential(&mut report, kind, &args.coef);
    report
        .param("mu", args.mu)
        .param("n_max", args.n_max)
        .param("l_max", args.l_max.to_string())
        .param("m_max", args.m_max.to_string())
        .param("sectors", args.sectors.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    echo_common(&mut report, cli);

    let mut rows: Vec<(f64, Vec<Cell>)> = Vec::new();
    for &sector in &args.sectors.0 {
        for m in HalfInt::range_inclusive(args.m_max) {
            for l in HalfInt::range_inclusive(args.l_max) {
                if QuantumNumbers::new(m, l, 0, sector).is_err() {
                    continue;
                }
                let s = s_value(l, m, &p);
                for n in 0..=args.n_max {
                    let head = vec![n.into(), l.to_string().into(), m.to_string().into(), sector.to_string().into(), s.into()];
                    let (e, tail): (f64, Vec<Cell>) = match pot {
                        Potential::PseudoHarmonic { a, b, c } => {
                            let e = energy_pseudo(n, s, a, b, c)?;
                            (e, vec![alpha_pseudo(s, b)?.into(), e.into()])
                        }
                        Potential::MieType { a, b, c } => {
                            let e = energy_mie(n, s, a, b, c)?;
                            (e, vec![beta_nu_mie(s, b, &p)?.beta.into(), e.into(), energy_mie_quadratic(n, s, a, b, c)?.into()])
                        }
                        Potential::FreeParticle => unreachable!("spectrum takes bound potentials only"),
                    };
                    rows.push((e, head.into_iter().chain(tail).collect()));
                }
            }
        }
    }
    // stable, so equal energies keep generation order
    rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (_, row) in rows {
        report.push_row(row);
    }
    Ok(report)
}

pub fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Report, CliError> {
    let opts = VerifyOptions::new(params(args.mu)?, cli.tol, cli.seed);
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Angular => vec![Suite::Angular],
        SuiteArg::Radial => vec![Suite::Radial],
        SuiteArg::Orthogonality => vec![Suite::Orthogonality],
        SuiteArg::Hamiltonian => vec![Suite::Hamiltonian],
        SuiteArg::Commutators => vec![Suite::Commutators],
    };
    let results = suites.par_iter().map(|&s| run_suite(s, &opts)).collect::<Result<Vec<_>, _>>()?;

    let mut report = Report::new("verify", vec!["suite", "check", "samples", "value", "bound", "threshold", "passed"]);
    report
        .param("suite", suites.iter().map(|s| s.name()).collect::<Vec<_>>().join(","))
        .param("mu", args.mu);
    echo_common(&mut report, cli);
    let mut all = true;
    for check in results.into_iter().flatten() {
        all &= check.passed;
        if !check.passed {
            warn!("{} / {}: {:e} against {:e}", check.suite, check.name, check.value, check.threshold);
        }
        let bound = match check.bound {
            Bound::AtMost => "<=",
            Bound::AtLeast => ">=",
        };
        report.push_row(vec![
            check.suite.name().into(),
            check.name.into(),
            check.samples.into(),
            check.value.into(),
            bound.into(),
            check.threshold.into(),
            check.passed.into(),
        ]);
    }
    report.passed = Some(all);
    Ok(report)
}

pub fn oracle(cli: &Cli, args: &OracleArgs) -> Result<Report, CliError> {
    let p = params(args.mu)?;
    let pot = build_potential(args.potential, &args.coef)?;
    let s = args.s.unwrap_or_else(|| s_value(args.l, args.m, &p));
    let tol = cli.tol.unwrap_or(ORACLE_TOL);
    let mie = matches!(pot, Potential::MieType { .. });
    let mut columns = vec!["n", "analytic"];
    if mie {
        columns.push("analytic_quadratic");
    }
    columns.extend(["fd", "fd_grid", "abs_diff", "rel_diff", "convergence_estimate", "passed"]);
    let mut report = Report::new("oracle", columns);
    echo_potential(&mut report, args.potential, &args.coef);
    report.param("s", s);
    if args.s.is_none() {
        report.param("l", args.l.to_string()).param("m", args.m.to_string()).param("mu", args.mu);
    }

    if pot == Potential::FreeParticle {
        report.param("k", args.k).param("tol", tol).param("seed", cli.seed);
        report.notes.push("no bound states: the free particle has a continuous spectrum".into());
        report.passed = Some(true);
        return Ok(report);
    }

    let r_max = match args.r_max {
        Some(r) => r,
        None => RadialGrid::default_r_max(&pot, s, args.k)?,
    };
    let grid = RadialGrid::new(r_max, args.grid_n)?;
    report.param("grid_N", args.grid_n).param("r_max", r_max).param("k", args.k).param("tol", tol).param("seed", cli.seed);

    let rows = oracle_compare(&pot, s, &grid, args.k)?;
    let mut all = true;
    for r in rows {
        if r.convergence_estimate > tol {
            warn!("grid may be too coarse: state {} has convergence estimate {:e} above tolerance {:e}", r.n, r.convergence_estimate, tol);
        }
        let passed = r.abs_diff <= tol;
        all &= passed;
        let mut row: Vec<Cell> = vec![r.n.into(), r.analytic.into()];
        if mie {
            row.push(r.analytic_quadratic.into());
        }
        row.extend([r.fd.into(), r.fd_grid.into(), r.abs_diff.into(), r.rel_diff.into(), r.convergence_estimate.into(), passed.into()]);
        report.push_row(row);
    }
    if let Potential::MieType { a, .. } = pot {
        if a != 1.0 {
            report.notes.push("analytic is linear in A and matches the radial equation only at A = 1; analytic_quadratic is -A^2/(2N^2) + C".into());
        }
    }
    report.passed = Some(all);
    Ok(report)
}

/// Name of the coordinate plane a point lies on, if any.
fn on_plane(r: f64, theta: f64, phi: f64) -> Option<&'static str> {
    let x = [r * theta.sin() * phi.cos(), r * theta.sin() * phi.sin(), r * theta.cos()];
    ["x1 = 0", "x2 = 0", "x3 = 0"].into_iter().zip(x).find(|(_, v)| v.abs() <= PLANE_TOL * r).map(|(name, _)| name)
}

pub fn eval(cli: &Cli, args: &EvalArgs) -> Result<Report, CliError> {
    let p = params(args.mu)?;
    let pot = build_potential(args.potential, &args.coef)?;
    let free_energy = match pot {
        Potential::FreeParticle => Some(args.energy.ok_or_else(|| CliError::Usage("--energy is required for --potential free".into()))?),
        _ => None,
    };
    let qn = QuantumNumbers::new(args.m, args.l, args.n, args.sector)?;
    let norm = match args.normalization {
        NormArg::Physical => RadialNormalization::Physical,
        NormArg::Scaled => RadialNormalization::Scaled,
    };
    let w = Wavefunction::new(qn, p, pot, free_energy, norm)?;

    let mut report = Report::new("eval", vec!["r", "theta", "phi", "R", "Theta", "Phi", "psi"]);
    echo_potential(&mut report, args.potential, &args.coef);
    report
        .param("energy", w.energy())
        .param("mu", args.mu)
        .param("n", args.n)
        .param("l", args.l.to_string())
        .param("m", args.m.to_string())
        .param("sector", args.sector.to_string())
        .param("normalization", match args.normalization {
            NormArg::Physical => "physical",
            NormArg::Scaled => "scaled",
        });
    echo_common(&mut report, cli);

    let points = args.points.as_ref().or(args.grid.as_ref()).map(|l| l.0.as_slice()).unwrap_or_default();
    let evaluated = points
        .par_iter()
        .map(|&[r, t, f]| {
            if r.is_nan() || r <= 0.0 || !r.is_finite() || !t.is_finite() || !f.is_finite() {
                return Ok(Err(format!("skipped point ({r}, {t}, {f}): r must be positive and all coordinates finite")));
            }
            if let Some(plane) = on_plane(r, t, f) {
                return Ok(Err(format!("skipped point ({r}, {t}, {f}): it lies on the plane {plane}")));
            }
            w.sample(r, t, f).map(Ok)
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (&[r, t, f], e) in points.iter().zip(evaluated) {
        match e {
            Ok(v) => report.push_row(vec![r.into(), t.into(), f.into(), v.radial.into(), v.theta.into(), v.phi.into(), v.psi.into()]),
            Err(msg) => {
                warn!("{msg}");
                report.notes.push(msg);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_detection() {
        use std::f64::consts::FRAC_PI_2;
        assert_eq!(on_plane(1.0, FRAC_PI_2, 1.0), Some("x3 = 0"));
        assert_eq!(on_plane(1.0, 1.0, FRAC_PI_2), Some("x1 = 0"));
        assert_eq!(on_plane(1.0, 1.0, 0.0), Some("x2 = 0"));
        assert_eq!(on_plane(0.5, 1.0, 1.0), None);
    }
}
