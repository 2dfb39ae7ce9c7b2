use dunkl_core::model::{energy_mie, energy_mie_quadratic, energy_pseudo, s_value};
use dunkl_core::ops::{apply_dunkl_laplacian, apply_dunkl_laplacian_expanded, hamiltonian_residual, StencilConfig};
use dunkl_core::oracle::{fd_radial_spectrum, gram_matrix, phi_gram, GramFamily, RadialGrid};
use dunkl_core::solutions::{RadialNormalization, Wavefunction};
use dunkl_core::{DunklParams, HalfInt, Parity, Potential, QuantumNumbers, SectorLabels};

#[test]
fn fd_prefers_quadratic_mie_energy_away_from_unit_coupling() {
    let pot = Potential::<f64>::mie(2.0, 0.0, 0.0).unwrap();
    let grid = RadialGrid::new(RadialGrid::default_r_max(&pot, 0.0, 2).unwrap(), 6000).unwrap();
    let res = fd_radial_spectrum(&pot, 0.0, &grid, 2).unwrap();
    for n in 0..2 {
        let fd = res.extrapolated[n as usize];
        let quad = energy_mie_quadratic::<f64>(n, 0.0, 2.0, 0.0, 0.0).unwrap();
        let lin = energy_mie::<f64>(n, 0.0, 2.0, 0.0, 0.0).unwrap();
        assert!((fd - quad).abs() < 1e-6 * quad.abs(), "n={n}: fd {fd} vs {quad}");
        assert!((fd - lin).abs() > 0.1 * lin.abs());
    }
    // -A^2/2 for the ground state
    assert!((res.extrapolated[0] + 2.0).abs() < 1e-6);
}

#[test]
fn coulomb_box_example() {
    let pot = Potential::<f64>::mie(1.0, 0.0, 0.0).unwrap();
    let res = fd_radial_spectrum(&pot, 0.0, &RadialGrid::new(60.0, 6000).unwrap(), 1).unwrap();
    assert!((res.eigenvalues[0] + 0.5).abs() < 1e-4);
}

#[test]
fn oscillator_box_example() {
    let pot = Potential::<f64>::pseudo_harmonic(0.5, 0.0, 0.0).unwrap();
    let res = fd_radial_spectrum(&pot, 0.0, &RadialGrid::new(12.0, 4000).unwrap(), 3).unwrap();
    for (e, want) in res.eigenvalues.iter().zip([1.5, 3.5, 5.5]) {
        assert!((e - want).abs() < 1e-4, "{e} vs {want}");
    }
}

#[test]
fn deformed_oscillator_ground_state_solves_full_equation() {
    let p = DunklParams::<f64>::new(0.3, 0.3, 0.3).unwrap();
    let pot = Potential::<f64>::pseudo_harmonic(0.5, 0.0, 0.0).unwrap();
    let qn = QuantumNumbers::new(HalfInt::ZERO, HalfInt::ZERO, 0, SectorLabels::even()).unwrap();
    let w = Wavefunction::new(qn, p, pot, None, RadialNormalization::Physical).unwrap();
    let e = energy_pseudo::<f64>(0, s_value(HalfInt::ZERO, HalfInt::ZERO, &p), 0.5, 0.0, 0.0).unwrap();
    assert!((e - 2.4).abs() < 1e-14);
    assert!((w.energy() - e).abs() < 1e-14);
    let cfg = StencilConfig::default();
    for x in [[0.4, -0.7, 0.9], [-1.1, 0.3, -0.5], [0.8, 0.8, -0.25]] {
        let r = hamiltonian_residual(&w, e, &p, &pot, x, &cfg).unwrap();
        assert!(r < 1e-5, "residual {r} at {x:?}");
        let off = hamiltonian_residual(&w, e + 0.1, &p, &pot, x, &cfg).unwrap();
        assert!((off - 0.1).abs() < 1e-3);
    }
}

#[test]
fn nested_and_expanded_laplacians_agree() {
    let p = DunklParams::<f64>::new(0.4, 0.1, 0.7).unwrap();
    let f = |x: [f64; 3]| (x[0] + x[1] * x[2] + 0.3 * x[0] * x[0] * x[2]) * (-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 3.0).exp();
    let cfg = StencilConfig::default();
    for x in [[0.5, -0.6, 0.7], [-0.9, 0.35, -1.2]] {
        let a = apply_dunkl_laplacian(&f, &p, x, &cfg).unwrap();
        let b = apply_dunkl_laplacian_expanded(&f, &p, x, &cfg).unwrap();
        assert!((a - b).abs() < 1e-6 * a.abs().max(1.0), "{a} vs {b}");
    }
}

#[test]
fn ground_oscillator_closed_form() {
    let p = DunklParams::<f64>::undeformed();
    let pot = Potential::<f64>::pseudo_harmonic(0.5, 0.0, 0.0).unwrap();
    let qn = QuantumNumbers::new(HalfInt::ZERO, HalfInt::ZERO, 0, SectorLabels::even()).unwrap();
    let w = Wavefunction::new(qn, p, pot, None, RadialNormalization::Physical).unwrap();
    let v = w.eval_spherical(0.5, 1.0, 1.0).unwrap();
    let want = std::f64::consts::PI.powf(-0.75) * (-0.125f64).exp();
    assert!((v - want).abs() < 1e-13, "{v} vs {want}");
}

#[test]
fn gram_examples() {
    let p = DunklParams::<f64>::new(0.5, 0.5, 0.2).unwrap();
    let ms: Vec<_> = (0..=2).map(HalfInt::from_int).collect();
    let g = phi_gram(&p, Parity::Even, Parity::Even, &ms, 120).unwrap();
    assert!(g.is_identity(1e-8));
    assert_eq!(g.dimension(), 3);
    let one = gram_matrix(&GramFamily::Theta { m: HalfInt::HALF, s3: Parity::Odd }, &p, &[HalfInt::from_twice(1)], 120).unwrap();
    assert_eq!(one.dimension(), 1);
    assert!((one.matrix[0][0] - 1.0).abs() < 1e-8);
    let radial = gram_matrix(
        &GramFamily::Radial { potential: Potential::<f64>::pseudo_harmonic(0.5, 0.0, 0.0).unwrap(), s: 0.9 },
        &p,
        &[HalfInt::ZERO, HalfInt::ONE, HalfInt::from_int(2)],
        120,
    )
    .unwrap();
    assert!(radial.is_identity(1e-7));
    assert!(radial.max_asymmetry < 1e-12);
}
