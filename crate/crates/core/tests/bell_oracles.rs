mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use cvbell::bell::{
    abs_wigner_integral, bell_expectation_general, lambda_generating, lambda_quadrature, lambda_recurrence,
    lambda_region, EigenMethod,
};
use cvbell::phasespace::{Region, WignerState};

#[test]
fn oracle_self_checks() {
    let rule = common::gauss_legendre(7);
    assert!((rule.iter().map(|r| r.1).sum::<f64>() - 2.0).abs() < 1e-14);
    let quad = common::Adaptive::new();
    assert!((quad.integrate(|x| (-x * x).exp(), -8.0, 8.0, 1e-13) - PI.sqrt()).abs() < 1e-12);
    assert!((common::laguerre_series(2, 1.0) + 0.5).abs() < 1e-15);
    // Fock ground state disk weight has a closed form
    assert!((common::disk_integral(0, 1.3, 1e-10) - (1.0 - (-1.69f64).exp())).abs() < 1e-9);
}

#[test]
fn lambda_matches_cartesian_disk_integral() {
    for radius in [FRAC_1_SQRT_2, 1.0, 2.2, 3.5] {
        for m in 0..=10 {
            let oracle = common::disk_integral(m, radius, 1e-9);
            let lambda = lambda_quadrature(m, radius).unwrap();
            assert!((lambda - oracle).abs() < 1e-6, "m={m} R={radius}: {lambda} vs {oracle}");
        }
    }
}

#[test]
fn abs_wigner_matches_cartesian_oracle() {
    for m in 0..=10 {
        let oracle = common::abs_wigner_integral(m, 1e-9);
        let value = abs_wigner_integral(m).unwrap();
        assert!((value - oracle).abs() < 1e-6, "m={m}: {value} vs {oracle}");
    }
}

#[test]
fn three_routes_agree_on_the_full_grid() {
    for radius in [FRAC_1_SQRT_2, 1.0, 3.5, 5.5] {
        let gen = lambda_generating(40, radius).unwrap();
        let rec = lambda_recurrence(40, radius).unwrap();
        assert_eq!(gen.method, EigenMethod::Generating);
        for m in 0..=40 {
            let quad = lambda_quadrature(m, radius).unwrap();
            let (g, r) = (gen.get(m).unwrap(), rec.get(m).unwrap());
            let worst = (quad - g).abs().max((quad - r).abs()).max((g - r).abs());
            assert!(worst < 1e-10, "m={m} R={radius}: spread {worst:e}");
        }
    }
}

#[test]
fn closed_form_anchors() {
    for radius in [0.3, FRAC_1_SQRT_2, 1.0, 2.0, 3.5] {
        let e = (-radius * radius).exp();
        let l0 = lambda_quadrature(0, radius).unwrap();
        let l1 = lambda_quadrature(1, radius).unwrap();
        assert!((l0 - (1.0 - e)).abs() < 1e-12);
        assert!((l1 - (1.0 - e - 2.0 * radius * radius * e)).abs() < 1e-12);
    }
}

#[test]
fn bell_state_three_ways() {
    let headline = 4.0 * (-0.5f64).exp() - 1.0;
    let disk = Region::disk(FRAC_1_SQRT_2).unwrap();
    let general = bell_expectation_general(&WignerState::Bell, &disk, 1e-11).unwrap().value;
    let absw = abs_wigner_integral(1).unwrap();
    let via_lambda = 1.0 - 2.0 * lambda_quadrature(1, FRAC_1_SQRT_2).unwrap();
    for v in [general, absw, via_lambda] {
        assert!((v - headline).abs() < 1e-8, "{v}");
    }
}

#[test]
fn annulus_is_a_difference_of_disks() {
    for m in [0, 3, 9, 20] {
        let (r1, r2) = (0.8, 2.9);
        let ring = lambda_region(m, &Region::annulus(r1, r2).unwrap()).unwrap();
        let diff = lambda_quadrature(m, r2).unwrap() - lambda_quadrature(m, r1).unwrap();
        assert!((ring - diff).abs() < 1e-10, "m={m}");
    }
}

#[test]
fn abs_wigner_is_at_least_one() {
    assert!((abs_wigner_integral(0).unwrap() - 1.0).abs() < 1e-11);
    for m in 1..=30 {
        assert!(abs_wigner_integral(m).unwrap() > 1.0 + 1e-3, "m={m}");
    }
}
