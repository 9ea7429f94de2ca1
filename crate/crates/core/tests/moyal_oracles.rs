mod common;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::DVector;
use num_complex::Complex64;

use cvbell::bell::lambda_quadrature;
use cvbell::moyal::{
    dequantize, poisson_bracket, quantize, star_integral, star_integral_with, star_series, star_via_operators,
    FockMatrix, SymplecticForm,
};
use cvbell::phasespace::{characteristic_symbol, PhaseGrid, PhasePoint, Region, Sign, WeylSymbol};

fn gaussian(a: f64) -> WeylSymbol {
    WeylSymbol::real(move |x| (-a * x.norm_sqr()).exp())
}

fn shifted() -> WeylSymbol {
    WeylSymbol::real(|x| (-((x.q - 0.5).powi(2) + 2.0 * x.p * x.p)).exp())
}

/// `e^{-a x^2} * e^{-b x^2} = exp(-(a + b) x^2 / (1 + hbar^2 a b)) / (1 + hbar^2 a b)`.
fn gaussian_product(a: f64, b: f64, hbar: f64, x: PhasePoint) -> f64 {
    let d = 1.0 + hbar * hbar * a * b;
    (-(a + b) * x.norm_sqr() / d).exp() / d
}

fn points() -> Vec<PhasePoint> {
    common::test_points(5, 1.2, 77).into_iter().map(|(q, p)| PhasePoint::new(q, p)).collect()
}

#[test]
fn gaussian_star_product_has_closed_form() {
    let (f, g) = (gaussian(1.0), gaussian(0.7));
    for hbar in [1.0, 0.5] {
        let grid = PhaseGrid::new(6.0, 256, 1).unwrap();
        for x in points() {
            let value = star_integral(&f, &g, x, hbar, &grid).unwrap();
            let exact = gaussian_product(1.0, 0.7, hbar, x);
            assert!((value - exact).norm() < 1e-8, "hbar={hbar} {x:?}: {value} vs {exact}");
        }
    }
    for x in points() {
        let value = star_via_operators(&f, &g, 64, x).unwrap();
        let exact = gaussian_product(1.0, 0.7, 1.0, x);
        assert!((value - exact).norm() < 1e-8, "{x:?}: {value} vs {exact}");
    }
}

#[test]
fn integral_and_operator_routes_agree() {
    let (f, g) = (gaussian(1.0), shifted());
    let grid = PhaseGrid::new(5.0, 192, 1).unwrap();
    for x in points() {
        let integral = star_integral(&f, &g, x, 1.0, &grid).unwrap();
        let operators = star_via_operators(&f, &g, 64, x).unwrap();
        assert!((integral - operators).norm() < 1e-6, "{x:?}: {integral} vs {operators}");
    }
}

#[test]
fn first_order_residual_scales_as_hbar_squared() {
    let (f, g) = (gaussian(1.0), shifted());
    let x = PhasePoint::new(0.5, 0.3);
    let mut logs = Vec::new();
    for hbar in [0.4, 0.2, 0.1] {
        let grid = PhaseGrid::new(5.0, 512, 1).unwrap();
        let exact = star_integral_with(&f, &g, x, hbar, &grid).unwrap();
        assert!(exact.error_estimate < 1e-7);
        let residual = (exact.value - star_series(&f, &g, [x], hbar).unwrap()).norm();
        logs.push((hbar.ln(), residual.ln()));
    }
    let slope_lo = (logs[1].1 - logs[0].1) / (logs[1].0 - logs[0].0);
    let slope_hi = (logs[2].1 - logs[1].1) / (logs[2].0 - logs[1].0);
    assert!(slope_lo >= 1.9 && slope_hi >= 1.9, "{slope_lo} {slope_hi}");
}

#[test]
fn canonical_pair() {
    let (q, p) = (WeylSymbol::position(), WeylSymbol::momentum());
    for x in points() {
        let bracket = poisson_bracket(&q, &p, [x]).unwrap();
        assert_eq!(bracket, Complex64::new(1.0, 0.0));
        let series = star_series(&q, &p, [x], 1.0).unwrap();
        assert_eq!(series, Complex64::new(x.q * x.p, 0.5));
        let ops = star_via_operators(&q, &p, 64, x).unwrap();
        assert!((ops - Complex64::new(x.q * x.p, 0.5)).norm() < 1e-10, "{x:?}: {ops}");
    }
}

#[test]
fn disk_characteristic_functions() {
    let disk = Region::disk(1.0).unwrap();
    let plus = quantize(&characteristic_symbol(&disk, Sign::Plus), 64).unwrap();
    let minus = quantize(&characteristic_symbol(&disk, Sign::Minus), 64).unwrap();
    let identity = FockMatrix::identity(64);
    let unity = (plus.sum(&minus).unwrap().as_matrix() - identity.as_matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    assert!(unity < 1e-10, "{unity:e}");

    let a = quantize(&characteristic_symbol(&Region::disk(0.9).unwrap(), Sign::Minus), 40).unwrap();
    let b = quantize(&characteristic_symbol(&Region::disk(2.6).unwrap(), Sign::Minus), 40).unwrap();
    assert!(a.commutator(&b).unwrap().max_abs() < 1e-12);
}

#[test]
fn quantized_disk_is_diagonal_in_lambda() {
    for radius in [FRAC_1_SQRT_2, 1.5, 3.5] {
        let a = quantize(&characteristic_symbol(&Region::disk(radius).unwrap(), Sign::Minus), 30).unwrap();
        for m in 0..=30 {
            for n in 0..=30 {
                let entry = a.get(m, n);
                if m == n {
                    let lambda = lambda_quadrature(m, radius).unwrap();
                    assert!((entry.re - lambda).abs() < 1e-10 && entry.im.abs() < 1e-10, "m={m} R={radius}");
                } else {
                    assert!(entry.norm() < 1e-10, "({m}, {n}) R={radius}");
                }
            }
        }
    }
}

#[test]
fn trace_pairing_is_preserved() {
    // (2 pi)^{-1} int f g d^2x, by an independent Cartesian quadrature
    let quad = common::Adaptive::new();
    let fg = |q: f64, p: f64| (-(q * q + p * p)).exp() * (-((q - 0.5).powi(2) + 2.0 * p * p)).exp();
    let integral = quad.integrate(|q| quad.integrate(|p| fg(q, p), -8.0, 8.0, 1e-13), -8.0, 8.0, 1e-12) / (2.0 * PI);
    let f = quantize(&gaussian(1.0), 64).unwrap();
    let g = quantize(&shifted(), 64).unwrap();
    let trace = f.product(&g).unwrap().trace();
    assert!((trace.re - integral).abs() < 1e-6 && trace.im.abs() < 1e-6, "{trace} vs {integral}");
}

#[test]
fn quantize_dequantize_round_trip() {
    let symbol = gaussian(1.0);
    let a = quantize(&symbol, 64).unwrap();
    for (q, p) in common::test_points(20, 1.5, 5) {
        let x = PhasePoint::new(q, p);
        let back = dequantize(&a, x).unwrap();
        assert!((back.re - (-x.norm_sqr()).exp()).abs() < 1e-8 && back.im.abs() < 1e-8, "{x:?}: {back}");
    }
}

#[test]
fn symplectic_form() {
    for modes in [1, 2] {
        let form = SymplecticForm::new(modes);
        let j = form.matrix();
        let n = 2 * modes;
        assert!((&j * &j + nalgebra::DMatrix::<f64>::identity(n, n)).amax() < 1e-15);
        for chunk in common::test_points(2 * n, 3.0, 31 + modes as u64).chunks(n) {
            let x = DVector::from_iterator(n, chunk.iter().map(|c| c.0));
            let y = DVector::from_iterator(n, chunk.iter().map(|c| c.1));
            assert!((form.pairing(&x, &y) + form.pairing(&y, &x)).abs() < 1e-14);
        }
    }
}
