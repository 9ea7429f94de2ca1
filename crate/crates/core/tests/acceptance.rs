//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

mod common;

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cvbell::bell::{
    bell_expectation_with, chsh_random_suite, cirelson_ratio, lambda_generating, lambda_quadrature, lambda_recurrence,
    optimize_singlet_chsh, BellResult, BellRoute, CirelsonFlag,
};
use cvbell::cli::{cmd_abs_wigner, cmd_eigenvalues, parse_figure1_csv, parse_figure2_csv, RunConfig};
use cvbell::moyal::{
    quantize, star_integral_with, star_series, star_via_operators, star_via_operators_with, DequantizeOptions,
    FockMatrix, Resummation,
};
use cvbell::phasespace::{characteristic_symbol, symbol_fock_diag, PhaseGrid, PhasePoint, Region, Sign, WeylSymbol, WignerState};
use cvbell::specfun::laguerre_eval;

type Outcome = Result<String, String>;

fn headline() -> f64 {
    4.0 * (-0.5f64).exp() - 1.0
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn err(e: cvbell::Error) -> String {
    format!("error: {e}")
}

fn headline_violation() -> Outcome {
    let start = Instant::now();
    let disk = Region::disk(FRAC_1_SQRT_2).map_err(err)?;
    let factorized = bell_expectation_with(&WignerState::Bell, &disk, 1e-12, BellRoute::Factorized, None).map_err(err)?.value;
    let lambda = 1.0 - 2.0 * lambda_quadrature(1, FRAC_1_SQRT_2).map_err(err)?;
    let series = 1.0 - 2.0 * lambda_generating(1, FRAC_1_SQRT_2).map_err(err)?.values[1];
    let full = bell_expectation_with(&WignerState::Bell, &disk, 1e-6, BellRoute::Full, None).map_err(err)?.value;
    let elapsed = start.elapsed().as_secs_f64();
    let fine = [factorized, lambda, series].iter().map(|v| (v - headline()).abs()).fold(0.0, f64::max);
    let coarse = (full - headline()).abs();
    ensure(
        fine < 1e-10 && coarse < 1e-6 && elapsed < 10.0,
        format!("value {lambda:.12}, route errors {fine:.1e} (< 1e-10), 4D {coarse:.1e} (< 1e-6), {elapsed:.2} s (< 10 s)"),
    )
}

fn cirelson_comparison() -> Outcome {
    let value = 1.0 - 2.0 * lambda_quadrature(1, FRAC_1_SQRT_2).map_err(err)?;
    let c = cirelson_ratio(&BellResult::new(value, 1.0)).map_err(err)?;
    ensure(
        c.ratio > SQRT_2 && c.flag == CirelsonFlag::Exceeds && (c.ratio - 1.42612).abs() < 1e-5,
        format!("ratio {:.5} vs sqrt 2 = {SQRT_2:.5}, flag {:?}", c.ratio, c.flag),
    )
}

fn three_routes() -> Outcome {
    let mut spread: f64 = 0.0;
    for radius in [FRAC_1_SQRT_2, 1.0, 3.5, 5.5] {
        let gen = lambda_generating(40, radius).map_err(err)?;
        let rec = lambda_recurrence(40, radius).map_err(err)?;
        for m in 0..=40 {
            let q = lambda_quadrature(m, radius).map_err(err)?;
            let (g, r) = (gen.values[m], rec.values[m]);
            spread = spread.max((q - g).abs()).max((q - r).abs()).max((g - r).abs());
        }
    }
    let mut anchor: f64 = 0.0;
    for radius in [0.25, FRAC_1_SQRT_2, 1.0, 2.0, 3.5, 5.5] {
        let e = (-radius * radius).exp();
        for (m, exact) in [(0, 1.0 - e), (1, 1.0 - e - 2.0 * radius * radius * e)] {
            for v in [
                lambda_quadrature(m, radius).map_err(err)?,
                lambda_generating(1, radius).map_err(err)?.values[m],
                lambda_recurrence(1, radius).map_err(err)?.values[m],
            ] {
                anchor = anchor.max((v - exact).abs());
            }
        }
    }
    ensure(
        spread < 1e-10 && anchor < 1e-12,
        format!("max pairwise spread {spread:.1e} (< 1e-10), anchor error {anchor:.1e} (< 1e-12)"),
    )
}

fn figure1() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = RunConfig { out: dir.path().to_path_buf(), ..RunConfig::default() };
    cmd_eigenvalues(&config).map_err(err)?;
    let text = std::fs::read_to_string(dir.path().join("fig1.csv")).map_err(|e| e.to_string())?;
    let rows = parse_figure1_csv(&text).map_err(err)?;
    let point = rows
        .iter()
        .find(|r| r.m == 1 && (r.radius - FRAC_1_SQRT_2).abs() < 1e-15)
        .ok_or("row (1, 1/sqrt 2) missing")?;
    let violated = |radius: f64| rows.iter().filter(|r| r.radius == radius && r.abs_bell_value > 1.0).map(|r| r.m).collect::<Vec<_>>();
    let (v35, v55) = (violated(3.5), violated(5.5));
    ensure(
        rows.len() == 93 && (point.abs_bell_value - 1.42612).abs() < 1e-5 && !v35.is_empty() && !v55.is_empty(),
        format!("{} rows, |1-2 lambda_1| = {:.5}, violations R=3.5 at m={v35:?}, R=5.5 at m={v55:?}", rows.len(), point.abs_bell_value),
    )
}

fn figure2() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = RunConfig { out: dir.path().to_path_buf(), ..RunConfig::default() };
    let start = Instant::now();
    cmd_abs_wigner(&config).map_err(err)?;
    let elapsed = start.elapsed().as_secs_f64();
    let text = std::fs::read_to_string(dir.path().join("fig2.csv")).map_err(|e| e.to_string())?;
    let rows = parse_figure2_csv(&text).map_err(err)?;
    let e0 = (rows[0].integral - 1.0).abs();
    let e1 = (rows[1].integral - headline()).abs();
    let floor = rows.iter().map(|r| r.integral).fold(f64::INFINITY, f64::min);
    let mut oracle_gap: f64 = 0.0;
    for r in rows.iter().filter(|r| r.m <= 10) {
        oracle_gap = oracle_gap.max((r.integral - common::abs_wigner_integral(r.m, 1e-9)).abs());
    }
    ensure(
        rows.len() == 31 && e0 < 1e-11 && e1 < 1e-10 && floor >= 1.0 - 1e-11 && oracle_gap < 1e-6 && elapsed < 60.0,
        format!(
            "m=0 error {e0:.1e}, m=1 error {e1:.1e}, min {floor:.12}, 2D oracle gap {oracle_gap:.1e} (< 1e-6), {elapsed:.2} s (< 60 s)"
        ),
    )
}

fn star_suite() -> Outcome {
    let (q, p) = (WeylSymbol::position(), WeylSymbol::momentum());
    let mut qp_series: f64 = 0.0;
    let mut qp_ops: f64 = 0.0;
    for (a, b) in common::test_points(5, 2.0, 1) {
        let x = PhasePoint::new(a, b);
        let exact = Complex64::new(a * b, 0.5);
        qp_series = qp_series.max((star_series(&q, &p, [x], 1.0).map_err(err)? - exact).norm());
        qp_ops = qp_ops.max((star_via_operators(&q, &p, 64, x).map_err(err)? - exact).norm());
    }

    let f = WeylSymbol::real(|x| (-x.norm_sqr()).exp());
    let g = WeylSymbol::real(|x| (-((x.q - 0.5).powi(2) + 2.0 * x.p * x.p)).exp());
    let grid = PhaseGrid::new(5.0, 192, 1).map_err(err)?;
    let mut gauss: f64 = 0.0;
    for (a, b) in common::test_points(5, 1.2, 2) {
        let x = PhasePoint::new(a, b);
        let integral = star_integral_with(&f, &g, x, 1.0, &grid).map_err(err)?.value;
        gauss = gauss.max((integral - star_via_operators(&f, &g, 64, x).map_err(err)?).norm());
    }

    let x = PhasePoint::new(0.5, 0.3);
    let mut logs = Vec::new();
    for hbar in [0.4, 0.2, 0.1] {
        let grid = PhaseGrid::new(5.0, 512, 1).map_err(err)?;
        let exact = star_integral_with(&f, &g, x, hbar, &grid).map_err(err)?.value;
        let residual = (exact - star_series(&f, &g, [x], hbar).map_err(err)?).norm();
        logs.push((hbar.ln(), residual.ln()));
    }
    let n = logs.len() as f64;
    let mx = logs.iter().map(|l| l.0).sum::<f64>() / n;
    let my = logs.iter().map(|l| l.1).sum::<f64>() / n;
    let slope = logs.iter().map(|l| (l.0 - mx) * (l.1 - my)).sum::<f64>() / logs.iter().map(|l| (l.0 - mx).powi(2)).sum::<f64>();
    ensure(
        qp_series == 0.0 && qp_ops < 1e-10 && gauss < 1e-6 && slope >= 1.9,
        format!("q*p series error {qp_series:.1e}, operators {qp_ops:.1e} (< 1e-10); Gaussian routes {gauss:.1e} (< 1e-6); hbar exponent {slope:.3} (>= 1.9)"),
    )
}

fn structural_claims() -> Outcome {
    let disk = Region::disk(1.0).map_err(err)?;
    let (plus, minus) = (characteristic_symbol(&disk, Sign::Plus), characteristic_symbol(&disk, Sign::Minus));
    let m_max = 64;
    let sum = quantize(&plus, m_max).map_err(err)?.sum(&quantize(&minus, m_max).map_err(err)?).map_err(err)?;
    let unity = (sum.as_matrix() - FockMatrix::identity(m_max).as_matrix()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let cross = star_via_operators_with(&plus, &minus, m_max, PhasePoint::ORIGIN, &DequantizeOptions::unchecked(Resummation::Cesaro))
        .map_err(err)?;
    let bell_disk = quantize(&characteristic_symbol(&Region::disk(FRAC_1_SQRT_2).map_err(err)?, Sign::Minus), 3).map_err(err)?;
    let b = FockMatrix::identity(3).sum(&bell_disk.scaled(-2.0)).map_err(err)?;
    let square = FockMatrix::new(b.product(&b).map_err(err)?.as_matrix().clone(), true).map_err(err)?;
    let deviation = square.eigenvalues().map_err(err)?.iter().map(|v| (v - 1.0).abs()).fold(0.0, f64::max);
    ensure(
        unity < 1e-10 && cross.norm() > 0.01 && deviation > 0.1,
        format!("partition of unity {unity:.1e} (< 1e-10), |chi+ * chi-(0)| {:.4} (> 0.01), max |eig(B^2) - 1| {deviation:.4} (> 0.1)", cross.norm()),
    )
}

fn chsh() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let residual = chsh_random_suite(&mut rng, 1000).map_err(err)?;
    let optimum = optimize_singlet_chsh(&mut rng).value;
    let gap = (optimum - 2.0 * SQRT_2).abs();
    ensure(
        residual < 1e-12 && gap < 1e-6,
        format!("max residual {residual:.1e} (< 1e-12), optimum {optimum:.10} (|gap| {gap:.1e} < 1e-6)"),
    )
}

fn typo_oracle() -> Outcome {
    let (mut adopted, mut printed): (f64, f64) = (0.0, 0.0);
    for (q, p) in common::test_points(10, 2.5, 9) {
        for m in [0, 1, 2, 5] {
            let oracle = common::fock_symbol_direct(m, q, p);
            adopted = adopted.max((oracle - symbol_fock_diag(m, PhasePoint::new(q, p))).abs());
            let s = q * q + p * p;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let variant = 2.0 * sign * laguerre_eval(m, 2.0 * s).map_err(err)? * (-2.0 * s).exp();
            printed = printed.max((oracle - variant).abs());
        }
    }
    ensure(
        adopted < 1e-8 && printed > 0.1,
        format!("adopted form error {adopted:.1e} (< 1e-8), printed variant discrepancy {printed:.3} (> 0.1)"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("headline violation 4/sqrt(e) - 1", headline_violation),
        ("Cirel'son comparison", cirelson_comparison),
        ("three-route lambda agreement", three_routes),
        ("fig1 reproduction", figure1),
        ("fig2 reproduction", figure2),
        ("star-product suite", star_suite),
        ("structural operator claims", structural_claims),
        ("CHSH identity", chsh),
        ("Fock symbol typo oracle", typo_oracle),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
