use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fs;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::output::{
    figure1_csv, figure2_csv, fmt17, parse_figure1_csv, parse_figure2_csv, to_json, write_file, Figure2Row,
};
use super::svg::{Chart, Marker, Series};
use super::{Check, Format, Report, RunConfig};
use crate::bell::{
    abs_wigner_integral, bell_expectation_with, chsh_random_suite, cirelson_ratio, figure1_data, lambda_generating,
    lambda_quadrature, optimize_singlet_chsh, BellResult, BellRoute, Figure1Row, MAX_INDEX,
};
use crate::error::{Error, Result};
use crate::moyal::{
    quantize, star_integral_min_nodes, star_integral_with, star_series, star_via_operators,
    star_via_operators_with, DequantizeOptions, FockMatrix, Resummation,
};
use crate::phasespace::{characteristic_symbol, PhaseGrid, PhasePoint, Region, Sign, WeylSymbol, WignerState};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    BellState,
    Eigenvalues,
    AbsWigner,
    StarCheck,
    ChshCheck,
    Plot,
}

pub fn run(command: Command, config: &RunConfig) -> Result<Report> {
    validate(config)?;
    match command {
        Command::BellState => cmd_bell_state(config),
        Command::Eigenvalues => cmd_eigenvalues(config),
        Command::AbsWigner => cmd_abs_wigner(config),
        Command::StarCheck => cmd_star_check(config),
        Command::ChshCheck => cmd_chsh_check(config),
        Command::Plot => cmd_plot(config),
    }
}

fn validate(config: &RunConfig) -> Result<()> {
    if !(config.tol > 0.0 && config.tol < 1.0) {
        return Err(Error::Config(format!("--tol must lie in (0, 1), got {}", config.tol)));
    }
    if config.radii.is_empty() || config.radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
        return Err(Error::Config("--R values must be positive and finite".into()));
    }
    if config.m_max > MAX_INDEX {
        return Err(Error::Config(format!("--m-max must be at most {MAX_INDEX}, got {}", config.m_max)));
    }
    if let Some(n) = config.grid_n {
        if !(8..=512).contains(&n) {
            return Err(Error::Config(format!("--grid-n must lie in 8..=512, got {n}")));
        }
    }
    Ok(())
}

fn report(command: &str) -> Report {
    Report {
        command: command.into(),
        lines: Vec::new(),
        checks: Vec::new(),
        data: serde_json::Value::Null,
        files: Vec::new(),
    }
}

/// `<B>` of the two-mode Bell state for the disk `|dx| <= 1/sqrt 2` by every route.
pub fn cmd_bell_state(config: &RunConfig) -> Result<Report> {
    let mut rep = report("bell-state");
    let disk = Region::disk(FRAC_1_SQRT_2)?;
    let tol = config.tol.max(1e-13);
    let factorized = bell_expectation_with(&WignerState::Bell, &disk, tol, BellRoute::Factorized, None)?.value
        + config.route_offset;
    let lambda_route = 1.0 - 2.0 * lambda_quadrature(1, FRAC_1_SQRT_2)?;
    let series_route = 1.0 - 2.0 * lambda_generating(1, FRAC_1_SQRT_2)?.values[1];
    let abs_route = abs_wigner_integral(1)?;
    let full = bell_expectation_with(&WignerState::Bell, &disk, 1e-6, BellRoute::Full, config.grid_n)?.value;

    let result = BellResult::new(lambda_route, 1.0);
    let cirelson = cirelson_ratio(&result)?;
    let exact = 4.0 * (-0.5f64).exp() - 1.0;
    rep.lines.push(format!("factorized phase-space route  {}", fmt17(factorized)));
    rep.lines.push(format!("eigenvalue route 1 - 2 lambda_1  {}", fmt17(lambda_route)));
    rep.lines.push(format!("generating-function route       {}", fmt17(series_route)));
    rep.lines.push(format!("abs-Wigner route                {}", fmt17(abs_route)));
    rep.lines.push(format!("full four-dimensional route     {}", fmt17(full)));
    rep.lines.push(format!("4/sqrt(e) - 1                   {}", fmt17(exact)));
    rep.lines.push(format!("LHV bound {}  ratio {}  violated {}", result.lhv_bound, fmt17(cirelson.ratio), result.violated));
    rep.lines.push(format!("Cirel'son ratio sqrt 2 = {}: {:?}", fmt17(SQRT_2), cirelson.flag));

    let routes = [factorized, lambda_route, series_route, abs_route];
    let spread = routes.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)) - routes.iter().fold(f64::INFINITY, |a, &b| a.min(b));
    let agree_tol = 1e-8f64.max(10.0 * config.tol);
    rep.checks.push(Check::new(
        "route agreement",
        spread <= agree_tol,
        format!("spread {spread:.3e} (limit {agree_tol:.1e})"),
    ));
    rep.checks.push(Check::new(
        "four-dimensional route",
        (full - lambda_route).abs() <= 1e-6,
        format!("difference {:.3e} (limit 1e-6)", (full - lambda_route).abs()),
    ));
    rep.data = json!({
        "factorized": factorized,
        "lambda": lambda_route,
        "generating": series_route,
        "abs_wigner": abs_route,
        "full_quadrature": full,
        "exact": exact,
        "result": result,
        "cirelson": cirelson,
    });
    Ok(rep)
}

fn figure1(config: &RunConfig) -> Result<Vec<Figure1Row>> {
    figure1_data(config.m_max, &config.radii)
}

fn figure2(config: &RunConfig) -> Result<Vec<Figure2Row>> {
    (0..=config.m_max).map(|m| Ok(Figure2Row { m, integral: abs_wigner_integral(m)? })).collect()
}

/// `|1 - 2 lambda_m(R)|` table (fig1).
pub fn cmd_eigenvalues(config: &RunConfig) -> Result<Report> {
    let mut rep = report("eigenvalues");
    let rows = figure1(config)?;
    let path = match config.format {
        Format::Csv => write_file(&config.out, "fig1.csv", &figure1_csv(&rows))?,
        Format::Json => write_file(&config.out, "fig1.json", &to_json(&rows)?)?,
    };
    for &radius in &config.radii {
        let violations: Vec<usize> = rows.iter().filter(|r| r.radius == radius && r.violated).map(|r| r.m).collect();
        let peak = rows
            .iter()
            .filter(|r| r.radius == radius)
            .max_by(|a, b| a.abs_bell_value.total_cmp(&b.abs_bell_value))
            .map(|r| (r.m, r.abs_bell_value))
            .unwrap_or((0, 0.0));
        rep.lines.push(format!(
            "R = {}: max |1 - 2 lambda_m| = {} at m = {}; violations at m = {:?}",
            fmt17(radius),
            fmt17(peak.1),
            peak.0,
            violations
        ));
    }
    rep.lines.push(format!("{} rows", rows.len()));
    rep.data = json!({ "rows": rows.len() });
    rep.files.push(path);
    Ok(rep)
}

/// `int |W_m| d^2x` for `m = 0..=m_max` (fig2).
pub fn cmd_abs_wigner(config: &RunConfig) -> Result<Report> {
    let mut rep = report("abs-wigner");
    let rows = figure2(config)?;
    let path = match config.format {
        Format::Csv => write_file(&config.out, "fig2.csv", &figure2_csv(&rows))?,
        Format::Json => write_file(&config.out, "fig2.json", &to_json(&rows)?)?,
    };
    for r in rows.iter().filter(|r| r.m <= 3 || r.m == config.m_max) {
        rep.lines.push(format!("m = {:>3}  integral {}", r.m, fmt17(r.integral)));
    }
    let below = rows.iter().filter(|r| r.integral < 1.0 - 1e-11).count();
    rep.checks.push(Check::new("lower bound 1", below == 0, format!("{below} entries below 1")));
    rep.data = json!({ "rows": rows.len() });
    rep.files.push(path);
    Ok(rep)
}

/// Both test Gaussians are below `1e-10` outside this half-width.
const GAUSSIAN_EXTENT: f64 = 5.0;

fn gaussian() -> WeylSymbol {
    WeylSymbol::real(|x| (-x.norm_sqr()).exp())
}

fn shifted_gaussian() -> WeylSymbol {
    WeylSymbol::real(|x| (-((x.q - 0.5).powi(2) + 2.0 * x.p * x.p)).exp())
}

/// Nodes per axis for the Groenewold integral at `hbar`: the configured count,
/// or a multiple of the oscillation guideline.
fn groenewold_nodes(config: &RunConfig, extent: f64, hbar: f64) -> usize {
    let needed = star_integral_min_nodes(extent, hbar);
    config.grid_n.unwrap_or(0).max((3 * needed).clamp(96, 512))
}

/// Fitted exponent `k` of `r(hbar) ~ hbar^k` from the residual of the first-order series.
pub(crate) fn hbar_scaling(config: &RunConfig) -> Result<(Vec<(f64, f64)>, f64)> {
    let (f, g) = (gaussian(), shifted_gaussian());
    let x = PhasePoint::new(0.5, 0.3);
    let extent = GAUSSIAN_EXTENT;
    let mut samples = Vec::new();
    for hbar in [0.4, 0.2, 0.1] {
        let grid = PhaseGrid::new(extent, groenewold_nodes(config, extent, hbar), 1)?;
        let exact = star_integral_with(&f, &g, x, hbar, &grid)?;
        if exact.error_estimate > 1e-7 {
            return Err(Error::not_converged(
                format!("Groenewold integral at hbar = {hbar}"),
                exact.value.re,
                exact.error_estimate,
            ));
        }
        let series = star_series(&f, &g, [x], hbar)?;
        samples.push((hbar, (exact.value - series).norm()));
    }
    let n = samples.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = samples.iter().map(|(h, r)| (h.ln(), r.ln())).unzip();
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    Ok((samples, sxy / sxx))
}

/// Cross-validation of the three star-product routes and the structural operator claims.
pub fn cmd_star_check(config: &RunConfig) -> Result<Report> {
    let mut rep = report("star-check");
    let one_one = PhasePoint::new(1.0, 1.0);
    let (q, p) = (WeylSymbol::position(), WeylSymbol::momentum());

    let series = star_series(&q, &p, [one_one], 1.0)?;
    rep.lines.push(format!("q*p at (1,1), series:    {} + {}i", series.re, series.im));
    rep.checks.push(Check::new(
        "q*p series exact",
        series == Complex64::new(1.0, 0.5),
        format!("{series}"),
    ));
    let ops = star_via_operators(&q, &p, 64, one_one)?;
    rep.lines.push(format!("q*p at (1,1), operators: {} + {}i", fmt17(ops.re), fmt17(ops.im)));
    let gap = (ops - Complex64::new(1.0, 0.5)).norm();
    rep.checks.push(Check::new("q*p operator route", gap < 1e-10, format!("|error| {gap:.3e}")));

    let points = [
        PhasePoint::ORIGIN,
        PhasePoint::new(0.5, 0.0),
        PhasePoint::new(0.0, -0.7),
        PhasePoint::new(0.4, 0.6),
        PhasePoint::new(-1.0, 0.3),
    ];
    let (f, g) = (gaussian(), shifted_gaussian());
    let grid = PhaseGrid::new(GAUSSIAN_EXTENT, groenewold_nodes(config, GAUSSIAN_EXTENT, 1.0), 1)?;
    let mut worst: f64 = 0.0;
    for x in points {
        let integral = star_integral_with(&f, &g, x, 1.0, &grid)?.value;
        let oracle = star_via_operators(&f, &g, 64, x)?;
        worst = worst.max((integral - oracle).norm());
    }
    rep.checks.push(Check::new(
        "Gaussian integral vs operator route",
        worst < 1e-6,
        format!("max difference {worst:.3e} over {} points", points.len()),
    ));

    let (samples, exponent) = hbar_scaling(config)?;
    for (h, r) in &samples {
        rep.lines.push(format!("hbar = {h}: residual {}", fmt17(*r)));
    }
    rep.checks.push(Check::new("hbar scaling exponent", exponent >= 1.9, format!("{exponent:.4} (need >= 1.9)")));

    let disk = Region::disk(1.0)?;
    let plus = characteristic_symbol(&disk, Sign::Plus);
    let minus = characteristic_symbol(&disk, Sign::Minus);
    let m_max = 64;
    let qp = quantize(&plus, m_max)?;
    let qm = quantize(&minus, m_max)?;
    let unity = (qp.sum(&qm)?.as_matrix() - FockMatrix::identity(m_max).as_matrix())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    rep.checks.push(Check::new("partition of unity", unity < 1e-10, format!("max entry error {unity:.3e}")));

    let cross = star_via_operators_with(
        &plus,
        &minus,
        m_max,
        PhasePoint::ORIGIN,
        &DequantizeOptions::unchecked(Resummation::Cesaro),
    )?;
    rep.lines.push(format!("chi+ * chi- at origin, disk(1): {}", fmt17(cross.re)));
    rep.checks.push(Check::new("chi+ * chi- nonzero", cross.norm() > 0.01, format!("|value| {:.4}", cross.norm())));

    let inner = quantize(&characteristic_symbol(&Region::disk(0.8)?, Sign::Minus), 40)?;
    let outer = quantize(&characteristic_symbol(&Region::disk(2.1)?, Sign::Minus), 40)?;
    let comm = inner.commutator(&outer)?.max_abs();
    rep.checks.push(Check::new("concentric disks commute", comm < 1e-12, format!("max |[A, B]| {comm:.3e}")));

    let bell_disk = quantize(&characteristic_symbol(&Region::disk(FRAC_1_SQRT_2)?, Sign::Minus), 3)?;
    let b = FockMatrix::identity(3).sum(&bell_disk.scaled(-2.0))?;
    let ev = FockMatrix::new(b.product(&b)?.as_matrix().clone(), true)?.eigenvalues()?;
    rep.lines.push(format!(
        "eigenvalues (1 - 2 lambda_m)^2 of B^2, m <= 3: {}",
        ev.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>().join(", ")
    ));
    let deviation = ev.iter().map(|v| (v - 1.0).abs()).fold(0.0, f64::max);
    rep.checks.push(Check::new("B^2 is not the identity", deviation > 0.1, format!("max |ev - 1| {deviation:.4}")));

    rep.data = json!({
        "q_star_p_series": [series.re, series.im],
        "q_star_p_operators": [ops.re, ops.im],
        "gaussian_max_difference": worst,
        "hbar_residuals": samples,
        "hbar_exponent": exponent,
        "partition_of_unity_error": unity,
        "chi_plus_star_chi_minus": [cross.re, cross.im],
        "bell_square_eigenvalues": ev,
    });
    Ok(rep)
}

/// Random-draw check of `<B^2> = 4 + <[Y1,X1][X2,Y2]>` and the optimized singlet value.
pub fn cmd_chsh_check(config: &RunConfig) -> Result<Report> {
    let mut rep = report("chsh-check");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let draws = 1000;
    let residual = chsh_random_suite(&mut rng, draws)?;
    let opt = optimize_singlet_chsh(&mut rng);
    let target = 2.0 * SQRT_2;
    rep.lines.push(format!("seed {}", config.seed));
    rep.lines.push(format!("max identity residual over {draws} draws: {residual:.3e}"));
    rep.lines.push(format!("optimized singlet CHSH value: {} (2 sqrt 2 = {})", fmt17(opt.value), fmt17(target)));
    rep.checks.push(Check::new("identity residual", residual < 1e-12, format!("{residual:.3e} (limit 1e-12)")));
    rep.checks.push(Check::new(
        "Cirel'son bound reached",
        opt.value >= target - 1e-6,
        format!("{:.3e} below 2 sqrt 2", target - opt.value),
    ));
    rep.data = json!({ "seed": config.seed, "draws": draws, "max_residual": residual, "optimum": opt });
    Ok(rep)
}

/// SVG charts of fig1 and fig2, from the CSV files in the output directory when present.
pub fn cmd_plot(config: &RunConfig) -> Result<Report> {
    let mut rep = report("plot");
    let fig1_path = config.out.join("fig1.csv");
    let rows1 = if fig1_path.exists() {
        rep.lines.push(format!("read {}", fig1_path.display()));
        parse_figure1_csv(&fs::read_to_string(&fig1_path)?)?
    } else {
        figure1(config)?
    };
    let fig2_path = config.out.join("fig2.csv");
    let rows2 = if fig2_path.exists() {
        rep.lines.push(format!("read {}", fig2_path.display()));
        parse_figure2_csv(&fs::read_to_string(&fig2_path)?)?
    } else {
        figure2(config)?
    };

    let markers = [Marker::Circle, Marker::Square, Marker::Diamond];
    let mut radii: Vec<f64> = Vec::new();
    for r in &rows1 {
        if !radii.contains(&r.radius) {
            radii.push(r.radius);
        }
    }
    let series = radii
        .iter()
        .enumerate()
        .map(|(i, &radius)| Series {
            label: format!("R = {radius:.4}"),
            marker: markers[i % markers.len()],
            points: rows1.iter().filter(|r| r.radius == radius).map(|r| (r.m as f64, r.abs_bell_value)).collect(),
        })
        .collect();
    let fig1 = Chart {
        title: "Bell value |1 - 2 lambda_m(R)| of Fock states".into(),
        x_label: "m".into(),
        y_label: "|1 - 2 lambda_m|".into(),
        series,
        reference_y: Some(1.0),
    };
    let fig2 = Chart {
        title: "Integral of |W_m| over phase space".into(),
        x_label: "m".into(),
        y_label: "integral |W_m|".into(),
        series: vec![Series {
            label: "m".into(),
            marker: Marker::Circle,
            points: rows2.iter().map(|r| (r.m as f64, r.integral)).collect(),
        }],
        reference_y: Some(1.0),
    };
    rep.files.push(write_file(&config.out, "fig1.svg", &fig1.render())?);
    rep.files.push(write_file(&config.out, "fig2.svg", &fig2.render())?);
    rep.data = json!({ "fig1_series": radii.len(), "fig2_points": rows2.len() });
    Ok(rep)
}
