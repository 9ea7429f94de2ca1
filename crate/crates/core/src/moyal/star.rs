//! Three routes to the Moyal star product: first-order series, the
//! Groenewold double integral, and operator products in the Fock basis.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::fock::{dequantize_with, quantize, DequantizeOptions};
use crate::error::{Error, Result};
use crate::phasespace::{PhaseGrid, PhasePoint, SymbolRepr, WeylSymbol};
use crate::specfun::{gauss_legendre, IntegrationResult};

/// Extra Fock levels kept in each factor before the product is truncated.
pub const PRODUCT_PADDING: usize = 8;

const GL_PANEL: usize = 16;

fn gradient(f: &WeylSymbol, x: &[PhasePoint]) -> Result<Vec<[Complex64; 2]>> {
    if let Some(g) = f.analytic_gradient(x) {
        return Ok(g);
    }
    if matches!(f.repr(), SymbolRepr::Grid(_)) {
        return Err(Error::numerical("sampled symbols carry no gradient"));
    }
    let mut out = Vec::with_capacity(x.len());
    for mode in 0..x.len() {
        let mut pair = [Complex64::new(0.0, 0.0); 2];
        for (axis, slot) in pair.iter_mut().enumerate() {
            let c = if axis == 0 { x[mode].q } else { x[mode].p };
            let h = 1e-5 * (1.0 + c.abs());
            let at = |t: f64| {
                let mut y = x.to_vec();
                if axis == 0 {
                    y[mode].q = c + t;
                } else {
                    y[mode].p = c + t;
                }
                f.eval(&y)
            };
            *slot = (at(-2.0 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2.0 * h)) / (12.0 * h);
            if !slot.is_finite() {
                return Err(Error::numerical(format!("finite difference is not finite at {x:?}")));
            }
        }
        out.push(pair);
    }
    Ok(out)
}

/// `{f, g} = sum over modes of df/dq dg/dp - df/dp dg/dq`.
pub fn poisson_bracket(f: &WeylSymbol, g: &WeylSymbol, x: impl AsRef<[PhasePoint]>) -> Result<Complex64> {
    let x = x.as_ref();
    if f.modes() != g.modes() || x.len() != f.modes() {
        return Err(Error::Domain("symbols and point must share the number of modes".into()));
    }
    let (df, dg) = (gradient(f, x)?, gradient(g, x)?);
    Ok(df.iter().zip(&dg).map(|(a, b)| a[0] * b[1] - a[1] * b[0]).sum())
}

/// `f g + (i hbar / 2) {f, g}` at `x`.
pub fn star_series(f: &WeylSymbol, g: &WeylSymbol, x: impl AsRef<[PhasePoint]>, hbar: f64) -> Result<Complex64> {
    if !(hbar > 0.0) {
        return Err(Error::Domain(format!("hbar must be positive, got {hbar}")));
    }
    let x = x.as_ref();
    let bracket = poisson_bracket(f, g, x)?;
    let value = f.eval(x) * g.eval(x) + Complex64::new(0.0, 0.5 * hbar) * bracket;
    if !value.is_finite() {
        return Err(Error::numerical("series value is not finite"));
    }
    Ok(value)
}

/// Smallest node count per axis that resolves the kernel oscillation on `[-L, L]`.
pub fn star_integral_min_nodes(extent: f64, hbar: f64) -> usize {
    (8.0 * extent / (PI * hbar)).ceil() as usize
}

fn line_rule(extent: f64, points: usize) -> (Vec<f64>, Vec<f64>) {
    let panels = points.div_ceil(GL_PANEL).max(1);
    let breaks: Vec<f64> = (0..=panels).map(|i| -extent + 2.0 * extent * i as f64 / panels as f64).collect();
    let rule = gauss_legendre(GL_PANEL).composite(&breaks);
    (rule.nodes, rule.weights)
}

fn groenewold_sum(f: &WeylSymbol, g: &WeylSymbol, x: PhasePoint, hbar: f64, u: &[f64], w: &[f64]) -> Complex64 {
    let n = u.len();
    // With J = [[0, -I], [I, 0]] the kernel exp(2i/hbar (y.Jz + z.Jx + x.Jy))
    // produces g*f; the opposite orientation matches f g + (i hbar/2){f, g}.
    let kappa = Complex64::new(0.0, -2.0 / hbar);
    // y = (u_i, u_j), z = (u_a, u_b); the phase splits into one factor per axis
    let gm = DMatrix::from_fn(n, n, |a, b| w[a] * w[b] * g.eval([PhasePoint::new(u[a], u[b])]));
    let pm = DMatrix::from_fn(n, n, |a, j| (kappa * u[a] * (u[j] - x.p)).exp());
    let qm = DMatrix::from_fn(n, n, |b, i| (kappa * u[b] * (x.q - u[i])).exp());
    let inner = pm.transpose() * gm * qm;
    let mut total = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            let fy = f.eval([PhasePoint::new(u[i], u[j])]);
            if fy == Complex64::new(0.0, 0.0) {
                continue;
            }
            total += w[i] * w[j] * fy * (kappa * (x.p * u[i] - x.q * u[j])).exp() * inner[(j, i)];
        }
    }
    total / (PI * hbar).powi(2)
}

/// Groenewold integral
/// `f*g(x) = (pi hbar)^{-2} int int f(y) g(z) exp(-2i/hbar (y.Jz + z.Jx + x.Jy)) dy dz`
/// for single-mode, decaying symbols, by tensor Gauss–Legendre on `[-L, L]^4`.
///
/// The error estimate compares against a rule with three quarters of the panels.
pub fn star_integral_with(
    f: &WeylSymbol,
    g: &WeylSymbol,
    x: PhasePoint,
    hbar: f64,
    grid: &PhaseGrid,
) -> Result<IntegrationResult<Complex64>> {
    if !(hbar > 0.0) {
        return Err(Error::Domain(format!("hbar must be positive, got {hbar}")));
    }
    if f.modes() != 1 || g.modes() != 1 || grid.modes != 1 {
        return Err(Error::Domain("the integral star product is implemented for one mode".into()));
    }
    let needed = star_integral_min_nodes(grid.extent, hbar);
    if grid.points < needed {
        return Err(Error::Config(format!(
            "{} nodes per axis cannot resolve the kernel at hbar = {hbar}; need at least {needed}",
            grid.points
        )));
    }
    let (u, w) = line_rule(grid.extent, grid.points);
    let fine = groenewold_sum(f, g, x, hbar, &u, &w);
    let coarse_panels = (3 * u.len() / GL_PANEL / 4).max(1);
    let (uc, wc) = line_rule(grid.extent, coarse_panels * GL_PANEL);
    let coarse = groenewold_sum(f, g, x, hbar, &uc, &wc);
    Ok(IntegrationResult {
        value: fine,
        error_estimate: (fine - coarse).norm(),
        evaluations: u.len().pow(2) + uc.len().pow(2),
    })
}

/// [`star_integral_with`] that fails unless the estimated relative error is below `1e-6`.
pub fn star_integral(f: &WeylSymbol, g: &WeylSymbol, x: PhasePoint, hbar: f64, grid: &PhaseGrid) -> Result<Complex64> {
    let r = star_integral_with(f, g, x, hbar, grid)?;
    if !(r.error_estimate <= 1e-6 * r.value.norm().max(1.0)) {
        return Err(Error::not_converged("Groenewold integral did not settle", r.value.re, r.error_estimate));
    }
    Ok(r.value)
}

/// `Smb[f^ g^](x)` from Fock matrices: both factors are quantized with
/// [`PRODUCT_PADDING`] extra levels, multiplied and truncated to `m_max`.
pub fn star_via_operators(f: &WeylSymbol, g: &WeylSymbol, m_max: usize, x: PhasePoint) -> Result<Complex64> {
    star_via_operators_with(f, g, m_max, x, &DequantizeOptions::default())
}

pub fn star_via_operators_with(
    f: &WeylSymbol,
    g: &WeylSymbol,
    m_max: usize,
    x: PhasePoint,
    options: &DequantizeOptions,
) -> Result<Complex64> {
    let a = quantize(f, m_max + PRODUCT_PADDING)?;
    let b = quantize(g, m_max + PRODUCT_PADDING)?;
    let product = a.product(&b)?.truncated(m_max);
    dequantize_with(&product, x, options)
}
