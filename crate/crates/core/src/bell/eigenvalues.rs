//! Eigenvalues `lambda_m(R) = <m| chi_disk(R) |m>` of the quantized disk indicator.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::phasespace::{characteristic_symbol, expectation_with, ExpectationOptions, Method, Region, Sign, WignerState};
use crate::specfun::{integrate_with_breaks, laguerre_assoc_eval, laguerre_eval, laguerre_zeros};

/// Largest index accepted by the eigenvalue routes.
pub const MAX_INDEX: usize = 100;

const QUADRATURE_TOL: f64 = 1e-13;
const CHECKPOINTS: [usize; 2] = [5, 20];
const CHECKPOINT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EigenMethod {
    Quadrature,
    Generating,
    Recurrence,
}

/// `lambda_0(R), ..., lambda_M(R)` together with the route that produced them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenvalueSeries {
    pub radius: f64,
    pub values: Vec<f64>,
    pub method: EigenMethod,
}

impl EigenvalueSeries {
    pub fn get(&self, m: usize) -> Option<f64> {
        self.values.get(m).copied()
    }

    pub fn m_max(&self) -> usize {
        self.values.len() - 1
    }

    /// Largest pointwise difference to another series over the common range.
    pub fn max_difference(&self, other: &EigenvalueSeries) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

fn check(m: usize, radius: f64) -> Result<()> {
    if m > MAX_INDEX {
        return Err(Error::Domain(format!("index {m} exceeds {MAX_INDEX}")));
    }
    if !(radius >= 0.0) || !radius.is_finite() {
        return Err(Error::Domain(format!("radius must be finite and non-negative, got {radius}")));
    }
    Ok(())
}

/// Integrand `(-1)^m L_m(2u) e^{-u}` of the eigenvalue integral in `u = x^2`.
pub(crate) fn radial_density(m: usize, u: f64) -> f64 {
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * laguerre_eval(m, 2.0 * u).unwrap_or(f64::NAN) * (-u).exp()
}

/// Sign changes of the radial density, `u_k = x_k / 2` for the zeros `x_k` of `L_m`.
pub(crate) fn density_nodes(m: usize) -> Result<Vec<f64>> {
    if m == 0 {
        return Ok(Vec::new());
    }
    Ok(laguerre_zeros(m)?.into_iter().map(|x| 0.5 * x).collect())
}

/// `lambda_m(R) = int_0^{R^2} (-1)^m L_m(2u) e^{-u} du`, split at the sign changes.
pub fn lambda_quadrature(m: usize, radius: f64) -> Result<f64> {
    check(m, radius)?;
    let top = radius * radius;
    if top == 0.0 {
        return Ok(0.0);
    }
    let mut points = vec![0.0];
    points.extend(density_nodes(m)?.into_iter().filter(|&u| u < top));
    points.push(top);
    Ok(integrate_with_breaks(|u| radial_density(m, u), &points, QUADRATURE_TOL)?.value)
}

pub fn lambda_quadrature_series(m_max: usize, radius: f64) -> Result<EigenvalueSeries> {
    check(m_max, radius)?;
    let values = (0..=m_max).map(|m| lambda_quadrature(m, radius)).collect::<Result<_>>()?;
    Ok(EigenvalueSeries { radius, values, method: EigenMethod::Quadrature })
}

/// Taylor coefficients of `G(t) = (t - 1)^{-1} (exp(R^2 (t - 1)/(t + 1)) - 1)`
/// by power-series arithmetic.
pub fn lambda_generating(m_max: usize, radius: f64) -> Result<EigenvalueSeries> {
    check(m_max, radius)?;
    let r2 = radius * radius;
    // a(t) = R^2 (t - 1)/(t + 1) = R^2 (-1 + 2t - 2t^2 + ...)
    let a: Vec<f64> = (0..=m_max)
        .map(|k| match k {
            0 => -r2,
            k if k % 2 == 1 => 2.0 * r2,
            _ => -2.0 * r2,
        })
        .collect();
    // e(t) = exp(a(t)): e_0 = exp(a_0), k e_k = sum_{j=1}^k j a_j e_{k-j}
    let mut e = vec![0.0; m_max + 1];
    e[0] = a[0].exp();
    for k in 1..=m_max {
        let acc: f64 = (1..=k).map(|j| j as f64 * a[j] * e[k - j]).sum();
        e[k] = acc / k as f64;
        if !e[k].is_finite() {
            return Err(Error::numerical(format!("series coefficient {k} overflowed at R = {radius}")));
        }
    }
    // (t - 1)^{-1} = -(1 + t + t^2 + ...), so G_k = 1 - sum_{j<=k} e_j
    let mut partial = 0.0;
    let values = e
        .iter()
        .map(|&ej| {
            partial += ej;
            1.0 - partial
        })
        .collect();
    Ok(EigenvalueSeries { radius, values, method: EigenMethod::Generating })
}

/// Two-term recurrence `lambda_{m+1} = lambda_m - (-1)^m (2a/(m+1)) L_m^1(2a) e^{-a}`, `a = R^2`.
///
/// The recurrence is checked against quadrature at fixed indices; a relative
/// disagreement above `1e-8` is reported as a numerical error.
pub fn lambda_recurrence(m_max: usize, radius: f64) -> Result<EigenvalueSeries> {
    check(m_max, radius)?;
    let a = radius * radius;
    let decay = (-a).exp();
    let mut values = Vec::with_capacity(m_max + 1);
    values.push(-(-a).exp_m1());
    for m in 0..m_max {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let step = sign * (2.0 * a / (m + 1) as f64) * laguerre_assoc_eval(m, 1, 2.0 * a)? * decay;
        values.push(values[m] - step);
    }
    for &m in CHECKPOINTS.iter().filter(|&&m| m <= m_max) {
        let reference = lambda_quadrature(m, radius)?;
        let gap = (values[m] - reference).abs() / reference.abs().max(1.0);
        if gap > CHECKPOINT_TOL {
            return Err(Error::not_converged(
                format!("recurrence drifted from quadrature at m = {m}"),
                values[m],
                gap,
            ));
        }
    }
    Ok(EigenvalueSeries { radius, values, method: EigenMethod::Recurrence })
}

/// `<m| chi_region |m>` for a radial region, from the phase-space pairing of
/// `W_m` with the region's indicator.
pub fn lambda_region(m: usize, region: &Region) -> Result<f64> {
    if m > MAX_INDEX {
        return Err(Error::Domain(format!("index {m} exceeds {MAX_INDEX}")));
    }
    if !region.is_radial() {
        return Err(Error::Domain("lambda_region needs a rotation-invariant region".into()));
    }
    let chi = characteristic_symbol(region, Sign::Minus);
    let options = ExpectationOptions { method: Method::Radial, nodes: None };
    Ok(expectation_with(&WignerState::Fock(m), &chi, 1e-12, &options)?.value.re)
}
