//! Phase-space pairing `<A> = int W(x) Smb[A](x) dx` of a state and a symbol.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{Frame, GridSamples, PhasePoint, WeylSymbol, WignerState};
use crate::error::{Error, Result};
use crate::specfun::{gauss_legendre, integrate_complex, IntegrationResult};

/// Default polar nodes per axis for single-mode tensor quadrature.
pub const DEFAULT_NODES_ONE_MODE: usize = 128;
/// Default polar nodes per axis for two-mode tensor quadrature.
pub const DEFAULT_NODES_TWO_MODES: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Radial reduction when both factors are radial, grid sums for sampled
    /// inputs, tensor quadrature otherwise.
    #[default]
    Auto,
    /// One-dimensional integral over `s = x^2`.
    Radial,
    /// Tensor product of per-mode polar Gauss–Legendre x trapezoid rules.
    Tensor,
    /// Trapezoid sums on the sampled grid.
    Grid,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ExpectationOptions {
    pub method: Method,
    /// Nodes per axis for the tensor route; `None` picks the per-mode default.
    pub nodes: Option<usize>,
}

/// `<A>` with the default options; fails if the error estimate exceeds `tol`.
pub fn expectation(state: &WignerState, symbol: &WeylSymbol, tol: f64) -> Result<Complex64> {
    Ok(expectation_with(state, symbol, tol, &ExpectationOptions::default())?.value)
}

pub fn expectation_with(
    state: &WignerState,
    symbol: &WeylSymbol,
    tol: f64,
    options: &ExpectationOptions,
) -> Result<IntegrationResult<Complex64>> {
    if state.modes() != symbol.modes() {
        return Err(Error::Domain(format!(
            "state has {} modes but symbol has {}",
            state.modes(),
            symbol.modes()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let sampled = matches!(state, WignerState::Grid(_)) || symbol.is_sampled();
    let method = match options.method {
        Method::Auto if sampled => Method::Grid,
        Method::Auto if state.is_radial() && symbol.is_radial() => Method::Radial,
        Method::Auto => Method::Tensor,
        m => m,
    };
    let result = match method {
        Method::Radial => radial(state, symbol, tol)?,
        Method::Tensor => {
            let nodes = options.nodes.unwrap_or(if state.modes() == 1 {
                DEFAULT_NODES_ONE_MODE
            } else {
                DEFAULT_NODES_TWO_MODES
            });
            tensor(state, symbol, nodes)?
        }
        Method::Grid => grid(state, symbol)?,
        Method::Auto => unreachable!(),
    };
    if !(result.error_estimate <= tol) {
        return Err(Error::not_converged(
            format!("{method:?} expectation missed tolerance {tol:e}"),
            result.value.re,
            result.error_estimate,
        ));
    }
    Ok(result)
}

fn radial(state: &WignerState, symbol: &WeylSymbol, tol: f64) -> Result<IntegrationResult<Complex64>> {
    if !(state.is_radial() && symbol.is_radial()) {
        return Err(Error::Config("radial reduction needs a radial state and a radial symbol".into()));
    }
    let mut points = vec![0.0];
    let mut breaks: Vec<f64> = symbol.radial_breaks().unwrap_or_default().iter().map(|r| r * r).collect();
    breaks.sort_by(f64::total_cmp);
    points.extend(breaks.into_iter().filter(|&s| s > 0.0));
    points.push(f64::INFINITY);
    integrate_complex(
        |s| {
            let w = state.radial_profile(s).unwrap_or(0.0);
            if w == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            PI * w * symbol.radial_profile(s).unwrap_or_default()
        },
        &points,
        tol,
    )
}

/// Polar nodes `(x, weight)` on the disk of radius `extent`, with radial
/// panels split at `breaks`.
pub(crate) fn polar_nodes(extent: f64, breaks: &[f64], nodes: usize) -> Vec<(PhasePoint, f64)> {
    let mut radii = vec![0.0];
    let mut inner: Vec<f64> = breaks.iter().copied().filter(|&b| b > 0.0 && b < extent).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    radii.extend(inner);
    radii.push(extent);
    let radial = gauss_legendre(nodes).composite(&radii);
    let dtheta = TAU / nodes as f64;
    let mut out = Vec::with_capacity(radial.len() * nodes);
    for (&r, &w) in radial.nodes.iter().zip(&radial.weights) {
        for j in 0..nodes {
            let theta = (j as f64 + 0.5) * dtheta;
            out.push((PhasePoint::from_polar(r, theta), w * r * dtheta));
        }
    }
    out
}

fn frame_and_breaks(state: &WignerState, symbol: &WeylSymbol) -> (Frame, Vec<Vec<f64>>) {
    let modes = state.modes();
    if let Some(hint) = symbol.hint() {
        let mut breaks = hint.radial_breaks.clone();
        breaks.resize(modes, Vec::new());
        return (hint.frame, breaks);
    }
    let mut breaks = vec![Vec::new(); modes];
    if modes == 1 {
        breaks[0] = symbol.radial_breaks().unwrap_or_default();
    }
    (state.natural_frame(), breaks)
}

fn tensor_sum(state: &WignerState, symbol: &WeylSymbol, nodes: usize) -> Result<Complex64> {
    let (frame, breaks) = frame_and_breaks(state, symbol);
    let extent = state.extent();
    let rules: Vec<_> = breaks.iter().map(|b| polar_nodes(extent, b, nodes)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    match rules.len() {
        1 => {
            for &(x, w) in &rules[0] {
                total += w * state.eval(x) * symbol.eval(x);
            }
        }
        2 => {
            for &(y0, w0) in &rules[0] {
                let mut inner = Complex64::new(0.0, 0.0);
                for &(y1, w1) in &rules[1] {
                    let lab = frame.to_lab(&[y0, y1]);
                    inner += w1 * state.eval(&lab) * symbol.eval(&lab);
                }
                total += w0 * inner;
            }
        }
        n => return Err(Error::Domain(format!("tensor quadrature supports one or two modes, got {n}"))),
    }
    Ok(total)
}

fn tensor(state: &WignerState, symbol: &WeylSymbol, nodes: usize) -> Result<IntegrationResult<Complex64>> {
    if nodes < 8 {
        return Err(Error::Config(format!("tensor quadrature needs at least 8 nodes per axis, got {nodes}")));
    }
    let fine = tensor_sum(state, symbol, nodes)?;
    let coarse_nodes = (3 * nodes / 4).max(8);
    let coarse = tensor_sum(state, symbol, coarse_nodes)?;
    let per_mode = |n: usize| (n * n) as f64;
    let evaluations = per_mode(nodes).powi(state.modes() as i32) + per_mode(coarse_nodes).powi(state.modes() as i32);
    Ok(IntegrationResult {
        value: fine,
        error_estimate: (fine - coarse).norm(),
        evaluations: evaluations as usize,
    })
}

fn grid(state: &WignerState, symbol: &WeylSymbol) -> Result<IntegrationResult<Complex64>> {
    let samples: &GridSamples = match (state, symbol.repr()) {
        (WignerState::Grid(a), super::SymbolRepr::Grid(b)) => {
            if a.grid != b.grid {
                return Err(Error::Config("state and symbol are sampled on different grids".into()));
            }
            a
        }
        (WignerState::Grid(a), _) => a,
        (_, super::SymbolRepr::Grid(b)) => b,
        _ => return Err(Error::Config("grid route needs a sampled state or symbol".into())),
    };
    let g = samples.grid;
    let integrand: Vec<Complex64> = (0..g.len())
        .map(|i| {
            let x = g.point(i);
            state.eval(&x) * symbol.eval(&x)
        })
        .collect();
    let fine: Complex64 = integrand.iter().enumerate().map(|(i, v)| v * g.weight(i)).sum();
    // same rule on the stride-2 subgrid; Richardson gives the error of the fine sum
    let last_even = (g.points - 1) / 2 * 2;
    let h2 = 2.0 * g.spacing();
    let coarse: Complex64 = integrand
        .iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let mut flat = i;
            let mut weight = 1.0;
            for _ in 0..g.axes() {
                let k = flat % g.points;
                flat /= g.points;
                if k % 2 == 1 || k > last_even {
                    return None;
                }
                weight *= if k == 0 || k == last_even { 0.5 * h2 } else { h2 };
            }
            Some(v * weight)
        })
        .sum();
    Ok(IntegrationResult {
        value: fine,
        error_estimate: (fine - coarse).norm() / 3.0,
        evaluations: g.len(),
    })
}
