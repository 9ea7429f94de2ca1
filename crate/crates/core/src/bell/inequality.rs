//! Bell values of disk-shaped dichotomic observables and their LHV bound.

use std::f64::consts::SQRT_2;

use serde::Serialize;

use super::eigenvalues::{density_nodes, lambda_quadrature, radial_density, MAX_INDEX};
use crate::error::{Error, Result};
use crate::phasespace::{bell_symbol, expectation_with, ExpectationOptions, Method, Region, WeylSymbol, WignerState};
use crate::specfun::integrate_with_breaks;

/// Slack added to the LHV bound before a value counts as a violation.
pub const VIOLATION_SLACK: f64 = 1e-12;

/// A Bell expectation value next to the bound every LHV model obeys.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BellResult {
    pub value: f64,
    pub lhv_bound: f64,
    pub violated: bool,
    pub ratio: f64,
}

impl BellResult {
    pub fn new(value: f64, lhv_bound: f64) -> BellResult {
        BellResult {
            value,
            lhv_bound,
            violated: value.abs() > lhv_bound + VIOLATION_SLACK,
            ratio: value.abs() / lhv_bound,
        }
    }
}

/// `<m| 1 - 2 chi_disk(R) |m> = 1 - 2 lambda_m(R)` against the bound 1.
pub fn bell_value_disk(m: usize, radius: f64) -> Result<BellResult> {
    Ok(BellResult::new(1.0 - 2.0 * lambda_quadrature(m, radius)?, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Figure1Row {
    pub m: usize,
    #[serde(rename = "R")]
    pub radius: f64,
    pub lambda: f64,
    pub bell_value: f64,
    pub abs_bell_value: f64,
    pub violated: bool,
}

/// `|1 - 2 lambda_m(R)|` for `m = 0..=m_max` and every radius, radius-major in input order.
pub fn figure1_data(m_max: usize, radii: &[f64]) -> Result<Vec<Figure1Row>> {
    let mut rows = Vec::with_capacity(radii.len() * (m_max + 1));
    for &radius in radii {
        for m in 0..=m_max {
            let lambda = lambda_quadrature(m, radius)?;
            let result = BellResult::new(1.0 - 2.0 * lambda, 1.0);
            rows.push(Figure1Row {
                m,
                radius,
                lambda,
                bell_value: result.value,
                abs_bell_value: result.value.abs(),
                violated: result.violated,
            });
        }
    }
    Ok(rows)
}

/// `int |W_m(x)| d^2x`: the Bell value of the observable `-sgn W_m`.
///
/// The radial density is integrated between consecutive sign changes and the
/// absolute values of the pieces are summed.
pub fn abs_wigner_integral(m: usize) -> Result<f64> {
    if m > MAX_INDEX {
        return Err(Error::Domain(format!("index {m} exceeds {MAX_INDEX}")));
    }
    let mut edges = vec![0.0];
    edges.extend(density_nodes(m)?);
    edges.push(f64::INFINITY);
    let mut total = 0.0;
    for w in edges.windows(2) {
        let piece = integrate_with_breaks(|u| radial_density(m, u), w, 1e-11 / edges.len() as f64)?;
        total += piece.value.abs();
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BellRoute {
    /// Factorized route for the Bell state, phase-space pairing otherwise.
    #[default]
    Auto,
    /// Integrate the center-of-mass coordinate out analytically (Bell state only).
    Factorized,
    /// Full phase-space quadrature over all modes.
    Full,
}

/// `<B>` for the dichotomic symbol `-1` on `region`, `+1` elsewhere.
///
/// For the two-mode Bell state the region refers to the relative coordinate.
pub fn bell_expectation_general(state: &WignerState, region: &Region, tol: f64) -> Result<BellResult> {
    bell_expectation_with(state, region, tol, BellRoute::Auto, None)
}

/// As [`bell_expectation_general`] with an explicit route and, for the full
/// route, an optional tensor node count per axis.
pub fn bell_expectation_with(
    state: &WignerState,
    region: &Region,
    tol: f64,
    route: BellRoute,
    nodes: Option<usize>,
) -> Result<BellResult> {
    let single = bell_symbol(region);
    let bound = single.bound().unwrap_or(1.0);
    let is_bell = matches!(state, WignerState::Bell);
    let route = match route {
        BellRoute::Auto if is_bell => BellRoute::Factorized,
        BellRoute::Auto => BellRoute::Full,
        r => r,
    };
    let value = match (route, is_bell) {
        // W_Bell = W_0(x_c) W_1(dx) and int W_0 = 1
        (BellRoute::Factorized, true) => {
            expectation_with(&WignerState::Fock(1), &single, tol, &ExpectationOptions::default())?.value
        }
        (BellRoute::Factorized, false) => {
            return Err(Error::Config("the factorized route applies to the Bell state only".into()))
        }
        (_, true) => {
            let lifted = WeylSymbol::on_relative_coordinate(single)?;
            let options = ExpectationOptions { method: Method::Tensor, nodes };
            expectation_with(state, &lifted, tol, &options)?.value
        }
        (_, false) => {
            let options = ExpectationOptions { method: Method::Auto, nodes };
            expectation_with(state, &single, tol, &options)?.value
        }
    };
    Ok(BellResult::new(value.re, bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CirelsonFlag {
    Exceeds,
    Equal,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CirelsonComparison {
    pub ratio: f64,
    pub flag: CirelsonFlag,
}

/// `|value| / lhv_bound` compared with `sqrt 2`, equal within `1e-12`.
pub fn cirelson_ratio(result: &BellResult) -> Result<CirelsonComparison> {
    if !(result.lhv_bound > 0.0) {
        return Err(Error::Domain(format!("LHV bound must be positive, got {}", result.lhv_bound)));
    }
    let ratio = result.value.abs() / result.lhv_bound;
    let flag = if (ratio - SQRT_2).abs() <= 1e-12 {
        CirelsonFlag::Equal
    } else if ratio > SQRT_2 {
        CirelsonFlag::Exceeds
    } else {
        CirelsonFlag::Below
    };
    Ok(CirelsonComparison { ratio, flag })
}
