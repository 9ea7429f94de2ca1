//! Operators in the truncated Fock basis and the symbol <-> matrix maps.

use std::f64::consts::{PI, SQRT_2, TAU};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::phasespace::{PhasePoint, SymbolRepr, WeylSymbol};
use crate::specfun::{gauss_legendre, integrate_with_breaks, ln_factorial, MAX_DEGREE};

/// Default Fock truncation for operator-route computations.
pub const DEFAULT_M_MAX: usize = 64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Complex matrix `A_{mn} = <m|A|n>` on `|0>, ..., |m_max>`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrix {
    data: DMatrix<Complex64>,
    hermitian: bool,
}

impl FockMatrix {
    /// Wrap a square matrix; `hermitian` is kept only if `||A - A^+||_max < 1e-10`.
    pub fn new(data: DMatrix<Complex64>, hermitian: bool) -> Result<FockMatrix> {
        if !data.is_square() || data.nrows() == 0 {
            return Err(Error::Domain(format!(
                "Fock matrices must be square and non-empty, got {}x{}",
                data.nrows(),
                data.ncols()
            )));
        }
        let mut out = FockMatrix { data, hermitian: false };
        out.hermitian = hermitian && out.hermiticity_defect() < 1e-10;
        Ok(out)
    }

    pub fn identity(m_max: usize) -> FockMatrix {
        FockMatrix { data: DMatrix::identity(m_max + 1, m_max + 1), hermitian: true }
    }

    pub fn diagonal(values: &[f64]) -> FockMatrix {
        let n = values.len().max(1);
        let mut data = DMatrix::from_element(n, n, ZERO);
        for (i, &v) in values.iter().enumerate() {
            data[(i, i)] = Complex64::new(v, 0.0);
        }
        FockMatrix { data, hermitian: true }
    }

    /// Annihilation operator `a|n> = sqrt(n)|n-1>`.
    pub fn annihilation(m_max: usize) -> FockMatrix {
        let n = m_max + 1;
        let data = DMatrix::from_fn(n, n, |i, j| {
            if j == i + 1 {
                Complex64::new((j as f64).sqrt(), 0.0)
            } else {
                ZERO
            }
        });
        FockMatrix { data, hermitian: false }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn m_max(&self) -> usize {
        self.dim() - 1
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.data[(m, n)]
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub fn adjoint(&self) -> FockMatrix {
        FockMatrix { data: self.data.adjoint(), hermitian: self.hermitian }
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (&self.data - self.data.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn diagonal_values(&self) -> Vec<Complex64> {
        (0..self.dim()).map(|i| self.data[(i, i)]).collect()
    }

    pub fn trace(&self) -> Complex64 {
        self.data.trace()
    }

    /// Leading `m_max + 1` block.
    pub fn truncated(&self, m_max: usize) -> FockMatrix {
        let n = (m_max + 1).min(self.dim());
        FockMatrix { data: self.data.view((0, 0), (n, n)).into_owned(), hermitian: self.hermitian }
    }

    /// Largest entry in the last two rows and columns relative to the largest entry overall.
    pub fn tail_ratio(&self) -> f64 {
        let n = self.dim();
        let max = self.max_abs();
        if max == 0.0 || n < 3 {
            return 0.0;
        }
        let mut tail: f64 = 0.0;
        for k in n - 2..n {
            for j in 0..n {
                tail = tail.max(self.data[(k, j)].norm()).max(self.data[(j, k)].norm());
            }
        }
        tail / max
    }

    pub fn product(&self, rhs: &FockMatrix) -> Result<FockMatrix> {
        self.check_dims(rhs)?;
        Ok(FockMatrix { data: &self.data * &rhs.data, hermitian: false })
    }

    pub fn sum(&self, rhs: &FockMatrix) -> Result<FockMatrix> {
        self.check_dims(rhs)?;
        Ok(FockMatrix { data: &self.data + &rhs.data, hermitian: self.hermitian && rhs.hermitian })
    }

    pub fn scaled(&self, c: f64) -> FockMatrix {
        FockMatrix { data: &self.data * Complex64::new(c, 0.0), hermitian: self.hermitian }
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, rhs: &FockMatrix) -> Result<FockMatrix> {
        self.check_dims(rhs)?;
        Ok(FockMatrix { data: &self.data * &rhs.data - &rhs.data * &self.data, hermitian: false })
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        if !self.hermitian {
            return Err(Error::Domain("eigenvalues requested for a non-Hermitian matrix".into()));
        }
        let mut ev: Vec<f64> = self.data.clone().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        Ok(ev)
    }

    fn check_dims(&self, rhs: &FockMatrix) -> Result<()> {
        if self.dim() != rhs.dim() {
            return Err(Error::Domain(format!("dimension mismatch {} vs {}", self.dim(), rhs.dim())));
        }
        Ok(())
    }
}

fn check_index(m: usize) -> Result<()> {
    if m > MAX_DEGREE {
        return Err(Error::Domain(format!("Fock index {m} exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

/// Radial factors `R[k][d](r)` of the Fock cross symbols for `k + d <= m_max`:
/// `R = 2 (-1)^k sqrt(k!/(k+d)!) (sqrt(2) r)^d e^{-r^2} L_k^d(2 r^2)`.
fn cross_radial(m_max: usize, r: f64) -> Vec<Vec<f64>> {
    let s = r * r;
    let y = 2.0 * s;
    let mut table = Vec::with_capacity(m_max + 1);
    for d in 0..=m_max {
        let len = m_max + 1 - d;
        let mut column = vec![0.0; len];
        let log_start = if d == 0 {
            -s
        } else if r == 0.0 {
            f64::NEG_INFINITY
        } else {
            d as f64 * (SQRT_2 * r).ln() - 0.5 * ln_factorial(d) - s
        };
        let df = d as f64;
        // l_k = sqrt(k!/(k+d)!) L_k^d(y) e^{-s} (sqrt 2 r)^d
        let mut prev = 0.0;
        let mut cur = log_start.exp();
        for (k, slot) in column.iter_mut().enumerate() {
            let sign = if k % 2 == 0 { 2.0 } else { -2.0 };
            *slot = sign * cur;
            let kf = k as f64;
            let next = ((2.0 * kf + 1.0 + df - y) * cur - (kf * (kf + df)).sqrt() * prev)
                / ((kf + 1.0) * (kf + 1.0 + df)).sqrt();
            prev = cur;
            cur = next;
        }
        table.push(column);
    }
    table
}

/// Cross symbol from its radial factor: entry `(m, n)` is `Smb[|n><m|]`.
fn cross_from_radial(radial: &[Vec<f64>], m: usize, n: usize, x: PhasePoint) -> Complex64 {
    let (k, d) = (m.min(n), m.abs_diff(n));
    let value = radial[d][k];
    if d == 0 {
        return Complex64::new(value, 0.0);
    }
    // (q + i p)^d for m > n, (q - i p)^d for n > m, with |.|^d already in `value`
    let angle = x.p.atan2(x.q) * d as f64;
    let phase = if m > n { angle } else { -angle };
    Complex64::from_polar(value, phase)
}

/// `Smb[|n><m|](x)`, so that `A_{mn} = (2 pi)^{-1} int A(x) symbol_fock_cross(m, n, x) dx`.
pub fn symbol_fock_cross(m: usize, n: usize, x: PhasePoint) -> Result<Complex64> {
    check_index(m)?;
    check_index(n)?;
    let radial = cross_radial(m.max(n), x.norm());
    Ok(cross_from_radial(&radial, m, n, x))
}

/// All cross symbols at `x`: entry `(m, n)` holds `Smb[|n><m|](x)`.
pub fn cross_symbol_table(m_max: usize, x: PhasePoint) -> Result<DMatrix<Complex64>> {
    check_index(m_max)?;
    let radial = cross_radial(m_max, x.norm());
    Ok(DMatrix::from_fn(m_max + 1, m_max + 1, |m, n| cross_from_radial(&radial, m, n, x)))
}

/// Operator of a single-mode symbol by the trace pairing
/// `A_{mn} = (2 pi)^{-1} int A(x) Smb[|n><m|](x) dx`.
///
/// Radial symbols give diagonal matrices, one radial integral per entry.
/// Other symbols go through an angular Fourier decomposition on a polar grid.
pub fn quantize(symbol: &WeylSymbol, m_max: usize) -> Result<FockMatrix> {
    check_index(m_max)?;
    if symbol.modes() != 1 {
        return Err(Error::Domain("quantize supports single-mode symbols only".into()));
    }
    match symbol.repr() {
        SymbolRepr::Radial { .. } => quantize_radial(symbol, m_max),
        _ => quantize_polar(symbol, m_max),
    }
}

fn quantize_radial(symbol: &WeylSymbol, m_max: usize) -> Result<FockMatrix> {
    let mut points = vec![0.0];
    let mut breaks: Vec<f64> = symbol.radial_breaks().unwrap_or_default().iter().map(|r| r * r).collect();
    breaks.sort_by(f64::total_cmp);
    points.extend(breaks.into_iter().filter(|&s| s > 0.0));
    points.push(f64::INFINITY);
    let mut data = DMatrix::from_element(m_max + 1, m_max + 1, ZERO);
    let mut real = true;
    for m in 0..=m_max {
        // (2 pi)^{-1} * 2 (-1)^m L_m(2s) e^{-s} * pi ds
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let weight = |s: f64| sign * crate::specfun::laguerre_pair(m, 2.0 * s).1 * (-s).exp();
        let re = integrate_with_breaks(|s| weight(s) * symbol.radial_profile(s).unwrap_or_default().re, &points, 1e-13)?;
        let im_part = integrate_with_breaks(|s| weight(s) * symbol.radial_profile(s).unwrap_or_default().im, &points, 1e-13)?;
        if im_part.value.abs() > 0.0 {
            real = false;
        }
        data[(m, m)] = Complex64::new(re.value, im_part.value);
    }
    FockMatrix::new(data, real)
}

/// Radial panels of unit width with 20 Gauss nodes each.
fn polar_radial_rule(m_max: usize) -> (Vec<f64>, Vec<f64>) {
    let extent = ((2 * m_max + 1) as f64).sqrt() + 6.0;
    let panels = extent.ceil() as usize;
    let breaks: Vec<f64> = (0..=panels).map(|i| i as f64 * extent / panels as f64).collect();
    let rule = gauss_legendre(20).composite(&breaks);
    (rule.nodes, rule.weights)
}

fn quantize_polar(symbol: &WeylSymbol, m_max: usize) -> Result<FockMatrix> {
    let (radii, weights) = polar_radial_rule(m_max);
    let n_theta = 2 * m_max + 66;
    let dtheta = TAU / n_theta as f64;
    let max_d = m_max as i64;
    let mut data = DMatrix::from_element(m_max + 1, m_max + 1, ZERO);
    let mut real = true;
    let mut samples = vec![ZERO; n_theta];
    let mut fourier = vec![ZERO; (2 * max_d + 1) as usize];
    // unit roots e^{i theta_j} for the angular transform
    let roots: Vec<Complex64> = (0..n_theta).map(|j| Complex64::from_polar(1.0, j as f64 * dtheta)).collect();
    for (&r, &w) in radii.iter().zip(&weights) {
        for (j, slot) in samples.iter_mut().enumerate() {
            let x = PhasePoint::from_polar(r, j as f64 * dtheta);
            let v = symbol.eval(x);
            if !v.is_finite() {
                return Err(Error::numerical(format!("symbol is not finite at {x:?}")));
            }
            if v.im != 0.0 {
                real = false;
            }
            *slot = v;
        }
        // a_d = int A(r, theta) e^{i d theta} dtheta
        for (idx, slot) in fourier.iter_mut().enumerate() {
            let d = idx as i64 - max_d;
            let step = d.rem_euclid(n_theta as i64) as usize;
            let mut acc = ZERO;
            let mut pos = 0usize;
            for v in &samples {
                acc += v * roots[pos];
                pos += step;
                if pos >= n_theta {
                    pos -= n_theta;
                }
            }
            *slot = acc * dtheta;
        }
        let radial = cross_radial(m_max, r);
        let scale = w * r / (2.0 * PI);
        for m in 0..=m_max {
            for n in 0..=m_max {
                let (k, d) = (m.min(n), m.abs_diff(n));
                // angular factor of Smb[|n><m|] is e^{+i d theta} for m > n
                let signed = if m >= n { d as i64 } else { -(d as i64) };
                data[(m, n)] += scale * radial[d][k] * fourier[(signed + max_d) as usize];
            }
        }
    }
    FockMatrix::new(data, real)
}

/// How partial sums of a Fock expansion are turned into a value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Resummation {
    /// The last partial sum as is.
    Partial,
    /// Repeated pairwise averaging of the last `order + 1` partial sums; removes the
    /// alternating component that Fock expansions of non-trace-class symbols carry.
    Euler { order: usize },
    /// Arithmetic mean of all partial sums.
    Cesaro,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DequantizeOptions {
    pub resummation: Resummation,
    /// Maximum relative change of the resummed value between truncations
    /// `m_max - 1` and `m_max`; `None` skips the check.
    pub tail_limit: Option<f64>,
}

impl Default for DequantizeOptions {
    fn default() -> Self {
        DequantizeOptions { resummation: Resummation::Euler { order: 20 }, tail_limit: Some(1e-8) }
    }
}

impl DequantizeOptions {
    pub fn unchecked(resummation: Resummation) -> Self {
        DequantizeOptions { resummation, tail_limit: None }
    }
}

/// Partial sums `S_k = sum_{m, n <= k} A_{mn} Smb[|m><n|](x)`.
fn block_partial_sums(a: &FockMatrix, x: PhasePoint) -> Result<Vec<Complex64>> {
    let table = cross_symbol_table(a.m_max(), x)?;
    let mut sums = Vec::with_capacity(a.dim());
    let mut acc = ZERO;
    for k in 0..a.dim() {
        acc += a.get(k, k) * table[(k, k)];
        for j in 0..k {
            // Smb[|m><n|] is table entry (n, m)
            acc += a.get(k, j) * table[(j, k)] + a.get(j, k) * table[(k, j)];
        }
        sums.push(acc);
    }
    Ok(sums)
}

fn resum(sums: &[Complex64], method: Resummation) -> Complex64 {
    match method {
        Resummation::Partial => *sums.last().unwrap_or(&ZERO),
        Resummation::Euler { order } => {
            let order = order.min(sums.len() - 1);
            let mut window: Vec<Complex64> = sums[sums.len() - order - 1..].to_vec();
            for _ in 0..order {
                window = window.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
            }
            window[0]
        }
        Resummation::Cesaro => sums.iter().sum::<Complex64>() / sums.len() as f64,
    }
}

/// Symbol of a Fock-basis operator at `x`, `sum_{mn} A_{mn} Smb[|m><n|](x)`.
pub fn dequantize(a: &FockMatrix, x: PhasePoint) -> Result<Complex64> {
    dequantize_with(a, x, &DequantizeOptions::default())
}

pub fn dequantize_with(a: &FockMatrix, x: PhasePoint, options: &DequantizeOptions) -> Result<Complex64> {
    let sums = block_partial_sums(a, x)?;
    let value = resum(&sums, options.resummation);
    if let Some(limit) = options.tail_limit {
        if sums.len() > 2 {
            let previous = resum(&sums[..sums.len() - 1], options.resummation);
            let ratio = (value - previous).norm() / value.norm().max(1.0);
            if ratio > limit {
                return Err(Error::Truncation { ratio, limit });
            }
        }
    }
    Ok(value)
}
