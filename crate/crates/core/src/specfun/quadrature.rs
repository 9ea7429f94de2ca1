//! Gauss–Legendre rules and a globally adaptive Gauss–Kronrod integrator.

use std::collections::BinaryHeap;
use std::cmp::Ordering;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A fixed interpolatory rule: `sum_i w_i f(x_i)` approximates the integral
/// over `domain`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub domain: (f64, f64),
}

impl QuadratureRule {
    /// The same rule affinely mapped onto `[a, b]`.
    pub fn scaled(&self, a: f64, b: f64) -> QuadratureRule {
        let (lo, hi) = self.domain;
        let scale = (b - a) / (hi - lo);
        QuadratureRule {
            nodes: self.nodes.iter().map(|x| a + (x - lo) * scale).collect(),
            weights: self.weights.iter().map(|w| w * scale).collect(),
            domain: (a, b),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Concatenate copies of this rule over consecutive panels `[b_k, b_{k+1}]`.
    pub fn composite(&self, breaks: &[f64]) -> QuadratureRule {
        let mut nodes = Vec::with_capacity(self.len() * breaks.len().saturating_sub(1));
        let mut weights = Vec::with_capacity(nodes.capacity());
        for pair in breaks.windows(2) {
            if pair[1] <= pair[0] {
                continue;
            }
            let panel = self.scaled(pair[0], pair[1]);
            nodes.extend(panel.nodes);
            weights.extend(panel.weights);
        }
        let domain = (
            breaks.first().copied().unwrap_or(0.0),
            breaks.last().copied().unwrap_or(0.0),
        );
        QuadratureRule { nodes, weights, domain }
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// `n`-point Gauss–Legendre rule on `[-1, 1]`, nodes increasing.
///
/// Nodes come from Newton iteration on the Legendre recurrence, started at the
/// Chebyshev-like approximation `cos(pi (i - 1/4) / (n + 1/2))`.
pub fn gauss_legendre(n: usize) -> QuadratureRule {
    assert!((1..=512).contains(&n), "gauss_legendre: n = {n} outside 1..=512");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    QuadratureRule { nodes, weights, domain: (-1.0, 1.0) }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_600_525_416_104,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Kronrod estimate and |Kronrod - Gauss| on `[a, b]`.
fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    for j in 0..10 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Evaluation budget for one call of [`integrate_adaptive`].
pub const MAX_EVALUATIONS: usize = 400_000;

/// Absolute-tolerance adaptive integration of `f` over `[a, b]`.
///
/// `b` may be `f64::INFINITY`; the half-line is then covered by panels of
/// doubling width and truncated once two consecutive panels contribute less
/// than `tol / 100`.
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<IntegrationResult<f64>> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("integrate_adaptive: tolerance {tol} must be positive")));
    }
    if b.is_infinite() {
        return integrate_half_line(&mut f, a, tol);
    }
    integrate_finite(&mut f, a, b, tol, MAX_EVALUATIONS)
}

/// Adaptive integration over `[points[0], points[last]]`, with the listed
/// interior points forced as panel boundaries. The last point may be infinite.
pub fn integrate_with_breaks<F: FnMut(f64) -> f64>(
    mut f: F,
    points: &[f64],
    tol: f64,
) -> Result<IntegrationResult<f64>> {
    if points.len() < 2 {
        return Err(Error::Domain("integrate_with_breaks: need at least two points".into()));
    }
    let pieces = points.len() - 1;
    let share = tol / pieces as f64;
    let mut total = IntegrationResult { value: 0.0, error_estimate: 0.0, evaluations: 0 };
    for pair in points.windows(2) {
        if pair[1] <= pair[0] {
            continue;
        }
        let part = integrate_adaptive(&mut f, pair[0], pair[1], share)?;
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.evaluations += part.evaluations;
    }
    Ok(total)
}

/// Real and imaginary parts integrated separately.
pub fn integrate_complex<F: FnMut(f64) -> Complex64>(
    mut f: F,
    points: &[f64],
    tol: f64,
) -> Result<IntegrationResult<Complex64>> {
    let re = integrate_with_breaks(|x| f(x).re, points, tol / 2.0)?;
    let im = integrate_with_breaks(|x| f(x).im, points, tol / 2.0)?;
    Ok(IntegrationResult {
        value: Complex64::new(re.value, im.value),
        error_estimate: re.error_estimate + im.error_estimate,
        evaluations: re.evaluations + im.evaluations,
    })
}

fn integrate_finite<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    tol: f64,
    budget: usize,
) -> Result<IntegrationResult<f64>> {
    if a == b {
        return Ok(IntegrationResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
    }
    let (value, error) = gk21(f, a, b);
    let mut evaluations = 21;
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error });
    let mut total_value = value;
    let mut total_error = error;
    // Rounding floor: no estimate can beat a few ulps of the accumulated |f|.
    while total_error > tol {
        if evaluations + 42 > budget {
            return Err(Error::not_converged(
                format!("adaptive quadrature on [{a}, {b}] exhausted {budget} evaluations"),
                total_value,
                total_error,
            ));
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval cannot be split further in double precision
            return Err(Error::not_converged(
                "adaptive quadrature reached the resolution limit",
                total_value,
                total_error,
            ));
        }
        let (lv, le) = gk21(f, worst.a, mid);
        let (rv, re) = gk21(f, mid, worst.b);
        evaluations += 42;
        total_value += lv + rv - worst.value;
        total_error += le + re - worst.error;
        heap.push(Segment { a: worst.a, b: mid, value: lv, error: le });
        heap.push(Segment { a: mid, b: worst.b, value: rv, error: re });
        if total_error <= tol {
            // refresh from scratch to shed accumulated update rounding
            total_value = heap.iter().map(|s| s.value).sum();
            total_error = heap.iter().map(|s| s.error).sum();
        }
    }
    // deterministic summation order for reproducibility
    let mut segments: Vec<_> = heap.into_vec();
    segments.sort_by(|x, y| x.a.total_cmp(&y.a));
    Ok(IntegrationResult {
        value: segments.iter().map(|s| s.value).sum(),
        error_estimate: segments.iter().map(|s| s.error).sum(),
        evaluations,
    })
}

fn integrate_half_line<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    tol: f64,
) -> Result<IntegrationResult<f64>> {
    const MAX_REACH: f64 = 1e4;
    let negligible = tol / 100.0;
    let mut total = IntegrationResult { value: 0.0, error_estimate: 0.0, evaluations: 0 };
    let mut left = a;
    let mut width = 1.0;
    let mut quiet = 0;
    let mut share = tol / 2.0;
    loop {
        let right = left + width;
        let part = integrate_finite(f, left, right, share.max(f64::EPSILON * 1e-3), MAX_EVALUATIONS)?;
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.evaluations += part.evaluations;
        // a panel is quiet when its integral and its endpoint values are negligible
        let edge = f(right).abs() * width;
        total.evaluations += 1;
        if part.value.abs() + part.error_estimate < negligible && edge < negligible {
            quiet += 1;
            if quiet >= 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        if right - a > MAX_REACH {
            return Err(Error::not_converged(
                format!("integrand has not decayed by u = {right}"),
                total.value,
                total.error_estimate,
            ));
        }
        left = right;
        width *= 2.0;
        share /= 2.0;
    }
}
