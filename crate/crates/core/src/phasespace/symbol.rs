use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::{com_coords, Frame, GridSamples, PhasePoint, Region};
use crate::error::{Error, Result};

pub type SymbolFn = Arc<dyn Fn(&[PhasePoint]) -> Complex64 + Send + Sync>;
/// Per mode, `[d/dq, d/dp]`.
pub type GradientFn = Arc<dyn Fn(&[PhasePoint]) -> Vec<[Complex64; 2]> + Send + Sync>;
/// Profile of a single-mode radial symbol as a function of `s = x^2`.
pub type RadialFn = Arc<dyn Fn(f64) -> Complex64 + Send + Sync>;

/// Which half of a region partition a characteristic symbol selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// The complement `E+` of the region.
    Plus,
    /// The region `E-` itself.
    Minus,
}

/// Polynomial symbol `sum B_mu q1^mu1 p1^mu2 ...` keyed by exponent vectors
/// in axis order `q1, p1, q2, p2`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolynomialSymbol {
    pub coefficients: BTreeMap<Vec<u32>, Complex64>,
}

impl PolynomialSymbol {
    fn eval(&self, x: &[PhasePoint]) -> Complex64 {
        self.coefficients
            .iter()
            .map(|(mu, c)| c * monomial(mu, x))
            .sum()
    }

    fn gradient(&self, x: &[PhasePoint]) -> Vec<[Complex64; 2]> {
        let modes = x.len();
        let mut grad = vec![[Complex64::new(0.0, 0.0); 2]; modes];
        for (mu, c) in &self.coefficients {
            for axis in 0..mu.len().min(2 * modes) {
                if mu[axis] == 0 {
                    continue;
                }
                let mut lowered = mu.clone();
                lowered[axis] -= 1;
                grad[axis / 2][axis % 2] += c * mu[axis] as f64 * monomial(&lowered, x);
            }
        }
        grad
    }
}

fn monomial(mu: &[u32], x: &[PhasePoint]) -> f64 {
    mu.iter()
        .enumerate()
        .map(|(axis, &e)| {
            let pt = x[axis / 2];
            let c = if axis % 2 == 0 { pt.q } else { pt.p };
            c.powi(e as i32)
        })
        .product()
}

#[derive(Clone)]
pub enum SymbolRepr {
    Analytic { eval: SymbolFn, gradient: Option<GradientFn> },
    Polynomial(PolynomialSymbol),
    /// Single-mode symbol depending on `s = x^2` only; `breaks` lists radii
    /// where the profile may be discontinuous.
    Radial { profile: RadialFn, breaks: Vec<f64> },
    Grid(GridSamples),
}

/// Layout advice for tensor quadrature: the frame in which the symbol is
/// simplest and, per frame mode, radii of known discontinuities.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureHint {
    pub frame: Frame,
    pub radial_breaks: Vec<Vec<f64>>,
}

/// A phase-space function standing for an operator under Weyl ordering.
#[derive(Clone)]
pub struct WeylSymbol {
    repr: SymbolRepr,
    modes: usize,
    dichotomic: bool,
    bound: Option<f64>,
    hint: Option<QuadratureHint>,
}

impl fmt::Debug for WeylSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.repr {
            SymbolRepr::Analytic { gradient, .. } => {
                if gradient.is_some() {
                    "analytic+gradient"
                } else {
                    "analytic"
                }
            }
            SymbolRepr::Polynomial(_) => "polynomial",
            SymbolRepr::Radial { .. } => "radial",
            SymbolRepr::Grid(_) => "grid",
        };
        f.debug_struct("WeylSymbol")
            .field("repr", &kind)
            .field("modes", &self.modes)
            .field("dichotomic", &self.dichotomic)
            .field("bound", &self.bound)
            .field("hint", &self.hint)
            .finish()
    }
}

impl WeylSymbol {
    fn from_repr(repr: SymbolRepr, modes: usize) -> WeylSymbol {
        WeylSymbol { repr, modes, dichotomic: false, bound: None, hint: None }
    }

    pub fn analytic<F>(modes: usize, f: F) -> WeylSymbol
    where
        F: Fn(&[PhasePoint]) -> Complex64 + Send + Sync + 'static,
    {
        Self::from_repr(SymbolRepr::Analytic { eval: Arc::new(f), gradient: None }, modes)
    }

    /// Real-valued single-mode convenience constructor.
    pub fn real<F>(f: F) -> WeylSymbol
    where
        F: Fn(PhasePoint) -> f64 + Send + Sync + 'static,
    {
        Self::analytic(1, move |x| Complex64::new(f(x[0]), 0.0))
    }

    /// Attach an analytic gradient to an analytic symbol.
    pub fn with_gradient<G>(mut self, g: G) -> WeylSymbol
    where
        G: Fn(&[PhasePoint]) -> Vec<[Complex64; 2]> + Send + Sync + 'static,
    {
        if let SymbolRepr::Analytic { gradient, .. } = &mut self.repr {
            *gradient = Some(Arc::new(g));
        }
        self
    }

    pub fn polynomial(modes: usize, coefficients: BTreeMap<Vec<u32>, Complex64>) -> WeylSymbol {
        Self::from_repr(SymbolRepr::Polynomial(PolynomialSymbol { coefficients }), modes)
    }

    /// Single-mode monomial `c q^a p^b`.
    pub fn monomial(c: f64, q_power: u32, p_power: u32) -> WeylSymbol {
        let mut map = BTreeMap::new();
        map.insert(vec![q_power, p_power], Complex64::new(c, 0.0));
        Self::polynomial(1, map)
    }

    pub fn position() -> WeylSymbol {
        Self::monomial(1.0, 1, 0)
    }

    pub fn momentum() -> WeylSymbol {
        Self::monomial(1.0, 0, 1)
    }

    pub fn constant(modes: usize, c: Complex64) -> WeylSymbol {
        let mut map = BTreeMap::new();
        map.insert(vec![0; 2 * modes], c);
        Self::polynomial(modes, map)
    }

    pub fn radial<F>(profile: F, breaks: Vec<f64>) -> WeylSymbol
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self::from_repr(SymbolRepr::Radial { profile: Arc::new(profile), breaks }, 1)
    }

    pub fn from_grid(samples: GridSamples) -> WeylSymbol {
        let modes = samples.grid.modes;
        Self::from_repr(SymbolRepr::Grid(samples), modes)
    }

    /// Declare the symbol dichotomic (values +-1), which fixes `B0 = 1`.
    pub fn into_dichotomic(mut self) -> WeylSymbol {
        self.dichotomic = true;
        self.bound = Some(1.0);
        self
    }

    pub fn with_bound(mut self, bound: f64) -> WeylSymbol {
        self.bound = Some(bound);
        self
    }

    pub fn with_hint(mut self, hint: QuadratureHint) -> WeylSymbol {
        self.hint = Some(hint);
        self
    }

    /// Lift a single-mode symbol to two modes, acting on the relative
    /// coordinate `dx = (x1 - x2)/sqrt(2)`.
    pub fn on_relative_coordinate(inner: WeylSymbol) -> Result<WeylSymbol> {
        if inner.modes != 1 {
            return Err(Error::Domain("relative-coordinate lift needs a single-mode symbol".into()));
        }
        let breaks = inner.radial_breaks().unwrap_or_default();
        let dichotomic = inner.dichotomic;
        let bound = inner.bound;
        let lifted = WeylSymbol::analytic(2, move |x| {
            let (_, dx) = com_coords(x[0], x[1]);
            inner.eval(dx)
        })
        .with_hint(QuadratureHint { frame: Frame::CenterOfMass, radial_breaks: vec![Vec::new(), breaks] });
        Ok(WeylSymbol { dichotomic, bound, ..lifted })
    }

    pub fn conj(&self) -> WeylSymbol {
        let inner = self.clone();
        let mut out = WeylSymbol::analytic(self.modes, move |x| inner.eval(x).conj());
        if let Some(g) = self.gradient_fn() {
            out = out.with_gradient(move |x| {
                g(x).into_iter().map(|[a, b]| [a.conj(), b.conj()]).collect()
            });
        }
        out.dichotomic = self.dichotomic;
        out.bound = self.bound;
        out.hint = self.hint.clone();
        if let SymbolRepr::Radial { profile, breaks } = &self.repr {
            let profile = profile.clone();
            out.repr = SymbolRepr::Radial { profile: Arc::new(move |s| profile(s).conj()), breaks: breaks.clone() };
        }
        out
    }

    pub fn eval(&self, x: impl AsRef<[PhasePoint]>) -> Complex64 {
        let x = x.as_ref();
        match &self.repr {
            SymbolRepr::Analytic { eval, .. } => eval(x),
            SymbolRepr::Polynomial(poly) => poly.eval(x),
            SymbolRepr::Radial { profile, .. } => profile(x[0].norm_sqr()),
            SymbolRepr::Grid(samples) => Complex64::new(samples.interpolate(x), 0.0),
        }
    }

    fn gradient_fn(&self) -> Option<GradientFn> {
        match &self.repr {
            SymbolRepr::Analytic { gradient, .. } => gradient.clone(),
            SymbolRepr::Polynomial(poly) => {
                let poly = poly.clone();
                Some(Arc::new(move |x: &[PhasePoint]| poly.gradient(x)))
            }
            _ => None,
        }
    }

    /// Closed-form gradient, when the representation carries one.
    pub fn analytic_gradient(&self, x: impl AsRef<[PhasePoint]>) -> Option<Vec<[Complex64; 2]>> {
        self.gradient_fn().map(|g| g(x.as_ref()))
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn repr(&self) -> &SymbolRepr {
        &self.repr
    }

    pub fn is_dichotomic(&self) -> bool {
        self.dichotomic
    }

    /// `B0 = sup |B|` when known.
    pub fn bound(&self) -> Option<f64> {
        self.bound
    }

    pub fn hint(&self) -> Option<&QuadratureHint> {
        self.hint.as_ref()
    }

    pub fn is_radial(&self) -> bool {
        matches!(self.repr, SymbolRepr::Radial { .. })
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self.repr, SymbolRepr::Grid(_))
    }

    /// Value as a function of `s = x^2`, for radial symbols.
    pub fn radial_profile(&self, s: f64) -> Option<Complex64> {
        match &self.repr {
            SymbolRepr::Radial { profile, .. } => Some(profile(s)),
            _ => None,
        }
    }

    /// Discontinuity radii of a radial symbol.
    pub fn radial_breaks(&self) -> Option<Vec<f64>> {
        match &self.repr {
            SymbolRepr::Radial { breaks, .. } => Some(breaks.clone()),
            _ => None,
        }
    }

    pub fn coefficients(&self) -> Option<&BTreeMap<Vec<u32>, Complex64>> {
        match &self.repr {
            SymbolRepr::Polynomial(poly) => Some(&poly.coefficients),
            _ => None,
        }
    }
}

/// `chi_-` (indicator of `region`) or `chi_+` (indicator of its complement).
pub fn characteristic_symbol(region: &Region, sign: Sign) -> WeylSymbol {
    let inside = match sign {
        Sign::Minus => 1.0,
        Sign::Plus => 0.0,
    };
    let outside = 1.0 - inside;
    let region = region.clone();
    if region.is_radial() {
        let breaks = region.radial_breaks().unwrap_or_default();
        WeylSymbol::radial(
            move |s| Complex64::new(if region.contains_radial(s) { inside } else { outside }, 0.0),
            breaks,
        )
        .with_bound(1.0)
    } else {
        WeylSymbol::analytic(1, move |x| {
            Complex64::new(if region.contains(x[0]) { inside } else { outside }, 0.0)
        })
        .with_bound(1.0)
    }
}

/// Dichotomic Bell symbol `B = chi_+ - chi_-`: `-1` on the region, `+1` elsewhere.
pub fn bell_symbol(region: &Region) -> WeylSymbol {
    let region = region.clone();
    let value = move |inside: bool| Complex64::new(if inside { -1.0 } else { 1.0 }, 0.0);
    if region.is_radial() {
        let breaks = region.radial_breaks().unwrap_or_default();
        WeylSymbol::radial(move |s| value(region.contains_radial(s)), breaks).into_dichotomic()
    } else {
        WeylSymbol::analytic(1, move |x| value(region.contains(x[0]))).into_dichotomic()
    }
}
