use std::f64::consts::PI;

use num_complex::Complex64;

use super::{com_coords, Frame, GridSamples, PhasePoint};
use crate::error::{Error, Result};
use crate::specfun::{integrate_adaptive, laguerre_pair};

/// Weyl symbol of the Fock projector, `Smb[|m><m|](x) = 2 (-1)^m L_m(2x^2) e^{-x^2}`.
pub fn symbol_fock_diag(m: usize, x: PhasePoint) -> f64 {
    let s = x.norm_sqr();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    2.0 * sign * laguerre_pair(m, 2.0 * s).1 * (-s).exp()
}

/// Wigner function of the Fock state `|m>`, `W_m = Smb[|m><m|] / (2 pi)`.
pub fn wigner_fock(m: usize, x: PhasePoint) -> f64 {
    symbol_fock_diag(m, x) / (2.0 * PI)
}

/// `W_m` as a function of `s = x^2`.
pub fn wigner_fock_radial(m: usize, s: f64) -> f64 {
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    sign * laguerre_pair(m, 2.0 * s).1 * (-s).exp() / PI
}

/// Wigner function of `(|0>|1> - |1>|0>)/sqrt(2)` in center-of-mass coordinates.
pub fn wigner_bell(center: PhasePoint, relative: PhasePoint) -> f64 {
    let d2 = relative.norm_sqr();
    (-(center.norm_sqr() + d2)).exp() * (2.0 * d2 - 1.0) / (PI * PI)
}

/// Truncation half-width for Fock-state quantities: Gaussian decay leaves
/// less than `1e-10` outside `|q|, |p| <= L`.
pub fn fock_extent(m: usize) -> f64 {
    (((2 * m + 1) as f64).sqrt() + 5.0).max(6.0)
}

/// Weyl symbol of an operator from its position kernel `K(a, b) = <a|A|b>`:
/// `Smb[A](q, p) = 2 int <q - y|A|q + y> e^{2 i p y} dy`.
///
/// The kernel must decay in `y`; the integral runs over both half-lines.
pub fn weyl_symbol_direct<K>(kernel: K, x: PhasePoint, tol: f64) -> Result<Complex64>
where
    K: Fn(f64, f64) -> Complex64,
{
    let integrand = |y: f64| kernel(x.q - y, x.q + y) * Complex64::from_polar(1.0, 2.0 * x.p * y);
    let mut total = Complex64::new(0.0, 0.0);
    for sign in [1.0, -1.0] {
        let re = integrate_adaptive(|t| integrand(sign * t).re, 0.0, f64::INFINITY, tol / 4.0)?;
        let im = integrate_adaptive(|t| integrand(sign * t).im, 0.0, f64::INFINITY, tol / 4.0)?;
        total += Complex64::new(re.value, im.value);
    }
    Ok(2.0 * total)
}

/// A normalized Wigner function on one or two modes.
#[derive(Debug, Clone, PartialEq)]
pub enum WignerState {
    /// Fock state `|m>` of a single mode.
    Fock(usize),
    /// The two-mode Bell state `(|0>|1> - |1>|0>)/sqrt(2)`.
    Bell,
    /// Product of single-mode states, one per mode.
    Product(Vec<WignerState>),
    /// Sampled values on a grid.
    Grid(GridSamples),
}

impl WignerState {
    pub fn product(factors: Vec<WignerState>) -> Result<WignerState> {
        if factors.is_empty() || factors.iter().any(|f| f.modes() != 1) {
            return Err(Error::Domain("product states need single-mode factors".into()));
        }
        if factors.len() > 2 {
            return Err(Error::Domain("at most two modes are supported".into()));
        }
        Ok(WignerState::Product(factors))
    }

    pub fn modes(&self) -> usize {
        match self {
            WignerState::Fock(_) => 1,
            WignerState::Bell => 2,
            WignerState::Product(f) => f.iter().map(WignerState::modes).sum(),
            WignerState::Grid(g) => g.grid.modes,
        }
    }

    /// `W(x)` at lab coordinates, one point per mode.
    pub fn eval(&self, x: impl AsRef<[PhasePoint]>) -> f64 {
        let x = x.as_ref();
        match self {
            WignerState::Fock(m) => wigner_fock(*m, x[0]),
            WignerState::Bell => {
                let (c, d) = com_coords(x[0], x[1]);
                wigner_bell(c, d)
            }
            WignerState::Product(factors) => {
                let mut offset = 0;
                let mut value = 1.0;
                for f in factors {
                    let n = f.modes();
                    value *= f.eval(&x[offset..offset + n]);
                    offset += n;
                }
                value
            }
            WignerState::Grid(g) => g.interpolate(x),
        }
    }

    /// `W` as a function of `s = x^2` for radial single-mode states.
    pub fn radial_profile(&self, s: f64) -> Option<f64> {
        match self {
            WignerState::Fock(m) => Some(wigner_fock_radial(*m, s)),
            _ => None,
        }
    }

    pub fn is_radial(&self) -> bool {
        matches!(self, WignerState::Fock(_))
    }

    /// Frame in which the state's Wigner function factorizes.
    pub fn natural_frame(&self) -> Frame {
        match self {
            WignerState::Bell => Frame::CenterOfMass,
            _ => Frame::Lab,
        }
    }

    /// Per-mode radius beyond which the state is negligible (relative `1e-10`).
    pub fn extent(&self) -> f64 {
        match self {
            WignerState::Fock(m) => fock_extent(*m),
            WignerState::Bell => fock_extent(1),
            WignerState::Product(f) => f.iter().map(WignerState::extent).fold(0.0, f64::max),
            WignerState::Grid(g) => g.grid.extent,
        }
    }
}
