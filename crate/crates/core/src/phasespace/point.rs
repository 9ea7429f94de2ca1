use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_1_SQRT_2;

/// Reduced Planck constant in the dimensionless units used throughout.
pub const HBAR: f64 = 1.0;

/// A point `x = (q, p)` of one oscillator's phase plane, in units of the
/// ground-state width.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PhasePoint {
    pub q: f64,
    pub p: f64,
}

impl PhasePoint {
    pub const ORIGIN: PhasePoint = PhasePoint { q: 0.0, p: 0.0 };

    pub const fn new(q: f64, p: f64) -> Self {
        PhasePoint { q, p }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        PhasePoint { q: radius * c, p: radius * s }
    }

    /// `x^2 = q^2 + p^2`.
    pub fn norm_sqr(self) -> f64 {
        self.q * self.q + self.p * self.p
    }

    pub fn norm(self) -> f64 {
        self.q.hypot(self.p)
    }

    pub fn is_finite(self) -> bool {
        self.q.is_finite() && self.p.is_finite()
    }

    pub fn rotated(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        PhasePoint { q: c * self.q - s * self.p, p: s * self.q + c * self.p }
    }
}

impl std::ops::Add for PhasePoint {
    type Output = PhasePoint;
    fn add(self, rhs: PhasePoint) -> PhasePoint {
        PhasePoint::new(self.q + rhs.q, self.p + rhs.p)
    }
}

impl std::ops::Sub for PhasePoint {
    type Output = PhasePoint;
    fn sub(self, rhs: PhasePoint) -> PhasePoint {
        PhasePoint::new(self.q - rhs.q, self.p - rhs.p)
    }
}

impl std::ops::Mul<f64> for PhasePoint {
    type Output = PhasePoint;
    fn mul(self, rhs: f64) -> PhasePoint {
        PhasePoint::new(self.q * rhs, self.p * rhs)
    }
}

impl std::ops::Neg for PhasePoint {
    type Output = PhasePoint;
    fn neg(self) -> PhasePoint {
        PhasePoint::new(-self.q, -self.p)
    }
}

/// A single point is a one-mode phase-space vector.
impl AsRef<[PhasePoint]> for PhasePoint {
    fn as_ref(&self) -> &[PhasePoint] {
        std::slice::from_ref(self)
    }
}

/// Center-of-mass and relative coordinates of two modes,
/// `x_c = (x1 + x2)/sqrt(2)` and `dx = (x1 - x2)/sqrt(2)`.
pub fn com_coords(x1: PhasePoint, x2: PhasePoint) -> (PhasePoint, PhasePoint) {
    ((x1 + x2) * FRAC_1_SQRT_2, (x1 - x2) * FRAC_1_SQRT_2)
}

/// Inverse of [`com_coords`] (the map is an involution up to ordering).
pub fn lab_coords(center: PhasePoint, relative: PhasePoint) -> (PhasePoint, PhasePoint) {
    ((center + relative) * FRAC_1_SQRT_2, (center - relative) * FRAC_1_SQRT_2)
}

/// Orthogonal coordinate frames used to lay out quadrature grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Frame {
    /// The modes as given.
    #[default]
    Lab,
    /// Two modes rotated to `(x_c, dx)`.
    CenterOfMass,
}

impl Frame {
    /// Map frame coordinates back to lab coordinates.
    pub fn to_lab(self, coords: &[PhasePoint]) -> Vec<PhasePoint> {
        match self {
            Frame::Lab => coords.to_vec(),
            Frame::CenterOfMass => {
                let (x1, x2) = lab_coords(coords[0], coords[1]);
                vec![x1, x2]
            }
        }
    }
}
