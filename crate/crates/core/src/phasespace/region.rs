use std::fmt;
use std::sync::Arc;

use super::PhasePoint;
use crate::error::{Error, Result};

/// Coordinate axis of a single-mode phase plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Q,
    P,
}

type Membership = Arc<dyn Fn(PhasePoint) -> bool + Send + Sync>;

/// A measurable subset of one mode's phase plane.
///
/// Points on a boundary count as inside.
#[derive(Clone)]
pub enum Region {
    Disk { radius: f64 },
    Annulus { inner: f64, outer: f64 },
    /// Points whose `axis` component is at least `threshold`.
    HalfPlane { axis: Axis, threshold: f64 },
    Complement(Box<Region>),
    Predicate { test: Membership, radial: bool },
}

impl Region {
    pub fn disk(radius: f64) -> Result<Region> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Domain(format!("disk radius must be positive, got {radius}")));
        }
        Ok(Region::Disk { radius })
    }

    pub fn annulus(inner: f64, outer: f64) -> Result<Region> {
        if !(inner >= 0.0 && inner < outer && outer.is_finite()) {
            return Err(Error::Domain(format!(
                "annulus needs 0 <= inner < outer, got ({inner}, {outer})"
            )));
        }
        Ok(Region::Annulus { inner, outer })
    }

    pub fn half_plane(axis: Axis, threshold: f64) -> Region {
        Region::HalfPlane { axis, threshold }
    }

    pub fn complement(self) -> Region {
        Region::Complement(Box::new(self))
    }

    /// Arbitrary membership test; set `radial` only when membership depends on `x^2` alone.
    pub fn predicate<F>(test: F, radial: bool) -> Region
    where
        F: Fn(PhasePoint) -> bool + Send + Sync + 'static,
    {
        Region::Predicate { test: Arc::new(test), radial }
    }

    pub fn contains(&self, x: PhasePoint) -> bool {
        match self {
            Region::Disk { radius } => x.norm_sqr() <= radius * radius,
            Region::Annulus { inner, outer } => {
                let s = x.norm_sqr();
                inner * inner <= s && s <= outer * outer
            }
            Region::HalfPlane { axis, threshold } => match axis {
                Axis::Q => x.q >= *threshold,
                Axis::P => x.p >= *threshold,
            },
            Region::Complement(inner) => !inner.contains(x),
            Region::Predicate { test, .. } => test(x),
        }
    }

    /// True when membership depends only on `x^2`.
    pub fn is_radial(&self) -> bool {
        match self {
            Region::Disk { .. } | Region::Annulus { .. } => true,
            Region::HalfPlane { .. } => false,
            Region::Complement(inner) => inner.is_radial(),
            Region::Predicate { radial, .. } => *radial,
        }
    }

    /// Radii at which membership can change, for radial regions with a known
    /// boundary.
    pub fn radial_breaks(&self) -> Option<Vec<f64>> {
        match self {
            Region::Disk { radius } => Some(vec![*radius]),
            Region::Annulus { inner, outer } if *inner > 0.0 => Some(vec![*inner, *outer]),
            Region::Annulus { outer, .. } => Some(vec![*outer]),
            Region::Complement(inner) => inner.radial_breaks(),
            _ => None,
        }
    }

    /// Membership as a function of `s = x^2`; only meaningful for radial regions.
    pub(crate) fn contains_radial(&self, s: f64) -> bool {
        self.contains(PhasePoint::new(s.max(0.0).sqrt(), 0.0))
    }
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Disk { radius } => write!(f, "Disk({radius})"),
            Region::Annulus { inner, outer } => write!(f, "Annulus({inner}, {outer})"),
            Region::HalfPlane { axis, threshold } => write!(f, "HalfPlane({axis:?} >= {threshold})"),
            Region::Complement(inner) => write!(f, "Complement({inner:?})"),
            Region::Predicate { radial, .. } => write!(f, "Predicate(radial = {radial})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_guards() {
        assert!(Region::disk(0.0).is_err());
        assert!(Region::disk(-1.0).is_err());
        assert!(Region::annulus(2.0, 1.0).is_err());
        assert!(Region::annulus(1.0, 1.0).is_err());
        assert!(Region::annulus(0.0, 1.0).is_ok());
    }

    #[test]
    fn boundary_counts_as_inside() {
        let d = Region::disk(1.0).unwrap();
        assert!(d.contains(PhasePoint::new(1.0, 0.0)));
        let h = Region::half_plane(Axis::P, 0.5);
        assert!(h.contains(PhasePoint::new(-3.0, 0.5)));
        assert!(!h.contains(PhasePoint::new(-3.0, 0.49)));
    }

    #[test]
    fn radial_flags() {
        assert!(Region::disk(1.0).unwrap().complement().is_radial());
        assert!(!Region::half_plane(Axis::Q, 0.0).is_radial());
        assert_eq!(Region::annulus(0.5, 2.0).unwrap().radial_breaks(), Some(vec![0.5, 2.0]));
        assert_eq!(Region::predicate(|x| x.q > 0.0, false).radial_breaks(), None);
    }

    proptest! {
        #[test]
        fn double_complement_is_identity(q in -5.0f64..5.0, p in -5.0f64..5.0, r in 0.1f64..4.0) {
            let x = PhasePoint::new(q, p);
            for region in [Region::disk(r).unwrap(), Region::annulus(r / 2.0, r).unwrap(), Region::half_plane(Axis::Q, r - 2.0)] {
                let twice = region.clone().complement().complement();
                prop_assert_eq!(region.contains(x), twice.contains(x));
            }
        }
    }
}
