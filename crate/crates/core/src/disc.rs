//! Validated scalar newtypes shared by every module.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// A point of the open unit disc, `|z| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        if value.re.is_finite() && value.im.is_finite() && value.norm() < 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::OutsideDisc(value))
        }
    }

    pub fn from_real(x: f64) -> Result<Self> {
        Self::new(Complex64::new(x, 0.0))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    /// Caller guarantees `|value| < 1`.
    pub(crate) fn new_unchecked(value: Complex64) -> Self {
        debug_assert!(value.norm() < 1.0);
        Self(value)
    }

    pub fn origin() -> Self {
        Self(Complex64::new(0.0, 0.0))
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        self.0
    }

    #[inline]
    pub fn modulus(self) -> f64 {
        self.0.norm()
    }
}

impl From<DiscPoint> for Complex64 {
    fn from(p: DiscPoint) -> Self {
        p.0
    }
}

/// Exponent of the standard weight `(alpha + 1)(1 - |z|^2)^alpha`, `alpha > -1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > -1.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidWeight(alpha))
        }
    }

    /// The unweighted (normalized area) measure.
    pub fn unweighted() -> Self {
        Self(0.0)
    }

    #[inline]
    pub fn alpha(self) -> f64 {
        self.0
    }
}

/// Integrability exponent `p`. The conjugate exponent is always derived.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Exponent(f64);

impl Exponent {
    /// Any `p > 0`, as used by the norm operations.
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > 0.0 {
            Ok(Self(p))
        } else {
            Err(Error::InvalidExponent {
                p,
                requirement: "0 < p < infinity",
            })
        }
    }

    /// `p >= 1`, as used by the projection-related operations.
    pub fn at_least_one(p: f64) -> Result<Self> {
        if p.is_finite() && p >= 1.0 {
            Ok(Self(p))
        } else {
            Err(Error::InvalidExponent {
                p,
                requirement: "1 <= p < infinity",
            })
        }
    }

    /// `p > 1`, so that the conjugate exponent is finite.
    pub fn above_one(p: f64) -> Result<Self> {
        if p.is_finite() && p > 1.0 {
            Ok(Self(p))
        } else {
            Err(Error::InvalidExponent {
                p,
                requirement: "1 < p < infinity",
            })
        }
    }

    #[inline]
    pub fn p(self) -> f64 {
        self.0
    }

    /// `q = p / (p - 1)`; infinite for `p = 1`, negative for `p < 1`.
    pub fn conjugate(self) -> f64 {
        self.0 / (self.0 - 1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_point_is_strict() {
        assert!(DiscPoint::from_real(0.999).is_ok());
        assert!(DiscPoint::from_real(1.0).is_err());
        assert!(DiscPoint::new(Complex64::new(0.8, 0.6)).is_err());
        assert!(DiscPoint::new(Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn weight_domain() {
        assert!(Weight::new(-1.0).is_err());
        assert!(Weight::new(-0.999).is_ok());
        assert!(Weight::new(f64::INFINITY).is_err());
    }

    #[test]
    fn conjugate_exponent() {
        let p = Exponent::above_one(2.0).unwrap();
        assert_eq!(p.conjugate(), 2.0);
        let p = Exponent::above_one(1.5).unwrap();
        assert!((p.conjugate() - 3.0).abs() < 1e-15);
        assert!(Exponent::above_one(1.0).is_err());
        assert!(Exponent::at_least_one(1.0).is_ok());
        assert!(Exponent::new(0.5).is_ok());
        assert!(Exponent::new(0.0).is_err());
    }
}
