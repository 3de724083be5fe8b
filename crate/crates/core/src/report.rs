//! Structured results of numerical checks.

use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// An observed or expected value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    Real(f64),
    Complex(Complex64),
    Bool(bool),
    /// An integral known to diverge; never carried as a float infinity.
    Divergent,
}

impl Quantity {
    fn distance(&self, other: &Quantity) -> Option<f64> {
        use Quantity::*;
        match (self, other) {
            (Real(a), Real(b)) => Some((a - b).abs()),
            (Complex(a), Complex(b)) => Some((a - b).norm()),
            (Real(a), Complex(b)) | (Complex(b), Real(a)) => Some((Complex64::new(*a, 0.0) - b).norm()),
            (Bool(a), Bool(b)) => Some(if a == b { 0.0 } else { f64::INFINITY }),
            (Divergent, Divergent) => Some(0.0),
            _ => None,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Real(x) => write!(f, "{x}"),
            Quantity::Complex(z) => write!(f, "{}{:+}i", z.re, z.im),
            Quantity::Bool(b) => write!(f, "{b}"),
            Quantity::Divergent => f.write_str("divergent"),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Quantity::Real(x) => s.serialize_f64(*x),
            Quantity::Complex(z) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("re", &z.re)?;
                m.serialize_entry("im", &z.im)?;
                m.end()
            }
            Quantity::Bool(b) => s.serialize_bool(*b),
            Quantity::Divergent => s.serialize_str("divergent"),
        }
    }
}

impl From<f64> for Quantity {
    fn from(x: f64) -> Self {
        Quantity::Real(x)
    }
}

impl From<Complex64> for Quantity {
    fn from(z: Complex64) -> Self {
        Quantity::Complex(z)
    }
}

impl From<bool> for Quantity {
    fn from(b: bool) -> Self {
        Quantity::Bool(b)
    }
}

/// What an observation is compared against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expected {
    Value(Quantity),
    /// Pass when `observed <= bound + tol`.
    Bound(f64),
    /// Plain computation; passes whenever the observation is finite.
    None,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Value(q) => q.fmt(f),
            Expected::Bound(b) => write!(f, "<= {b}"),
            Expected::None => f.write_str("-"),
        }
    }
}

impl Serialize for Expected {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Expected::Value(q) => q.serialize(s),
            Expected::Bound(b) => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("bound", b)?;
                m.end()
            }
            Expected::None => s.serialize_none(),
        }
    }
}

/// One numerical verification. `pass` is derived from the other fields at
/// construction and cannot drift from them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "check")]
    name: String,
    params: BTreeMap<String, String>,
    observed: Quantity,
    expected: Expected,
    #[serde(rename = "tol")]
    tolerance: f64,
    pass: bool,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, observed: impl Into<Quantity>, expected: Expected, tolerance: f64) -> Self {
        let observed = observed.into();
        let pass = match (&observed, &expected) {
            (obs, Expected::Value(exp)) => obs.distance(exp).is_some_and(|d| d <= tolerance),
            (Quantity::Real(obs), Expected::Bound(b)) => *obs <= b + tolerance,
            (_, Expected::Bound(_)) => false,
            (Quantity::Real(x), Expected::None) => x.is_finite(),
            (Quantity::Complex(z), Expected::None) => z.re.is_finite() && z.im.is_finite(),
            (_, Expected::None) => true,
        };
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            observed,
            expected,
            tolerance,
            pass,
        }
    }

    pub fn value(name: impl Into<String>, observed: impl Into<Quantity>, expected: impl Into<Quantity>, tol: f64) -> Self {
        Self::new(name, observed, Expected::Value(expected.into()), tol)
    }

    pub fn bound(name: impl Into<String>, observed: f64, bound: f64, tol: f64) -> Self {
        Self::new(name, observed, Expected::Bound(bound), tol)
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    /// Records the quadrature or grid resolution under the `rule` key.
    pub fn resolution(self, res: impl ToString) -> Self {
        self.param("rule", res)
    }

    /// Forces a failure, e.g. when a side condition of the check was violated.
    pub fn fail(mut self, reason: impl ToString) -> Self {
        self.pass = false;
        self.param("failure", reason)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn observed(&self) -> Quantity {
        self.observed
    }

    pub fn expected(&self) -> Expected {
        self.expected
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn passed(&self) -> bool {
        self.pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}", self.name)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        write!(f, " observed={} expected={} tol={:e}", self.observed, self.expected, self.tolerance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rules() {
        assert!(CheckReport::value("a", 1.0, 1.0 + 1e-12, 1e-10).passed());
        assert!(!CheckReport::value("a", 1.0, 1.1, 1e-10).passed());
        assert!(!CheckReport::value("a", f64::NAN, 1.0, 1e-10).passed());
        assert!(CheckReport::bound("b", 0.5, 0.5, 0.0).passed());
        assert!(!CheckReport::bound("b", 0.6, 0.5, 1e-9).passed());
        assert!(CheckReport::value("c", Quantity::Divergent, Quantity::Divergent, 0.0).passed());
        assert!(!CheckReport::value("c", Quantity::Divergent, 1.0, 1e300).passed());
        assert!(!CheckReport::value("d", true, false, 0.0).passed());
    }

    #[test]
    fn forced_failure_is_recorded() {
        let r = CheckReport::value("a", 1.0, 1.0, 0.0).fail("guard");
        assert!(!r.passed());
        assert_eq!(r.params()["failure"], "guard");
    }
}
