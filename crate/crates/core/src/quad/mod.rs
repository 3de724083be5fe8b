//! Tensor quadrature on the unit disc against `dm_alpha`.
//!
//! In polar form `dm = r dr dtheta / pi`. Substituting `u = r^2` gives
//! `dm_alpha = (alpha + 1)(1 - u)^alpha du dtheta / (2 pi)`, so the radial
//! factor is a Gauss-Jacobi rule on `u` in `[0, 1]` with the weight absorbed,
//! and the angular factor is the equispaced trapezoid rule.
//!
//! A rule with `R` radial and `M` angular nodes integrates
//! `z^n conj(z)^m` exactly when `n, m <= min(2R - 1, M - 1)`.

mod jacobi;

pub use jacobi::gauss_jacobi;

use crate::disc::{DiscPoint, Weight};
use crate::error::{Error, Result};
use crate::poly::TaylorPoly;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Minimum angular nodes per unit of `1 / (1 - |z|)` for kernel-weighted integrands.
pub const ANGULAR_GUARD_FACTOR: f64 = 50.0;

/// Regularity hint attached to a sampled function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    Bounded,
    BoundarySingular,
}

/// A deterministic complex-valued function on the open disc.
pub trait Samplable: Sync {
    fn eval(&self, z: DiscPoint) -> Complex64;

    fn smoothness(&self) -> Smoothness {
        Smoothness::Smooth
    }
}

impl<F> Samplable for F
where
    F: Fn(Complex64) -> Complex64 + Sync + ?Sized,
{
    fn eval(&self, z: DiscPoint) -> Complex64 {
        self(z.value())
    }
}

impl Samplable for TaylorPoly {
    fn eval(&self, z: DiscPoint) -> Complex64 {
        TaylorPoly::eval(self, z.value())
    }
}

/// Wraps a closure with an explicit smoothness hint.
pub struct Hinted<F> {
    pub f: F,
    pub hint: Smoothness,
}

impl<F: Fn(Complex64) -> Complex64 + Sync> Samplable for Hinted<F> {
    fn eval(&self, z: DiscPoint) -> Complex64 {
        (self.f)(z.value())
    }

    fn smoothness(&self) -> Smoothness {
        self.hint
    }
}

/// Number of radial and angular nodes, written `RxM`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Resolution {
    pub radial: usize,
    pub angular: usize,
}

impl Resolution {
    pub const fn new(radial: usize, angular: usize) -> Self {
        Self { radial, angular }
    }

    pub fn doubled(self) -> Self {
        Self::new(2 * self.radial, 2 * self.angular)
    }
}

impl Default for Resolution {
    fn default() -> Self {
        Self::new(64, 256)
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.radial, self.angular)
    }
}

impl FromStr for Resolution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRule(format!("expected RADIALxANGULAR, got '{s}'"));
        let (r, m) = s.split_once('x').ok_or_else(bad)?;
        let radial = r.parse().map_err(|_| bad())?;
        let angular = m.parse().map_err(|_| bad())?;
        if radial == 0 || angular == 0 {
            return Err(bad());
        }
        Ok(Self::new(radial, angular))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialNode {
    pub r: f64,
    /// Share of the total mass carried by the whole ring; sums to 1.
    pub weight: f64,
}

/// Radial Gauss-Jacobi nodes crossed with an equispaced angular grid.
#[derive(Debug, Clone)]
pub struct QuadRule {
    radial: Vec<RadialNode>,
    angular_count: usize,
    alpha: Weight,
    unit: Vec<Complex64>,
}

impl QuadRule {
    pub fn build(radial_count: usize, angular_count: usize, alpha: Weight) -> Result<Self> {
        if radial_count == 0 || angular_count == 0 {
            return Err(Error::InvalidRule(format!(
                "counts must be positive, got {radial_count}x{angular_count}"
            )));
        }
        let a = alpha.alpha();
        let (x, w) = gauss_jacobi(radial_count, a, 0.0);
        // u = (1 + x) / 2 and int_0^1 (1 - u)^a du = 1 / (a + 1)
        let scale = (a + 1.0) / 2f64.powf(a + 1.0);
        let radial = x
            .iter()
            .zip(&w)
            .map(|(&x, &w)| RadialNode {
                r: (0.5 * (1.0 + x)).sqrt(),
                weight: w * scale,
            })
            .collect();
        let unit = (0..angular_count)
            .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / angular_count as f64))
            .collect();
        Ok(Self {
            radial,
            angular_count,
            alpha,
            unit,
        })
    }

    pub fn with_resolution(res: Resolution, alpha: Weight) -> Result<Self> {
        Self::build(res.radial, res.angular, alpha)
    }

    /// Rule whose angular count also satisfies the guard for evaluation at `z`.
    pub fn resolved_for(res: Resolution, alpha: Weight, z: DiscPoint) -> Result<Self> {
        Self::build(res.radial, res.angular.max(angular_guard(z)), alpha)
    }

    pub fn radial_nodes(&self) -> &[RadialNode] {
        &self.radial
    }

    pub fn radial_count(&self) -> usize {
        self.radial.len()
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    pub fn alpha(&self) -> Weight {
        self.alpha
    }

    pub fn resolution(&self) -> Resolution {
        Resolution::new(self.radial.len(), self.angular_count)
    }

    pub fn len(&self) -> usize {
        self.radial.len() * self.angular_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest `D` with `z^n conj(z)^m` integrated exactly for `n, m <= D`.
    pub fn exactness_degree(&self) -> usize {
        (2 * self.radial.len() - 1).min(self.angular_count - 1)
    }

    /// Node `j` of ring `i`.
    #[inline]
    pub fn node(&self, ring: usize, j: usize) -> DiscPoint {
        DiscPoint::new_unchecked(self.unit[j] * self.radial[ring].r)
    }

    /// All nodes with their individual weights, ring-major.
    pub fn nodes(&self) -> impl Iterator<Item = (DiscPoint, f64)> + '_ {
        let m = self.angular_count as f64;
        self.radial.iter().flat_map(move |ring| {
            self.unit
                .iter()
                .map(move |u| (DiscPoint::new_unchecked(u * ring.r), ring.weight / m))
        })
    }

    pub fn total_weight(&self) -> f64 {
        self.radial.iter().map(|n| n.weight).sum()
    }

    pub(crate) fn check_alpha(&self, alpha: Weight) -> Result<()> {
        if self.alpha != alpha {
            return Err(Error::WeightMismatch {
                rule: self.alpha.alpha(),
                requested: alpha.alpha(),
            });
        }
        Ok(())
    }

    /// Error unless the angular count satisfies the guard for `z`.
    pub fn check_resolved_for(&self, z: DiscPoint) -> Result<()> {
        let required = angular_guard(z);
        if self.angular_count < required {
            return Err(Error::UnderResolved {
                modulus: z.modulus(),
                required,
                actual: self.angular_count,
            });
        }
        Ok(())
    }

    /// Samples of `f` at every node, ring-major; fails on the first
    /// non-finite value.
    pub fn sample<S: Samplable + ?Sized>(&self, f: &S) -> Result<Vec<Complex64>> {
        let rings: Vec<Result<Vec<Complex64>>> = (0..self.radial.len())
            .into_par_iter()
            .map(|i| {
                (0..self.angular_count)
                    .map(|j| {
                        let v = f.eval(self.node(i, j));
                        self.finite(i, j, v)
                    })
                    .collect()
            })
            .collect();
        let mut out = Vec::with_capacity(self.len());
        for ring in rings {
            out.extend(ring?);
        }
        Ok(out)
    }

    /// Weighted sum of precomputed ring-major samples.
    pub fn integrate_samples(&self, samples: &[Complex64]) -> Complex64 {
        assert_eq!(samples.len(), self.len(), "sample count does not match rule");
        let m = self.angular_count;
        let mf = m as f64;
        samples
            .chunks_exact(m)
            .zip(&self.radial)
            .map(|(ring, node)| ring.iter().sum::<Complex64>() * (node.weight / mf))
            .sum()
    }

    /// Weighted sum of real ring-major samples.
    pub fn integrate_real_samples(&self, samples: &[f64]) -> f64 {
        assert_eq!(samples.len(), self.len(), "sample count does not match rule");
        let m = self.angular_count;
        let mf = m as f64;
        samples
            .chunks_exact(m)
            .zip(&self.radial)
            .map(|(ring, node)| ring.iter().sum::<f64>() * (node.weight / mf))
            .sum()
    }

    fn finite(&self, ring: usize, j: usize, v: Complex64) -> Result<Complex64> {
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteSample {
                r: self.radial[ring].r,
                theta: 2.0 * PI * j as f64 / self.angular_count as f64,
                value: v,
            })
        }
    }
}

/// `ceil(50 / (1 - |z|))`, the angular count needed to resolve the kernel peak at `z`.
pub fn angular_guard(z: DiscPoint) -> usize {
    // slack so that e.g. |z| = 0.8 gives 250 rather than 251 after round-off
    (ANGULAR_GUARD_FACTOR / (1.0 - z.modulus()) - 1e-9).ceil() as usize
}

/// `int f dm_alpha` with the rule's weight. Rings are evaluated in parallel
/// and reduced in ring order, so results are bit-identical across runs.
pub fn integrate<S: Samplable + ?Sized>(f: &S, rule: &QuadRule) -> Result<Complex64> {
    let mf = rule.angular_count as f64;
    let rings: Vec<Result<Complex64>> = (0..rule.radial.len())
        .into_par_iter()
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..rule.angular_count {
                acc += rule.finite(i, j, f.eval(rule.node(i, j)))?;
            }
            Ok(acc * (rule.radial[i].weight / mf))
        })
        .collect();
    rings.into_iter().sum()
}

/// Real-valued variant of [`integrate`].
pub fn integrate_real<F>(f: F, rule: &QuadRule) -> Result<f64>
where
    F: Fn(DiscPoint) -> f64 + Sync,
{
    let mf = rule.angular_count as f64;
    let rings: Vec<Result<f64>> = (0..rule.radial.len())
        .into_par_iter()
        .map(|i| {
            let mut acc = 0.0;
            for j in 0..rule.angular_count {
                let v = f(rule.node(i, j));
                if !v.is_finite() {
                    return Err(Error::NonFiniteSample {
                        r: rule.radial[i].r,
                        theta: 2.0 * PI * j as f64 / mf,
                        value: Complex64::new(v, 0.0),
                    });
                }
                acc += v;
            }
            Ok(acc * (rule.radial[i].weight / mf))
        })
        .collect();
    rings.into_iter().sum()
}

/// `(int |f|^p dm_alpha)^(1/p)` by quadrature.
pub fn lp_norm<S: Samplable + ?Sized>(f: &S, p: f64, rule: &QuadRule) -> Result<f64> {
    let s = integrate_real(|z| f.eval(z).norm().powf(p), rule)?;
    Ok(s.powf(1.0 / p))
}
