//! Numerical checks of growth estimates, integral means, norm convergence
//! and the Schur test for the weighted projections.
//!
//! Constants that are only known to exist (the Forelli-Rudin constant, the
//! Schur constants) are computed and reported, never compared against a
//! fixed number.

use crate::disc::{DiscPoint, Exponent, Weight};
use crate::error::{Error, Result};
use crate::poly::TaylorPoly;
use crate::projection::MixedPoly;
use crate::quad::{integrate_real, lp_norm, QuadRule, Resolution, Samplable};
use crate::report::{CheckReport, Expected};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Radii of the fixed polar grid used for supremum-type checks.
pub const SUPREMUM_RADII: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 0.9, 0.95];
/// Angles per nonzero radius of the supremum grid.
pub const SUPREMUM_ANGLES: usize = 16;

fn polar_grid(radii: &[f64], angles: usize) -> Vec<DiscPoint> {
    let mut out = Vec::new();
    for &r in radii {
        if r == 0.0 {
            out.push(DiscPoint::origin());
            continue;
        }
        for k in 0..angles {
            out.push(DiscPoint::new_unchecked(Complex64::from_polar(r, 2.0 * PI * k as f64 / angles as f64)));
        }
    }
    out
}

/// The origin plus 16 equally spaced angles on each radius of [`SUPREMUM_RADII`].
pub fn supremum_grid() -> Vec<DiscPoint> {
    polar_grid(&SUPREMUM_RADII, SUPREMUM_ANGLES)
}

/// A finer grid with the same outer radius, used for refinement studies.
pub fn refined_supremum_grid() -> Vec<DiscPoint> {
    let radii: Vec<f64> = (0..=19).map(|k| 0.05 * k as f64).chain([0.9, 0.95]).collect();
    polar_grid(&radii, 2 * SUPREMUM_ANGLES)
}

/// Pointwise growth of `A^p` functions and their derivatives:
/// `|f(z)| <= (1 - |z|)^(-2/p) ||f||_p` and, for `n >= 1`,
/// `|f^(n)(z)| <= n! 2^n 2^(2/p) (1 - |z|)^-(n + 1 + 2/p) ||f||_p`.
///
/// Observed is `max_z |f^(n)(z)| (1 - |z|)^e / C - ||f||_p` over `grid`,
/// which must not exceed zero beyond `1e-9`. The norm is taken against the
/// unweighted `rule`.
pub fn growth_check(f: &TaylorPoly, p: Exponent, n: usize, grid: &[DiscPoint], rule: &QuadRule) -> Result<CheckReport> {
    rule.check_alpha(Weight::unweighted())?;
    let pp = p.p();
    let (exponent, constant) = if n == 0 {
        (2.0 / pp, 1.0)
    } else {
        let n_fact: f64 = (1..=n).map(|k| k as f64).product();
        (n as f64 + 1.0 + 2.0 / pp, n_fact * 2f64.powi(n as i32) * 2f64.powf(2.0 / pp))
    };
    let deriv = f.differentiate(n);
    let scaled = grid
        .iter()
        .map(|z| deriv.eval(z.value()).norm() * (1.0 - z.modulus()).powf(exponent) / constant)
        .fold(0.0, f64::max);
    let norm = lp_norm(f, pp, rule)?;
    Ok(CheckReport::bound("growth", scaled - norm, 0.0, 1e-9)
        .param("n", n)
        .param("p", pp)
        .param("grid_points", grid.len())
        .resolution(rule.resolution()))
}

/// `int (1 - |w|^2)^(t - 2) |1 - conj(z) w|^(-s) dm(w)` and its ratio to
/// `(1 - |z|^2)^(t - s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForelliRudin {
    pub integral: f64,
    pub ratio: f64,
}

/// Evaluates the Forelli-Rudin integral with the factor `(1 - |w|^2)^(t - 2)`
/// absorbed into a rule of weight `t - 2`, widened to the angular guard at `z`.
pub fn forelli_rudin(z: DiscPoint, s: f64, t: f64, res: Resolution) -> Result<ForelliRudin> {
    if !(1.0 < t && t < s) {
        return Err(Error::InvalidParameter(format!("need 1 < t < s, got s = {s}, t = {t}")));
    }
    let rule = QuadRule::resolved_for(res, Weight::new(t - 2.0)?, z)?;
    let zc = z.value().conj();
    let weighted = integrate_real(|w| (1.0 - zc * w.value()).norm().powf(-s), &rule)?;
    // dm_{t-2} = (t - 1)(1 - |w|^2)^(t - 2) dm
    let integral = weighted / (t - 1.0);
    let ratio = integral / (1.0 - z.value().norm_sqr()).powf(t - s);
    Ok(ForelliRudin { integral, ratio })
}

/// `(1/pi) int_0^{2pi} |f(r e^{i theta})|^p d theta` by the `m`-point trapezoid rule.
pub fn integral_mean<S: Samplable + ?Sized>(f: &S, r: f64, p: Exponent, m: usize) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidParameter(format!("radius must lie in [0, 1), got {r}")));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("angular count must be positive".into()));
    }
    let sum: f64 = (0..m)
        .map(|j| {
            let z = DiscPoint::new_unchecked(Complex64::from_polar(r, 2.0 * PI * j as f64 / m as f64));
            f.eval(z).norm().powf(p.p())
        })
        .sum();
    Ok(2.0 * sum / m as f64)
}

/// `||f - S_N f||^2` in `A^2`, where `S_N` truncates after degree `N`.
pub fn tail_error(f: &TaylorPoly, n: usize) -> f64 {
    (f - &f.partial_sum(n)).a2_norm_sq()
}

/// Compares [`tail_error`] with `||f||^2 - sum_{k <= N} |a_k|^2 / (k + 1)`.
pub fn tail_identity(f: &TaylorPoly, n: usize) -> CheckReport {
    let head: f64 = (0..=n).map(|k| f.coeff(k).norm_sqr() / (k as f64 + 1.0)).sum();
    CheckReport::value("tail", tail_error(f, n), f.a2_norm_sq() - head, 1e-12).param("N", n)
}

/// `||f - f_rho||_p^p` by quadrature, with `f_rho(z) = f(rho z)`.
pub fn dilation_error(f: &TaylorPoly, rho: f64, p: Exponent, rule: &QuadRule) -> Result<f64> {
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::InvalidParameter(format!("rho must lie in (0, 1), got {rho}")));
    }
    require_at_least_one(p)?;
    rule.check_alpha(Weight::unweighted())?;
    let diff = f - &f.dilate(rho);
    let pp = p.p();
    integrate_real(|z| diff.eval(z.value()).norm().powf(pp), rule)
}

/// `int (1 - |z|^2)^(n p) |f^(n)(z)|^p dm(z)` by quadrature.
pub fn deriv_seminorm(f: &TaylorPoly, n: usize, p: Exponent, rule: &QuadRule) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("derivative order must be at least 1".into()));
    }
    require_at_least_one(p)?;
    rule.check_alpha(Weight::unweighted())?;
    let deriv = f.differentiate(n);
    let pp = p.p();
    let np = n as f64 * pp;
    integrate_real(
        |z| (1.0 - z.value().norm_sqr()).powf(np) * deriv.eval(z.value()).norm().powf(pp),
        rule,
    )
}

fn require_at_least_one(p: Exponent) -> Result<()> {
    if p.p() < 1.0 {
        return Err(Error::InvalidExponent {
            p: p.p(),
            requirement: "p >= 1",
        });
    }
    Ok(())
}

/// Auxiliary function of the Schur test.
pub enum Auxiliary {
    /// `h(z) = (1 - |z|^2)^e`. Its powers are folded into the quadrature
    /// weight, so boundary singularities of `h^q` cost nothing.
    RadialPower(f64),
    /// Any positive function, sampled directly.
    Function(Box<dyn Samplable + Send>),
}

impl std::fmt::Debug for Auxiliary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Auxiliary::RadialPower(e) => write!(f, "RadialPower({e})"),
            Auxiliary::Function(_) => f.write_str("Function(..)"),
        }
    }
}

impl Auxiliary {
    fn eval(&self, z: DiscPoint) -> f64 {
        match self {
            Auxiliary::RadialPower(e) => (1.0 - z.value().norm_sqr()).powf(*e),
            Auxiliary::Function(h) => h.eval(z).re,
        }
    }

    fn check_positive(&self, at: DiscPoint) -> Result<f64> {
        let v = match self {
            Auxiliary::RadialPower(_) => self.eval(at),
            Auxiliary::Function(h) => {
                let c = h.eval(at);
                if c.im != 0.0 {
                    f64::NAN
                } else {
                    c.re
                }
            }
        };
        if v > 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonPositiveAuxiliary { at: at.value(), value: v })
        }
    }
}

/// Data of the Schur test for an integral operator on `L^p(mu)` with
/// `d mu = (1 - |w|^2)^alpha dm`.
#[derive(Debug)]
pub struct SchurParams {
    pub p: Exponent,
    pub h: Auxiliary,
    pub mu_weight: Weight,
}

impl SchurParams {
    /// Requires `p > 1`.
    pub fn new(p: Exponent, h: Auxiliary, mu_weight: Weight) -> Result<Self> {
        if p.p() <= 1.0 {
            return Err(Error::InvalidExponent {
                p: p.p(),
                requirement: "p > 1",
            });
        }
        Ok(Self { p, h, mu_weight })
    }

    /// The choice `h(z) = (1 - |z|^2)^(-1/(pq))` used for `P_alpha`.
    pub fn for_projection(alpha: Weight, p: Exponent) -> Result<Self> {
        let q = p.conjugate();
        Self::new(p, Auxiliary::RadialPower(-1.0 / (p.p() * q)), alpha)
    }
}

/// `|1 - conj(y) x|^-(alpha + 2)`, the modulus of the weighted disc kernel.
pub fn projection_kernel_modulus(alpha: Weight) -> impl Fn(Complex64, Complex64) -> f64 + Sync {
    let order = alpha.alpha() + 2.0;
    move |x, y| (1.0 - y.conj() * x).norm().powf(-order)
}

/// Constants found by the Schur test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchurConstants {
    /// `max_x int K(x, y) h(y)^q d mu(y) / h(x)^q` over the grid.
    pub c_a: f64,
    /// `max_y int K(x, y) h(x)^p d mu(x) / h(y)^p` over the grid.
    pub c_b: f64,
    /// `C_a^(1/q) C_b^(1/p)`, a bound for the integral operator on `L^p(mu)`.
    pub operator_bound: f64,
    /// `(alpha + 1) C_a^(1/q) C_b^(1/p)`. When `K` is the kernel modulus of
    /// `P_alpha`, this bounds `P_alpha` on `L^p(dm_alpha)`.
    pub projection_bound: f64,
}

/// One side of the test: `max_x int K(x, y) h(y)^s d mu(y) / h(x)^s`, or the
/// transposed integral when `transpose` is set.
fn schur_side<K>(kernel: &K, params: &SchurParams, s: f64, transpose: bool, res: Resolution, grid: &[DiscPoint]) -> Result<f64>
where
    K: Fn(Complex64, Complex64) -> f64 + Sync,
{
    let alpha = params.mu_weight.alpha();
    let guard_at = grid
        .iter()
        .copied()
        .max_by(|a, b| a.modulus().total_cmp(&b.modulus()))
        .unwrap_or_else(DiscPoint::origin);
    // int g d mu = int g (1 - |w|^2)^alpha dm = int g dm_beta / (beta + 1)
    let (beta, fold) = match params.h {
        Auxiliary::RadialPower(e) => (alpha + e * s, true),
        Auxiliary::Function(_) => (alpha, false),
    };
    let rule = QuadRule::resolved_for(res, Weight::new(beta)?, guard_at)?;
    let h_nodes: Vec<f64> = if fold {
        Vec::new()
    } else {
        rule.nodes().map(|(y, _)| params.h.check_positive(y).map(|v| v.powf(s))).collect::<Result<_>>()?
    };
    let scale = 1.0 / (beta + 1.0);
    let values: Vec<Result<f64>> = grid
        .par_iter()
        .map(|&x| {
            let hx = params.h.check_positive(x)?.powf(s);
            let mut samples = Vec::with_capacity(rule.len());
            for (idx, (y, _)) in rule.nodes().enumerate() {
                let k = if transpose { kernel(y.value(), x.value()) } else { kernel(x.value(), y.value()) };
                if !(k >= 0.0) || !k.is_finite() {
                    let (a, b) = if transpose { (y, x) } else { (x, y) };
                    return Err(Error::NegativeKernel {
                        x: a.value(),
                        y: b.value(),
                        value: k,
                    });
                }
                samples.push(if fold { k } else { k * h_nodes[idx] });
            }
            Ok(scale * rule.integrate_real_samples(&samples) / hx)
        })
        .collect();
    let mut best: f64 = 0.0;
    for v in values {
        best = best.max(v?);
    }
    Ok(best)
}

/// Runs both conditions of the Schur test for a nonnegative kernel.
pub fn schur_constants<K>(kernel: &K, params: &SchurParams, res: Resolution, grid: &[DiscPoint]) -> Result<SchurConstants>
where
    K: Fn(Complex64, Complex64) -> f64 + Sync,
{
    let p = params.p.p();
    let q = params.p.conjugate();
    let c_a = schur_side(kernel, params, q, false, res, grid)?;
    let c_b = schur_side(kernel, params, p, true, res, grid)?;
    let operator_bound = c_a.powf(1.0 / q) * c_b.powf(1.0 / p);
    Ok(SchurConstants {
        c_a,
        c_b,
        operator_bound,
        projection_bound: (params.mu_weight.alpha() + 1.0) * operator_bound,
    })
}

/// [`schur_constants`] as a report. Passes when both constants are finite;
/// observed is the projection bound.
pub fn schur_report<K>(kernel: &K, params: &SchurParams, res: Resolution, grid: &[DiscPoint]) -> Result<CheckReport>
where
    K: Fn(Complex64, Complex64) -> f64 + Sync,
{
    let c = schur_constants(kernel, params, res, grid)?;
    let mut report = CheckReport::new("schur", c.projection_bound, Expected::None, 0.0)
        .param("alpha", params.mu_weight.alpha())
        .param("p", params.p.p())
        .param("h", format!("{:?}", params.h))
        .param("C_a", c.c_a)
        .param("C_b", c.c_b)
        .param("operator_bound", c.operator_bound)
        .param("grid_points", grid.len())
        .resolution(res);
    if !(c.c_a.is_finite() && c.c_b.is_finite()) {
        report = report.fail("non-finite Schur constant");
    }
    Ok(report)
}

/// `||P_alpha f||_p / ||f||_p` in `L^p(dm_alpha)` for a mixed polynomial,
/// using the exact image of `P_alpha` and quadrature norms.
pub fn projection_ratio(f: &MixedPoly, p: Exponent, rule: &QuadRule) -> Result<f64> {
    let projected = f.project_exact(rule.alpha());
    let num = lp_norm(&projected, p.p(), rule)?;
    let den = lp_norm(f, p.p(), rule)?;
    Ok(num / den)
}

/// `(alpha + 1)^q int_0^1 (1 - u)^(alpha q) du`, the `q`-th power of the
/// `L^q(dm)` norm of `P_alpha^* 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Divergence {
    Finite(f64),
    Divergent,
}

impl Divergence {
    pub fn is_finite(&self) -> bool {
        matches!(self, Divergence::Finite(_))
    }
}

/// Closed form of the integral: finite exactly when `alpha q > -1`.
pub fn adjoint_divergence_witness(alpha: Weight, q: Exponent) -> Result<Divergence> {
    let qq = q.p();
    if qq <= 1.0 {
        return Err(Error::InvalidExponent {
            p: qq,
            requirement: "q > 1",
        });
    }
    let a = alpha.alpha();
    let e = a * qq;
    Ok(if e > -1.0 {
        Divergence::Finite((a + 1.0).powf(qq) / (e + 1.0))
    } else {
        Divergence::Divergent
    })
}
