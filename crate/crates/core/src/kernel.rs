//! Bergman kernels, disc automorphisms and the kernel transformation law.
//!
//! Kernels here reproduce against the normalized measure `dm = dA / pi`.
//! The disc kernel for the weight `alpha` is `(1 - conj(w) z)^-(alpha + 2)`;
//! `1 - conj(w) z` has positive real part on the disc, so the principal
//! branch is used throughout.

use crate::disc::{DiscPoint, Weight};
use crate::error::{Error, Result};
use crate::poly::TaylorPoly;
use crate::quad::QuadRule;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// Kernel of the weighted Bergman space `A^2_alpha` of the disc.
pub fn k_disc(z: DiscPoint, zeta: DiscPoint, alpha: Weight) -> Complex64 {
    disc_kernel_value(z.value(), zeta.value(), alpha.alpha())
}

#[inline]
pub(crate) fn disc_kernel_value(z: Complex64, zeta: Complex64, alpha: f64) -> Complex64 {
    let base = Complex64::new(1.0, 0.0) - zeta.conj() * z;
    let order = alpha + 2.0;
    if order.fract() == 0.0 && order <= 64.0 {
        base.powi(-(order as i32))
    } else {
        base.powf(-order)
    }
}

/// Partial sum `sum_{n <= N} (n + 1)(z conj(zeta))^n` of the orthonormal
/// expansion of the unweighted kernel.
pub fn k_series(z: DiscPoint, zeta: DiscPoint, n: usize) -> Complex64 {
    let x = z.value() * zeta.value().conj();
    let mut power = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        sum += power * (k as f64 + 1.0);
        power *= x;
    }
    sum
}

/// The involution `phi_a(w) = (a - w) / (1 - conj(a) w)` and its derivative.
///
/// The derivative is `-(1 - |a|^2) / (1 - conj(a) w)^2`. It is sometimes
/// quoted without the minus sign; only `|phi_a'|` enters the metric identity
/// `1 - |phi_a(w)|^2 = |phi_a'(w)| (1 - |w|^2)`, which is unaffected.
pub fn mobius(a: DiscPoint, w: DiscPoint) -> (Complex64, Complex64) {
    let (a, w) = (a.value(), w.value());
    let den = Complex64::new(1.0, 0.0) - a.conj() * w;
    let value = (a - w) / den;
    let deriv = -(1.0 - a.norm_sqr()) / (den * den);
    (value, deriv)
}

/// A reproducing kernel evaluated at arbitrary points of its domain.
pub trait KernelFn: Sync {
    fn eval(&self, z: Complex64, zeta: Complex64) -> Result<Complex64>;
}

impl<K: KernelFn + ?Sized> KernelFn for &K {
    fn eval(&self, z: Complex64, zeta: Complex64) -> Result<Complex64> {
        (**self).eval(z, zeta)
    }
}

/// The closed-form kernel of `A^2_alpha(disc)`.
#[derive(Debug, Clone, Copy)]
pub struct DiscKernel {
    pub alpha: Weight,
}

impl DiscKernel {
    pub fn new(alpha: Weight) -> Self {
        Self { alpha }
    }

    pub fn unweighted() -> Self {
        Self::new(Weight::unweighted())
    }
}

impl KernelFn for DiscKernel {
    fn eval(&self, z: Complex64, zeta: Complex64) -> Result<Complex64> {
        Ok(disc_kernel_value(z, zeta, self.alpha.alpha()))
    }
}

/// A kernel normalized for plain area measure `dA`, i.e. the
/// normalized-measure kernel divided by `pi`.
#[derive(Debug, Clone, Copy)]
pub struct AreaMeasureKernel<K>(pub K);

pub fn area_measure_kernel<K: KernelFn>(k: K) -> AreaMeasureKernel<K> {
    AreaMeasureKernel(k)
}

impl<K: KernelFn> KernelFn for AreaMeasureKernel<K> {
    fn eval(&self, z: Complex64, zeta: Complex64) -> Result<Complex64> {
        Ok(self.0.eval(z, zeta)? / PI)
    }
}

type Holomorphic = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// A univalent map `psi` together with its derivative.
///
/// Construction compares the supplied derivative against a five-point
/// finite-difference estimate at probe points and rejects the pair if they
/// disagree by more than `1e-6` (relative to `max(1, |psi'|)`).
#[derive(Clone)]
pub struct DomainMap {
    name: String,
    map: Holomorphic,
    deriv: Holomorphic,
}

impl fmt::Debug for DomainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DomainMap").field("name", &self.name).finish_non_exhaustive()
    }
}

const DERIVATIVE_CHECK_TOL: f64 = 1e-6;

impl DomainMap {
    /// Map defined on the unit disc, probed at the origin and on the circles
    /// `|z| = 0.25, 0.5`.
    pub fn new<F, D>(name: impl Into<String>, map: F, deriv: D) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        D: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        let mut probes = vec![Complex64::new(0.0, 0.0)];
        for r in [0.25, 0.5] {
            probes.extend((0..8).map(|k| Complex64::from_polar(r, PI * k as f64 / 4.0 + 0.1)));
        }
        Self::with_probes(name, map, deriv, &probes)
    }

    /// Map defined on some other domain; `probes` must lie well inside it.
    pub fn with_probes<F, D>(name: impl Into<String>, map: F, deriv: D, probes: &[Complex64]) -> Result<Self>
    where
        F: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
        D: Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    {
        let out = Self {
            name: name.into(),
            map: Arc::new(map),
            deriv: Arc::new(deriv),
        };
        for &z in probes {
            out.check_derivative_at(z)?;
        }
        Ok(out)
    }

    fn check_derivative_at(&self, z: Complex64) -> Result<()> {
        let h = 1e-3 * z.norm().max(1.0);
        let f = |t: f64| (self.map)(z + t * h);
        let estimated = (f(-2.0) - 8.0 * f(-1.0) + 8.0 * f(1.0) - f(2.0)) / (12.0 * h);
        let supplied = (self.deriv)(z);
        if (estimated - supplied).norm() > DERIVATIVE_CHECK_TOL * supplied.norm().max(1.0) {
            return Err(Error::DerivativeMismatch {
                map: self.name.clone(),
                at: z,
                supplied,
                estimated,
            });
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `(psi(z), psi'(z))`, failing where the derivative vanishes.
    pub fn eval(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let d = (self.deriv)(z);
        if !(d.norm() > 0.0) {
            return Err(Error::DerivativeVanishes {
                map: self.name.clone(),
                at: z,
            });
        }
        Ok(((self.map)(z), d))
    }

    pub fn identity() -> Self {
        Self {
            name: "identity".into(),
            map: Arc::new(|z| z),
            deriv: Arc::new(|_| Complex64::new(1.0, 0.0)),
        }
    }

    /// `w -> -phi_a(w) = (w - a) / (1 - conj(a) w)`, the automorphism sending
    /// `a` to 0 with positive derivative there.
    pub fn automorphism(a: DiscPoint) -> Result<Self> {
        let a = a.value();
        let s = 1.0 - a.norm_sqr();
        Self::new(
            format!("automorphism({a})"),
            move |w| (w - a) / (1.0 - a.conj() * w),
            move |w| {
                let den = 1.0 - a.conj() * w;
                s / (den * den)
            },
        )
    }

    /// `psi(z) = (i (1 + z) / (1 - z))^2`, mapping the disc onto the plane
    /// slit along `[0, inf)`.
    pub fn slit_plane() -> Result<Self> {
        let one = Complex64::new(1.0, 0.0);
        Self::new(
            "slit-plane",
            move |z| {
                let s = Complex64::i() * (one + z) / (one - z);
                s * s
            },
            move |z| -4.0 * (one + z) / (one - z).powi(3),
        )
    }

    /// Inverse of [`DomainMap::slit_plane`], defined on `C \ [0, inf)`.
    pub fn slit_plane_inverse() -> Result<Self> {
        let i = Complex64::i();
        let forward = Self::slit_plane()?;
        let probes: Vec<Complex64> = [0.0, 0.3, 0.5]
            .iter()
            .flat_map(|&r| (0..6).map(move |k| Complex64::from_polar(r, PI * k as f64 / 3.0 + 0.2)))
            .map(|z| (forward.map)(z))
            .collect();
        Self::with_probes(
            "slit-plane-inverse",
            move |w| {
                let s = i * (-w).sqrt();
                (s - i) / (s + i)
            },
            move |w| {
                let root = (-w).sqrt();
                let s = i * root;
                1.0 / (root * (s + i) * (s + i))
            },
            &probes,
        )
    }
}

/// Kernel transformation law: for `psi: D -> Omega` univalent with target
/// kernel `J`, the kernel of `D` is `J(psi(z), psi(zeta)) psi'(z) conj(psi'(zeta))`.
pub fn pullback_kernel<K: KernelFn + ?Sized>(map: &DomainMap, target: &K, z: Complex64, zeta: Complex64) -> Result<Complex64> {
    let (pz, dz) = map.eval(z)?;
    let (pw, dw) = map.eval(zeta)?;
    Ok(target.eval(pz, pw)? * dz * dw.conj())
}

/// [`pullback_kernel`] packaged as a kernel of the source domain.
#[derive(Debug, Clone)]
pub struct Pullback<K> {
    pub map: DomainMap,
    pub target: K,
}

impl<K: KernelFn> KernelFn for Pullback<K> {
    fn eval(&self, z: Complex64, zeta: Complex64) -> Result<Complex64> {
        pullback_kernel(&self.map, &self.target, z, zeta)
    }
}

const DIAGONAL_TOL: f64 = 1e-10;

fn positive_diagonal<K: KernelFn + ?Sized>(kernel: &K, base: Complex64) -> Result<f64> {
    let diag = kernel.eval(base, base)?;
    if diag.re > 0.0 && diag.im.abs() <= DIAGONAL_TOL * diag.re.max(1.0) {
        Ok(diag.re)
    } else {
        Err(Error::DiagonalNotPositive(diag))
    }
}

/// Derivative of the Riemann map `phi` of a simply connected domain onto the
/// disc normalized by `phi(base) = 0`, `phi'(base) > 0`:
/// `phi'(z) = K(z, base) / sqrt(K(base, base))` for a normalized-measure kernel.
pub fn riemann_deriv<K: KernelFn + ?Sized>(kernel: &K, base: Complex64, z: Complex64) -> Result<Complex64> {
    let diag = positive_diagonal(kernel, base)?;
    Ok(kernel.eval(z, base)? / diag.sqrt())
}

/// Same derivative for a kernel normalized against plain area measure:
/// `sqrt(pi / K(base, base)) K(z, base)`.
pub fn riemann_deriv_area_measure<K: KernelFn + ?Sized>(kernel: &K, base: Complex64, z: Complex64) -> Result<Complex64> {
    let diag = positive_diagonal(kernel, base)?;
    Ok((PI / diag).sqrt() * kernel.eval(z, base)?)
}

/// `int |f(psi(z)) psi'(z)|^2 dm(z)` over the disc, which equals the squared
/// A^2 norm of `f` over the image domain.
pub fn transported_norm_sq(map: &DomainMap, f: &TaylorPoly, rule: &QuadRule) -> Result<f64> {
    rule.check_alpha(Weight::unweighted())?;
    let values = rule
        .nodes()
        .map(|(z, _)| map.eval(z.value()).map(|(w, d)| (f.eval(w) * d).norm_sqr()))
        .collect::<Result<Vec<f64>>>()?;
    Ok(rule.integrate_real_samples(&values))
}
