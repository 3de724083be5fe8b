//! Analytic polynomials `f(z) = sum a_n z^n` and their coefficient-level identities.
//!
//! All norms use the normalized area measure `dm = dA / pi`, under which the
//! monomials satisfy `||z^n||^2 = 1 / (n + 1)` and `phi_n = sqrt(n + 1) z^n`
//! is an orthonormal basis of A^2.

use crate::disc::Weight;
use num_complex::Complex64;
use statrs::function::gamma::ln_gamma;
use std::ops::{Add, Mul, Neg, Sub};

/// Finite Taylor coefficient sequence `a_0, ..., a_N`.
///
/// Trailing zeros are trimmed on construction, so equality ignores them and
/// the zero polynomial is the empty sequence.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TaylorPoly {
    coeffs: Vec<Complex64>,
}

impl TaylorPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `c z^n`
    pub fn monomial(n: usize, c: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `a_n`, zero past the end.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation, valid anywhere in the plane.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// n-th derivative: the coefficient at `m - n` is `m (m-1) ... (m-n+1) a_m`.
    pub fn differentiate(&self, n: usize) -> Self {
        if n == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(n)
            .map(|(m, &a)| a * falling_factorial(m, n))
            .collect();
        Self::new(coeffs)
    }

    /// Truncation to the indices `0..=n`.
    pub fn partial_sum(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n + 1).copied().collect())
    }

    /// `f_rho(z) = f(rho z)`, i.e. `a_n -> a_n rho^n`.
    pub fn dilate(&self, rho: f64) -> Self {
        let mut scale = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let c = a * scale;
                scale *= rho;
                c
            })
            .collect();
        Self::new(coeffs)
    }

    /// Squared A^2 norm `sum |a_n|^2 / (n + 1)`.
    pub fn a2_norm_sq(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a.norm_sqr() / (n as f64 + 1.0))
            .sum()
    }

    /// `<f, phi_n> = a_n / sqrt(n + 1)` against the orthonormal basis.
    pub fn fourier_coeff(&self, n: usize) -> Complex64 {
        self.coeff(n) / (n as f64 + 1.0).sqrt()
    }
}

/// `m (m-1) ... (m-n+1)` as a float.
pub fn falling_factorial(m: usize, n: usize) -> f64 {
    (0..n).map(|k| (m - k) as f64).product()
}

/// `int |z^n|^2 dm_alpha = n! Gamma(alpha + 2) / Gamma(n + alpha + 2)`,
/// evaluated through log-Gamma so large `n` does not overflow.
pub fn weighted_monomial_norm_sq(n: usize, alpha: Weight) -> f64 {
    let a = alpha.alpha();
    let nf = n as f64;
    (ln_gamma(nf + 1.0) + ln_gamma(a + 2.0) - ln_gamma(nf + a + 2.0)).exp()
}

/// Taylor coefficient of `(1 - x)^-(alpha + 2)` at `x^n`:
/// `Gamma(n + alpha + 2) / (n! Gamma(alpha + 2))`.
pub fn kernel_series_coeff(n: usize, alpha: Weight) -> f64 {
    let a = alpha.alpha();
    let nf = n as f64;
    (ln_gamma(nf + a + 2.0) - ln_gamma(nf + 1.0) - ln_gamma(a + 2.0)).exp()
}

impl Add for &TaylorPoly {
    type Output = TaylorPoly;

    fn add(self, rhs: &TaylorPoly) -> TaylorPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TaylorPoly::new((0..len).map(|n| self.coeff(n) + rhs.coeff(n)).collect())
    }
}

impl Sub for &TaylorPoly {
    type Output = TaylorPoly;

    fn sub(self, rhs: &TaylorPoly) -> TaylorPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TaylorPoly::new((0..len).map(|n| self.coeff(n) - rhs.coeff(n)).collect())
    }
}

impl Neg for &TaylorPoly {
    type Output = TaylorPoly;

    fn neg(self) -> TaylorPoly {
        TaylorPoly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul<Complex64> for &TaylorPoly {
    type Output = TaylorPoly;

    fn mul(self, rhs: Complex64) -> TaylorPoly {
        TaylorPoly::new(self.coeffs.iter().map(|a| a * rhs).collect())
    }
}
