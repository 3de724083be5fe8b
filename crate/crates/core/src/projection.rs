//! Weighted Bergman projections `P_alpha`, their adjoints, and related
//! reproducing formulas.
//!
//! `P_alpha f(z) = int f(w) (1 - conj(w) z)^-(alpha + 2) dm_alpha(w)` is
//! evaluated pointwise: each evaluation point gets its own quadrature, and
//! the rule must pass the angular guard for that point.

use crate::disc::{DiscPoint, Weight};
use crate::error::{Error, Result};
use crate::kernel::disc_kernel_value;
use crate::poly::{kernel_series_coeff, weighted_monomial_norm_sq, TaylorPoly};
use crate::quad::{integrate, QuadRule, Samplable, Smoothness};
use num_complex::Complex64;
use rayon::prelude::*;

fn check_rule(rule: &QuadRule, alpha: Weight, z: DiscPoint) -> Result<()> {
    rule.check_alpha(alpha)?;
    rule.check_resolved_for(z)
}

/// `P_alpha f (z)`. The rule must carry the weight `alpha` and satisfy the
/// angular guard at `z`.
pub fn project<S: Samplable + ?Sized>(f: &S, alpha: Weight, z: DiscPoint, rule: &QuadRule) -> Result<Complex64> {
    check_rule(rule, alpha, z)?;
    let (zv, a) = (z.value(), alpha.alpha());
    integrate(
        &|w: Complex64| f.eval(DiscPoint::new_unchecked(w)) * disc_kernel_value(zv, w, a),
        rule,
    )
}

/// Kernel values `K_alpha(z, w)` at every node `w` of a rule, for projecting
/// many sampled functions at the same point `z`.
#[derive(Debug, Clone)]
pub struct KernelWeights {
    z: DiscPoint,
    values: Vec<Complex64>,
}

impl KernelWeights {
    /// Uses the rule's own weight; fails if the rule is under-resolved at `z`.
    pub fn new(z: DiscPoint, rule: &QuadRule) -> Result<Self> {
        rule.check_resolved_for(z)?;
        let (zv, a) = (z.value(), rule.alpha().alpha());
        let values = rule.nodes().map(|(w, _)| disc_kernel_value(zv, w.value(), a)).collect();
        Ok(Self { z, values })
    }

    pub fn point(&self) -> DiscPoint {
        self.z
    }

    /// `P_alpha f (z)` from ring-major samples of `f` on the same rule.
    pub fn apply(&self, samples: &[Complex64], rule: &QuadRule) -> Complex64 {
        let weighted: Vec<Complex64> = samples.iter().zip(&self.values).map(|(s, k)| s * k).collect();
        rule.integrate_samples(&weighted)
    }
}

/// `P_alpha` applied to function values already sampled at the nodes of
/// `rule` (ring-major, as produced by [`QuadRule::sample`]).
pub fn project_samples(samples: &[Complex64], z: DiscPoint, rule: &QuadRule) -> Result<Complex64> {
    Ok(KernelWeights::new(z, rule)?.apply(samples, rule))
}

/// Values of `P_alpha f` at every node of `rule`, ring-major.
///
/// Each ring is projected with a rule of the same resolution, widened to the
/// angular guard of that ring. Nodes close to the boundary need very many
/// angular points, so keep the radial count of `rule` modest.
pub fn project_at_nodes<S: Samplable + ?Sized>(f: &S, rule: &QuadRule) -> Result<Vec<Complex64>> {
    let alpha = rule.alpha();
    let res = rule.resolution();
    let rings: Vec<Result<Vec<Complex64>>> = (0..rule.radial_count())
        .into_par_iter()
        .map(|i| {
            let inner = QuadRule::resolved_for(res, alpha, rule.node(i, 0))?;
            (0..rule.angular_count())
                .map(|j| project(f, alpha, rule.node(i, j), &inner))
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(rule.len());
    for ring in rings {
        out.extend(ring?);
    }
    Ok(out)
}

/// `P_alpha^* g (z) = (alpha + 1)(1 - |z|^2)^alpha int g(w) (1 - conj(w) z)^-(alpha + 2) dm(w)`,
/// the adjoint with respect to the unweighted pairing `<u, v> = int u conj(v) dm`.
/// The rule must be unweighted.
pub fn adjoint<S: Samplable + ?Sized>(g: &S, alpha: Weight, z: DiscPoint, rule: &QuadRule) -> Result<Complex64> {
    check_rule(rule, Weight::unweighted(), z)?;
    let (zv, a) = (z.value(), alpha.alpha());
    let inner = integrate(
        &|w: Complex64| g.eval(DiscPoint::new_unchecked(w)) * disc_kernel_value(zv, w, a),
        rule,
    )?;
    Ok(inner * adjoint_density(alpha, z))
}

/// `(alpha + 1)(1 - |z|^2)^alpha`, which is `P_alpha^* 1`.
pub fn adjoint_density(alpha: Weight, z: DiscPoint) -> f64 {
    let a = alpha.alpha();
    (a + 1.0) * (1.0 - z.value().norm_sqr()).powf(a)
}

/// The unimodular function `g_a(w) = (1 - a conj(w))^2 / |1 - a conj(w)|^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessGa {
    a: f64,
}

impl WitnessGa {
    pub fn new(a: f64) -> Result<Self> {
        if a > 0.0 && a < 1.0 {
            Ok(Self { a })
        } else {
            Err(Error::InvalidParameter(format!("parameter a out of (0,1): {a}")))
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

impl Samplable for WitnessGa {
    fn eval(&self, z: DiscPoint) -> Complex64 {
        let b = 1.0 - self.a * z.value().conj();
        b * b / b.norm_sqr()
    }

    fn smoothness(&self) -> Smoothness {
        Smoothness::Bounded
    }
}

/// `P(g_a)(a)` computed by quadrature alongside two closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlowupWitness {
    pub a: f64,
    pub observed: f64,
    /// `sum_n a^(2n) / (n + 1) = -ln(1 - a^2) / a^2`, the value of the integral.
    pub expected: f64,
    /// `ln(1 / (1 - a^2))`, the closed form as usually quoted. It differs from
    /// the series sum by the factor `a^2`; both grow without bound as `a -> 1`.
    pub stated: f64,
}

/// `-ln(1 - a^2) / a^2`, equal to 1 at `a = 0`.
pub fn blowup_series(a: f64) -> f64 {
    let x = a * a;
    if x < 1e-8 {
        1.0 + 0.5 * x
    } else {
        -(-x).ln_1p() / x
    }
}

/// `ln(1 / (1 - a^2))`.
pub fn blowup_stated(a: f64) -> f64 {
    -(-a * a).ln_1p()
}

/// Evaluates the Bergman projection of the bounded witness `g_a` at `a`.
/// The integrand reduces to `|1 - a conj(w)|^-2`, so the observed value is
/// real up to round-off and its real part is reported.
pub fn blowup_witness(a: f64, rule: &QuadRule) -> Result<BlowupWitness> {
    let g = WitnessGa::new(a)?;
    let observed = project(&g, Weight::unweighted(), DiscPoint::from_real(a)?, rule)?.re;
    Ok(BlowupWitness {
        a,
        observed,
        expected: blowup_series(a),
        stated: blowup_stated(a),
    })
}

/// Higher-order reproducing formula
/// `f(z) = (1/n!) int (1 - |w|^2)^n f^(n)(w) / (conj(w)^n (1 - conj(w) z)^2) dm(w)`,
/// valid when `f` vanishes to order `2n` at the origin.
///
/// Coefficients `a_0 .. a_{2n-1}` must be exactly zero; anything else is
/// rejected because the formula does not hold for such `f`. The rule must be
/// unweighted; quadrature nodes never include the origin.
pub fn lemma25_reproduce(f: &TaylorPoly, n: usize, z: DiscPoint, rule: &QuadRule) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidParameter("order n must be at least 1".into()));
    }
    if let Some(index) = (0..2 * n).find(|&k| f.coeff(k) != Complex64::new(0.0, 0.0)) {
        return Err(Error::VanishingCondition { order: n, index });
    }
    check_rule(rule, Weight::unweighted(), z)?;
    let deriv = f.differentiate(n);
    let zv = z.value();
    let ni = n as i32;
    let integral = integrate(
        &|w: Complex64| {
            let damp = (1.0 - w.norm_sqr()).powi(ni);
            damp * deriv.eval(w) / w.conj().powi(ni) * disc_kernel_value(zv, w, 0.0)
        },
        rule,
    )?;
    let n_fact: f64 = (1..=n).map(|k| k as f64).product();
    Ok(integral / n_fact)
}

/// `|<f - P f, g>|` in `L^2(dm)`, with `P f` sampled at the nodes of the
/// unweighted `rule` through [`project_at_nodes`].
pub fn orthogonality_residual<S: Samplable + ?Sized>(f: &S, g: &TaylorPoly, rule: &QuadRule) -> Result<f64> {
    rule.check_alpha(Weight::unweighted())?;
    let projected = project_at_nodes(f, rule)?;
    let fs = rule.sample(f)?;
    let pairing: Vec<Complex64> = rule
        .nodes()
        .zip(fs.iter().zip(&projected))
        .map(|((w, _), (fv, pv))| (fv - pv) * g.eval(w.value()).conj())
        .collect();
    Ok(rule.integrate_samples(&pairing).norm())
}

/// A finite sum `sum c_jk w^j conj(w)^k`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MixedPoly {
    terms: Vec<(usize, usize, Complex64)>,
}

impl MixedPoly {
    pub fn new(terms: Vec<(usize, usize, Complex64)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(usize, usize, Complex64)] {
        &self.terms
    }

    /// Exact `P_alpha` image: `P_alpha(w^j conj(w)^k) = c_{j-k} ||w^j||^2 z^{j-k}`
    /// for `j >= k` and zero otherwise, where `c_n` are the kernel's Taylor
    /// coefficients.
    pub fn project_exact(&self, alpha: Weight) -> TaylorPoly {
        let top = self.terms.iter().filter(|t| t.0 >= t.1).map(|t| t.0 - t.1).max();
        let Some(top) = top else {
            return TaylorPoly::zero();
        };
        let mut coeffs = vec![Complex64::new(0.0, 0.0); top + 1];
        for &(j, k, c) in &self.terms {
            if j >= k {
                coeffs[j - k] += c * kernel_series_coeff(j - k, alpha) * weighted_monomial_norm_sq(j, alpha);
            }
        }
        TaylorPoly::new(coeffs)
    }
}

impl Samplable for MixedPoly {
    fn eval(&self, z: DiscPoint) -> Complex64 {
        let w = z.value();
        self.terms
            .iter()
            .map(|&(j, k, c)| c * w.powu(j as u32) * w.conj().powu(k as u32))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::Resolution;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn w(a: f64) -> Weight {
        Weight::new(a).unwrap()
    }

    fn rule(alpha: f64) -> QuadRule {
        QuadRule::with_resolution(Resolution::default(), w(alpha)).unwrap()
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> TaylorPoly {
        let d = rng.gen_range(0..=max_degree);
        TaylorPoly::new((0..=d).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect())
    }

    #[test]
    fn project_examples() {
        let z2 = TaylorPoly::from_real(&[0.0, 0.0, 1.0]);
        let v = project(&z2, w(0.0), DiscPoint::from_real(0.5).unwrap(), &rule(0.0)).unwrap();
        assert!((v - 0.25).norm() < 1e-12);

        let conj = |z: Complex64| z.conj();
        let v = project(&conj, w(0.0), DiscPoint::from_real(0.4).unwrap(), &rule(0.0)).unwrap();
        assert!(v.norm() < 1e-12);

        let f = TaylorPoly::new(vec![c(1.0, 0.0), c(0.0, 3.0)]);
        let v = project(&f, w(1.5), DiscPoint::from_real(0.2).unwrap(), &rule(1.5)).unwrap();
        assert!((v - c(1.0, 0.6)).norm() < 1e-12);
    }

    #[test]
    fn project_rejects_mismatched_or_coarse_rules() {
        let f = TaylorPoly::constant(c(1.0, 0.0));
        let z = DiscPoint::from_real(0.5).unwrap();
        assert!(matches!(
            project(&f, w(1.0), z, &rule(0.0)),
            Err(Error::WeightMismatch { .. })
        ));
        let coarse = QuadRule::build(64, 64, w(0.0)).unwrap();
        assert!(matches!(project(&f, w(0.0), z, &coarse), Err(Error::UnderResolved { required: 100, .. })));
    }

    #[test]
    fn reproduces_random_polynomials() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for alpha in [0.0, 0.5, 1.0, 2.0] {
            let rule = rule(alpha);
            for _ in 0..10 {
                let f = random_poly(&mut rng, 10);
                for r in [0.0, 0.4, 0.8] {
                    for k in 0..4 {
                        let z = DiscPoint::from_polar(r, 1.1 * k as f64).unwrap();
                        let v = project(&f, w(alpha), z, &rule).unwrap();
                        assert!((v - f.eval(z.value())).norm() <= 1e-8);
                    }
                }
            }
        }
    }

    #[test]
    fn annihilates_anti_analytic_monomials() {
        let rule = rule(0.0);
        for k in 1..=3u32 {
            let f = move |z: Complex64| z.conj().powu(k);
            for z in [c(0.0, 0.0), c(0.5, 0.3), c(-0.8, 0.0)] {
                let v = project(&f, w(0.0), DiscPoint::new(z).unwrap(), &rule).unwrap();
                assert!(v.norm() <= 1e-9);
            }
        }
    }

    #[test]
    fn projection_matches_exact_mixed_formula() {
        let mixed = MixedPoly::new(vec![(3, 1, c(1.0, -0.5)), (1, 2, c(2.0, 0.0)), (4, 0, c(0.0, 1.0)), (2, 2, c(0.3, 0.0))]);
        for alpha in [0.0, 1.0, 2.5] {
            let exact = mixed.project_exact(w(alpha));
            for z in [c(0.1, 0.2), c(-0.6, 0.3)] {
                let v = project(&mixed, w(alpha), DiscPoint::new(z).unwrap(), &rule(alpha)).unwrap();
                assert!((v - exact.eval(z)).norm() < 1e-12);
            }
        }
        // |w|^2 projects to the constant 1/2 when unweighted
        let abs2 = MixedPoly::new(vec![(1, 1, c(1.0, 0.0))]);
        assert!((abs2.project_exact(w(0.0)).eval(c(0.3, 0.0)) - 0.5).norm() < 1e-14);
    }

    #[test]
    fn idempotent_on_node_samples() {
        let outer = QuadRule::build(8, 256, w(1.0)).unwrap();
        let f = TaylorPoly::new(vec![c(0.2, 0.1), c(-1.0, 0.0), c(0.0, 0.5), c(0.3, 0.3)]);
        let once = project_at_nodes(&f, &outer).unwrap();
        for z in [c(0.3, 0.0), c(-0.5, 0.6)] {
            let z = DiscPoint::new(z).unwrap();
            let first = project(&f, w(1.0), z, &outer).unwrap();
            let twice = project_samples(&once, z, &outer).unwrap();
            assert!((first - twice).norm() <= 1e-7);
        }
    }

    #[test]
    fn adjoint_examples() {
        let plain = rule(0.0);
        let one = |_z: Complex64| c(1.0, 0.0);
        let v = adjoint(&one, w(1.0), DiscPoint::from_real(0.6).unwrap(), &plain).unwrap();
        assert!((v - 1.28).norm() < 1e-12);
        let v = adjoint(&one, w(0.0), DiscPoint::origin(), &plain).unwrap();
        assert!((v - 1.0).norm() < 1e-14);
        let id = |z: Complex64| z;
        let v = adjoint(&id, w(0.0), DiscPoint::from_real(0.5).unwrap(), &plain).unwrap();
        assert!((v - 0.5).norm() < 1e-12);
    }

    #[test]
    fn adjoint_of_one_is_the_density() {
        let plain = rule(0.0);
        let one = |_z: Complex64| c(1.0, 0.0);
        for alpha in [0.0, 1.0, 2.0] {
            for z in [c(0.0, 0.0), c(0.3, -0.4), c(0.8, 0.0)] {
                let z = DiscPoint::new(z).unwrap();
                let v = adjoint(&one, w(alpha), z, &plain).unwrap();
                assert!((v - adjoint_density(w(alpha), z)).norm() <= 1e-8);
            }
        }
    }

    #[test]
    fn adjoint_pairing() {
        // <P_alpha f, g>_dm = <f, P_alpha^* g>_dm. P_alpha^* g carries the factor
        // (alpha + 1)(1 - |z|^2)^alpha, so the right side is integrated against
        // dm_alpha with that factor removed.
        let alpha = w(0.5);
        let g = WitnessGa::new(0.5).unwrap();
        let f = TaylorPoly::new(vec![c(0.5, 0.0), c(0.0, -1.0), c(0.25, 0.25)]);
        let plain = QuadRule::build(16, 64, w(0.0)).unwrap();
        let weighted = QuadRule::build(16, 64, alpha).unwrap();

        let pf = project_at_nodes(&f, &weighted).unwrap();
        let lhs_check: Vec<Complex64> = pf.iter().zip(weighted.nodes()).map(|(p, (z, _))| p - f.eval(z.value())).collect();
        assert!(lhs_check.iter().all(|d| d.norm() < 1e-10));
        let lhs = integrate(&|z: Complex64| f.eval(z) * g.eval(DiscPoint::new_unchecked(z)).conj(), &plain).unwrap();

        let res = weighted.resolution();
        let g_star: Vec<Complex64> = weighted
            .nodes()
            .map(|(z, _)| {
                let inner = QuadRule::resolved_for(res, w(0.0), z).unwrap();
                adjoint(&g, alpha, z, &inner).unwrap() / adjoint_density(alpha, z)
            })
            .collect();
        let pairs: Vec<Complex64> = weighted
            .nodes()
            .zip(&g_star)
            .map(|((z, _), gs)| f.eval(z.value()) * gs.conj())
            .collect();
        let rhs = weighted.integrate_samples(&pairs);
        assert!((lhs - rhs).norm() <= 1e-7, "{lhs} vs {rhs}");
    }

    #[test]
    fn witness_is_unimodular_and_validated() {
        let g = WitnessGa::new(0.9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let z = DiscPoint::from_polar(rng.gen_range(0.0..0.999), rng.gen_range(0.0..6.3)).unwrap();
            assert!((g.eval(z).norm() - 1.0).abs() < 1e-14);
        }
        assert!(WitnessGa::new(1.5).is_err());
        assert!(WitnessGa::new(0.0).is_err());
        assert_eq!(g.smoothness(), Smoothness::Bounded);
    }

    #[test]
    fn blowup_closed_forms() {
        assert!(blowup_stated(1e-6) < 1e-11);
        assert!((blowup_stated(0.9) - 1.660_731_206_821_651).abs() < 1e-12);
        // series oracle: sum a^(2n) / (n + 1)
        for a in [1e-5, 0.3, 0.9] {
            let x: f64 = a * a;
            let series: f64 = (0..2000).map(|n| x.powi(n) / (n as f64 + 1.0)).sum();
            assert!((blowup_series(a) - series).abs() < 1e-12);
        }
    }

    #[test]
    fn blowup_quadrature_matches_series() {
        for (a, tol) in [(0.5, 1e-4), (0.9, 1e-4), (0.99, 1e-3)] {
            let rule = QuadRule::resolved_for(Resolution::default(), w(0.0), DiscPoint::from_real(a).unwrap()).unwrap();
            let b = blowup_witness(a, &rule).unwrap();
            assert!((b.observed - b.expected).abs() <= tol, "a {a}: {b:?}");
        }
    }

    #[test]
    fn lemma25_examples() {
        let rule = rule(0.0);
        let z = DiscPoint::from_real(0.4).unwrap();
        let v = lemma25_reproduce(&TaylorPoly::monomial(2, c(1.0, 0.0)), 1, z, &rule).unwrap();
        assert!((v - 0.16).norm() < 1e-12);
        let v = lemma25_reproduce(&TaylorPoly::zero(), 3, z, &rule).unwrap();
        assert_eq!(v, c(0.0, 0.0));
        let z = DiscPoint::from_real(0.3).unwrap();
        let v = lemma25_reproduce(&TaylorPoly::monomial(4, c(1.0, 0.0)), 2, z, &rule).unwrap();
        assert!((v - 0.0081).norm() < 1e-12);
    }

    #[test]
    fn lemma25_enforces_vanishing() {
        let rule = rule(0.0);
        let z = DiscPoint::from_real(0.2).unwrap();
        let err = lemma25_reproduce(&TaylorPoly::monomial(3, c(1.0, 0.0)), 2, z, &rule).unwrap_err();
        assert_eq!(err, Error::VanishingCondition { order: 2, index: 3 });
        assert!(lemma25_reproduce(&TaylorPoly::monomial(1, c(1.0, 0.0)), 1, z, &rule).is_err());
        assert!(lemma25_reproduce(&TaylorPoly::monomial(2, c(1.0, 0.0)), 0, z, &rule).is_err());
    }

    #[test]
    fn lemma25_grid() {
        let rule = rule(0.0);
        for (m, n) in [(2, 1), (3, 1), (4, 2)] {
            let f = TaylorPoly::monomial(m, c(1.0, 0.0));
            for r in [0.0, 0.35, 0.7] {
                for k in 0..6 {
                    let z = DiscPoint::from_polar(r, 1.0 + k as f64).unwrap();
                    let v = lemma25_reproduce(&f, n, z, &rule).unwrap();
                    assert!((v - f.eval(z.value())).norm() <= 1e-7);
                }
            }
        }
    }

    #[test]
    fn orthogonality_residual_examples() {
        let rule = QuadRule::build(8, 32, w(0.0)).unwrap();
        let f = TaylorPoly::from_real(&[1.0, -2.0, 0.5]);
        let g = TaylorPoly::from_real(&[0.0, 1.0, 1.0]);
        assert!(orthogonality_residual(&f, &g, &rule).unwrap() <= 1e-9);
        let conj = |z: Complex64| z.conj();
        assert!(orthogonality_residual(&conj, &TaylorPoly::from_real(&[0.0, 1.0]), &rule).unwrap() <= 1e-9);
        let abs2 = |z: Complex64| c(z.norm_sqr(), 0.0);
        assert!(orthogonality_residual(&abs2, &TaylorPoly::from_real(&[1.0]), &rule).unwrap() <= 1e-9);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn projection_is_linear(
            a in (-2.0f64..2.0, -2.0f64..2.0),
            r in 0.0f64..0.8,
            t in 0.0f64..6.3,
            alpha in prop::sample::select(vec![0.0, 0.5, 2.0]),
        ) {
            let rule = rule(alpha);
            let z = DiscPoint::from_polar(r, t).unwrap();
            let a = c(a.0, a.1);
            let f = |w: Complex64| w.conj() * w * w + 1.0;
            let g = |w: Complex64| (w - 0.3).exp();
            let combo = move |w: Complex64| f(w) + a * g(w);
            let lhs = project(&combo, Weight::new(alpha).unwrap(), z, &rule).unwrap();
            let rhs = project(&f, Weight::new(alpha).unwrap(), z, &rule).unwrap()
                + a * project(&g, Weight::new(alpha).unwrap(), z, &rule).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
        }

        #[test]
        fn analytic_functions_are_fixed(
            b in (-0.5f64..0.5, -0.5f64..0.5),
            r in 0.0f64..0.8,
            t in 0.0f64..6.3,
        ) {
            // exp is not a polynomial; its Taylor tail is far below tolerance
            let rule = rule(0.0);
            let b = c(b.0, b.1);
            let f = move |w: Complex64| (b * w).exp();
            let z = DiscPoint::from_polar(r, t).unwrap();
            let v = project(&f, Weight::unweighted(), z, &rule).unwrap();
            prop_assert!((v - f(z.value())).norm() <= 1e-10);
        }
    }
}
