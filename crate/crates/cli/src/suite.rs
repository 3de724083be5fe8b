//! Named verification checks and the runner that streams their reports.
//!
//! Each check draws its random inputs from its own ChaCha stream, selected by
//! the check's position in [`CHECKS`], so a check's output depends only on
//! the seed and the resolution, not on which other checks run alongside it.

use crate::output::{Format, ReportWriter};
use bergman_kit::bounds::{
    adjoint_divergence_witness, dilation_error, forelli_rudin, growth_check, integral_mean, projection_kernel_modulus,
    projection_ratio, schur_constants, schur_report, supremum_grid, tail_error, SchurParams,
};
use bergman_kit::kernel::{k_disc, k_series, mobius, pullback_kernel, riemann_deriv, DiscKernel, DomainMap};
use bergman_kit::projection::{
    adjoint, adjoint_density, blowup_witness, lemma25_reproduce, orthogonality_residual, KernelWeights, MixedPoly,
};
use bergman_kit::quad::integrate_real;
use bergman_kit::{CheckReport, Complex64, DiscPoint, Exponent, Quantity, QuadRule, Resolution, TaylorPoly, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;

/// Every check the runner knows, in canonical order.
pub const CHECKS: &[&str] = &[
    "orthonormality",
    "kernel-series",
    "reproducing",
    "kernel-norm",
    "blowup",
    "adjoint",
    "threshold",
    "schur",
    "forelli-rudin",
    "tail",
    "dilation",
    "means",
    "conformal",
    "lemma25",
    "growth",
    "mobius-metric",
    "orthogonality",
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown check '{0}'; known checks: {known}", known = CHECKS.join(", "))]
    UnknownCheck(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl SuiteError {
    pub fn exit_code(&self) -> i32 {
        match self {
            SuiteError::UnknownCheck(_) => 2,
            SuiteError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub checks: Vec<String>,
    pub resolution: Resolution,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: CHECKS.iter().map(|s| s.to_string()).collect(),
            resolution: Resolution::default(),
            format: Format::Json,
            output: None,
            seed: 0,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        match self.checks.iter().find(|c| !CHECKS.contains(&c.as_str())) {
            Some(bad) => Err(SuiteError::UnknownCheck(bad.clone())),
            None => Ok(()),
        }
    }

    fn rng_for(&self, name: &str) -> ChaCha8Rng {
        let stream = CHECKS.iter().position(|c| *c == name).unwrap_or(CHECKS.len());
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream as u64);
        rng
    }
}

/// Totals after a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub reports: usize,
    pub failures: usize,
}

impl SuiteOutcome {
    /// 0 when every report passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failures > 0)
    }
}

/// Runs the configured checks in order, writing each report as soon as its
/// check finishes. Unknown names are rejected before anything runs.
pub fn run_suite<W: Write>(config: &SuiteConfig, out: W) -> Result<SuiteOutcome, SuiteError> {
    config.validate()?;
    let mut writer = ReportWriter::new(out, config.format)?;
    for name in &config.checks {
        for report in run_check(name, config)? {
            writer.write(&report)?;
        }
    }
    let outcome = SuiteOutcome {
        reports: writer.written(),
        failures: writer.failures(),
    };
    writer.finish()?;
    Ok(outcome)
}

/// Reports of a single named check. Numerical errors become failing reports.
pub fn run_check(name: &str, config: &SuiteConfig) -> Result<Vec<CheckReport>, SuiteError> {
    let res = config.resolution;
    let mut rng = config.rng_for(name);
    let result = match name {
        "orthonormality" => orthonormality(res),
        "kernel-series" => kernel_series(),
        "reproducing" => reproducing(res, &mut rng),
        "kernel-norm" => kernel_norm(res),
        "blowup" => blowup(res),
        "adjoint" => adjoint_identity(res),
        "threshold" => threshold(),
        "schur" => schur(res, &mut rng),
        "forelli-rudin" => forelli_rudin_band(res),
        "tail" => tail(&mut rng),
        "dilation" => dilation(res),
        "means" => means(),
        "conformal" => conformal(),
        "lemma25" => lemma25(res),
        "growth" => growth(res, &mut rng),
        "mobius-metric" => mobius_metric(&mut rng),
        "orthogonality" => orthogonality(),
        other => return Err(SuiteError::UnknownCheck(other.to_string())),
    };
    Ok(result.unwrap_or_else(|e| {
        vec![CheckReport::new(name, Quantity::Bool(false), bergman_kit::Expected::None, 0.0)
            .resolution(res)
            .fail(e)]
    }))
}

type Checked = bergman_kit::Result<Vec<CheckReport>>;

/// Random polynomial of degree at most `max_degree` with coefficients in the
/// unit square.
pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> TaylorPoly {
    let d = rng.gen_range(0..=max_degree);
    TaylorPoly::new(
        (0..=d)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

/// Random `sum c_jk z^j conj(z)^k` with six terms and `j, k <= 5`.
pub fn random_mixed_poly(rng: &mut ChaCha8Rng) -> MixedPoly {
    MixedPoly::new(
        (0..6)
            .map(|_| {
                let j = rng.gen_range(0..6);
                let k = rng.gen_range(0..6);
                (j, k, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            })
            .collect(),
    )
}

/// Polar grid with `radii.len()` circles of `angles` points each.
pub fn polar_points(radii: &[f64], angles: usize) -> Vec<DiscPoint> {
    radii
        .iter()
        .flat_map(|&r| {
            (0..angles).map(move |k| {
                DiscPoint::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / angles as f64 + 0.3)
                    .expect("grid radii lie inside the disc")
            })
        })
        .collect()
}

/// The 5 x 8 evaluation grid with radii up to 0.8.
pub fn inner_grid() -> Vec<DiscPoint> {
    polar_points(&[0.0, 0.2, 0.4, 0.6, 0.8], 8)
}

fn max_modulus_point(grid: &[DiscPoint]) -> DiscPoint {
    grid.iter()
        .copied()
        .max_by(|a, b| a.modulus().total_cmp(&b.modulus()))
        .unwrap_or_else(DiscPoint::origin)
}

fn orthonormality(res: Resolution) -> Checked {
    const MAX_DEGREE: usize = 20;
    let rule = QuadRule::with_resolution(res, Weight::unweighted())?;
    let basis: Vec<Vec<Complex64>> = (0..=MAX_DEGREE)
        .map(|n| rule.sample(&TaylorPoly::monomial(n, Complex64::new((n as f64 + 1.0).sqrt(), 0.0))))
        .collect::<bergman_kit::Result<_>>()?;
    let mut worst: f64 = 0.0;
    for n in 0..=MAX_DEGREE {
        for m in 0..=MAX_DEGREE {
            let prod: Vec<Complex64> = basis[n].iter().zip(&basis[m]).map(|(a, b)| a * b.conj()).collect();
            let delta = if n == m { 1.0 } else { 0.0 };
            worst = worst.max((rule.integrate_samples(&prod) - delta).norm());
        }
    }
    Ok(vec![CheckReport::value("orthonormality", worst, 0.0, 1e-10)
        .param("max_degree", MAX_DEGREE)
        .resolution(res)])
}

fn kernel_series() -> Checked {
    const TERMS: usize = 100;
    let grid = polar_points(&[0.0, 0.35, 0.7], 8);
    let w = Weight::unweighted();
    let worst = grid
        .iter()
        .flat_map(|&z| grid.iter().map(move |&zeta| (k_series(z, zeta, TERMS) - k_disc(z, zeta, w)).norm()))
        .fold(0.0, f64::max);
    Ok(vec![CheckReport::value("kernel-series", worst, 0.0, 1e-8)
        .param("terms", TERMS)
        .param("grid_points", grid.len())])
}

fn reproducing(res: Resolution, rng: &mut ChaCha8Rng) -> Checked {
    const POLYS: usize = 50;
    let polys: Vec<TaylorPoly> = (0..POLYS).map(|_| random_poly(rng, 10)).collect();
    let grid = inner_grid();
    let mut out = Vec::new();
    for alpha in [0.0, 0.5, 1.0, 2.0] {
        let weight = Weight::new(alpha)?;
        let rule = QuadRule::resolved_for(res, weight, max_modulus_point(&grid))?;
        let kernels: Vec<KernelWeights> = grid
            .iter()
            .map(|&z| KernelWeights::new(z, &rule))
            .collect::<bergman_kit::Result<_>>()?;
        let mut worst: f64 = 0.0;
        for f in &polys {
            let samples = rule.sample(f)?;
            for k in &kernels {
                worst = worst.max((k.apply(&samples, &rule) - f.eval(k.point().value())).norm());
            }
        }
        out.push(
            CheckReport::value("reproducing", worst, 0.0, 1e-8)
                .param("alpha", alpha)
                .param("polynomials", POLYS)
                .param("grid_points", grid.len())
                .resolution(rule.resolution()),
        );
    }
    Ok(out)
}

fn kernel_norm(res: Resolution) -> Checked {
    let grid = inner_grid();
    let rule = QuadRule::resolved_for(res, Weight::unweighted(), max_modulus_point(&grid))?;
    let mut worst: f64 = 0.0;
    for &z in &grid {
        let zv = z.value();
        let norm_sq = integrate_real(|w| k_disc(z, w, Weight::unweighted()).norm_sqr(), &rule)?;
        worst = worst.max((norm_sq - (1.0 - zv.norm_sqr()).powi(-2)).abs());
    }
    Ok(vec![CheckReport::value("kernel-norm", worst, 0.0, 1e-8)
        .param("grid_points", grid.len())
        .resolution(rule.resolution())])
}

fn blowup(res: Resolution) -> Checked {
    let mut out = Vec::new();
    let mut observed = Vec::new();
    for (a, tol) in [(0.5, 1e-4), (0.9, 1e-4), (0.99, 1e-3)] {
        let rule = QuadRule::resolved_for(res, Weight::unweighted(), DiscPoint::from_real(a)?)?;
        let w = blowup_witness(a, &rule)?;
        observed.push(w.observed);
        out.push(
            CheckReport::value("blowup", w.observed, w.expected, tol)
                .param("a", a)
                .param("expected_form", "-ln(1-a^2)/a^2")
                .param("stated_form_value", w.stated)
                .resolution(rule.resolution()),
        );
    }
    let increasing = observed.windows(2).all(|p| p[0] < p[1]);
    out.push(CheckReport::value("blowup-monotone", increasing, true, 0.0).param("a", "0.5,0.9,0.99"));
    Ok(out)
}

fn adjoint_identity(res: Resolution) -> Checked {
    let grid = inner_grid();
    let rule = QuadRule::resolved_for(res, Weight::unweighted(), max_modulus_point(&grid))?;
    let one = |_w: Complex64| Complex64::new(1.0, 0.0);
    let mut out = Vec::new();
    for alpha in [0.0, 1.0, 2.0] {
        let weight = Weight::new(alpha)?;
        let mut worst: f64 = 0.0;
        for &z in &grid {
            worst = worst.max((adjoint(&one, weight, z, &rule)? - adjoint_density(weight, z)).norm());
        }
        out.push(
            CheckReport::value("adjoint", worst, 0.0, 1e-8)
                .param("alpha", alpha)
                .param("g", "const:1")
                .resolution(rule.resolution()),
        );
    }
    Ok(out)
}

fn threshold() -> Checked {
    let mut agree = true;
    let mut divergent = 0;
    let mut cases = 0;
    for alpha in [-0.5, -0.25, 0.0, 0.5, 1.0] {
        for p in [1.2, 2.0, 4.0] {
            let q = Exponent::new(p)?.conjugate();
            let finite = adjoint_divergence_witness(Weight::new(alpha)?, Exponent::new(q)?)?.is_finite();
            agree &= finite == (p * (alpha + 1.0) > 1.0);
            divergent += usize::from(!finite);
            cases += 1;
        }
    }
    Ok(vec![CheckReport::value("threshold", agree, true, 0.0)
        .param("cases", cases)
        .param("divergent", divergent)])
}

fn schur(res: Resolution, rng: &mut ChaCha8Rng) -> Checked {
    const POLYS: usize = 20;
    let grid = supremum_grid();
    let mut out = Vec::new();
    for (alpha, p) in [(0.0, 2.0), (1.0, 2.0), (1.0, 1.5)] {
        let weight = Weight::new(alpha)?;
        let exponent = Exponent::new(p)?;
        let params = SchurParams::for_projection(weight, exponent)?;
        let kernel = projection_kernel_modulus(weight);
        out.push(schur_report(&kernel, &params, res, &grid)?);
        let bound = schur_constants(&kernel, &params, res, &grid)?.projection_bound;
        let rule = QuadRule::with_resolution(res, weight)?;
        let mut worst: f64 = 0.0;
        for _ in 0..POLYS {
            worst = worst.max(projection_ratio(&random_mixed_poly(rng), exponent, &rule)?);
        }
        out.push(
            CheckReport::bound("schur-dominance", worst, bound, 0.0)
                .param("alpha", alpha)
                .param("p", p)
                .param("polynomials", POLYS)
                .resolution(res),
        );
    }
    Ok(out)
}

fn forelli_rudin_band(res: Resolution) -> Checked {
    const BAND: f64 = 50.0;
    let mut out = Vec::new();
    for (s, t) in [(2.0, 1.5), (3.0, 2.0), (4.0, 2.5)] {
        let ratios: Vec<f64> = [0.0, 0.5, 0.9, 0.95]
            .iter()
            .map(|&r| forelli_rudin(DiscPoint::from_real(r)?, s, t, res).map(|fr| fr.ratio))
            .collect::<bergman_kit::Result<_>>()?;
        let hi = ratios.iter().copied().fold(f64::MIN, f64::max);
        let lo = ratios.iter().copied().fold(f64::MAX, f64::min);
        let listed: Vec<String> = ratios.iter().map(|r| format!("{r:.6}")).collect();
        out.push(
            CheckReport::bound("forelli-rudin", hi / lo, BAND, 0.0)
                .param("s", s)
                .param("t", t)
                .param("radii", "0,0.5,0.9,0.95")
                .param("ratios", listed.join(","))
                .resolution(res),
        );
    }
    Ok(out)
}

fn tail(rng: &mut ChaCha8Rng) -> Checked {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let f = random_poly(rng, 12);
        for n in 0..=13 {
            let head: f64 = (0..=n).map(|k| f.coeff(k).norm_sqr() / (k as f64 + 1.0)).sum();
            worst = worst.max((tail_error(&f, n) - (f.a2_norm_sq() - head)).abs());
        }
    }
    Ok(vec![CheckReport::value("tail", worst, 0.0, 1e-12).param("polynomials", 20)])
}

/// Fixed polynomials for the dilation check.
pub fn dilation_polys() -> Vec<TaylorPoly> {
    vec![
        TaylorPoly::from_real(&[0.0, 0.0, 1.0]),
        TaylorPoly::from_real(&[1.0, -2.0, 0.5, 3.0]),
        TaylorPoly::new(vec![Complex64::new(0.0, 1.0), Complex64::new(0.5, 0.5), Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.25)]),
    ]
}

/// Radii of the dilation sequence.
pub const DILATION_RHOS: [f64; 4] = [0.5, 0.9, 0.99, 0.999];

/// Final error relative to the first one that counts as having reached zero.
pub const DILATION_DECAY: f64 = 1e-2;

fn dilation(res: Resolution) -> Checked {
    let rule = QuadRule::with_resolution(res, Weight::unweighted())?;
    let mut out = Vec::new();
    for f in dilation_polys() {
        for p in [1.0, 2.0] {
            let errs: Vec<f64> = DILATION_RHOS
                .iter()
                .map(|&rho| dilation_error(&f, rho, Exponent::new(p)?, &rule))
                .collect::<bergman_kit::Result<_>>()?;
            let decreasing = errs.windows(2).all(|w| w[0] > w[1]);
            let decay = errs[errs.len() - 1] / errs[0];
            let listed: Vec<String> = errs.iter().map(|e| format!("{e:.6e}")).collect();
            let mut report = CheckReport::bound("dilation", decay, DILATION_DECAY, 0.0)
                .param("f", crate::FunctionSpec::Poly(f.clone()))
                .param("p", p)
                .param("errors", listed.join(","))
                .resolution(rule.resolution());
            if !decreasing {
                report = report.fail("errors not strictly decreasing");
            }
            out.push(report);
        }
    }
    Ok(out)
}

fn means() -> Checked {
    const ANGULAR: usize = 512;
    let specs = ["poly:0,1", "poly:0,0,0,1", "poly:1,2,1", "normkernel:0.5"];
    let radii: Vec<f64> = (0..20).map(|k| 0.05 * k as f64).collect();
    let mut out = Vec::new();
    for text in specs {
        let f: crate::FunctionSpec = text.parse().expect("built-in descriptors parse");
        for p in [1.0, 2.0] {
            let vals: Vec<f64> = radii
                .iter()
                .map(|&r| integral_mean(&f, r, Exponent::new(p)?, ANGULAR))
                .collect::<bergman_kit::Result<_>>()?;
            let mut worst = f64::MIN;
            for i in 0..vals.len() {
                for j in i + 1..vals.len() {
                    worst = worst.max(vals[i] - vals[j]);
                }
            }
            out.push(
                CheckReport::bound("means", worst, 0.0, 1e-10)
                    .param("f", text)
                    .param("p", p)
                    .param("reading", "nondecreasing in r")
                    .param("radii", radii.len())
                    .param("angular", ANGULAR),
            );
        }
    }
    Ok(out)
}

fn conformal() -> Checked {
    let a = DiscPoint::from_real(0.5)?;
    let kernel = DiscKernel::unweighted();
    let mut worst: f64 = 0.0;
    for k in 0..10 {
        let z = DiscPoint::from_polar(0.09 * k as f64, 0.9 * k as f64)?;
        let got = riemann_deriv(&kernel, a.value(), z.value())?;
        let den = 1.0 - a.value().conj() * z.value();
        let oracle = (1.0 - a.value().norm_sqr()) / (den * den);
        worst = worst.max((got - oracle).norm());
    }
    let mut pull: f64 = 0.0;
    let pairs = polar_points(&[0.1, 0.5, 0.85], 4);
    for a in [Complex64::new(0.0, 0.0), Complex64::new(0.3, 0.0), Complex64::new(0.6, 0.2)] {
        let map = DomainMap::automorphism(DiscPoint::new(a)?)?;
        for &z in &pairs {
            for &w in &pairs {
                let got = pullback_kernel(&map, &kernel, z.value(), w.value())?;
                let exact = k_disc(z, w, Weight::unweighted());
                pull = pull.max((got - exact).norm() / exact.norm().max(1.0));
            }
        }
    }
    Ok(vec![
        CheckReport::value("conformal", worst, 0.0, 1e-10).param("base", 0.5).param("probes", 10),
        CheckReport::value("pullback", pull, 0.0, 1e-12).param("a", "0,0.3,0.6+0.2i"),
    ])
}

fn lemma25(res: Resolution) -> Checked {
    let grid = polar_points(&[0.0, 0.35, 0.7], 6);
    let rule = QuadRule::resolved_for(res, Weight::unweighted(), max_modulus_point(&grid))?;
    let mut out = Vec::new();
    for (m, n) in [(2, 1), (3, 1), (4, 2)] {
        let f = TaylorPoly::monomial(m, Complex64::new(1.0, 0.0));
        let mut worst: f64 = 0.0;
        for &z in &grid {
            worst = worst.max((lemma25_reproduce(&f, n, z, &rule)? - f.eval(z.value())).norm());
        }
        out.push(
            CheckReport::value("lemma25", worst, 0.0, 1e-7)
                .param("f", format!("z^{m}"))
                .param("n", n)
                .resolution(rule.resolution()),
        );
    }
    Ok(out)
}

fn growth(res: Resolution, rng: &mut ChaCha8Rng) -> Checked {
    const POLYS: usize = 50;
    let polys: Vec<TaylorPoly> = (0..POLYS).map(|_| random_poly(rng, 10)).collect();
    let rule = QuadRule::with_resolution(res, Weight::unweighted())?;
    let grid = supremum_grid();
    let mut out = Vec::new();
    for p in [1.0, 2.0, 4.0] {
        for n in 0..=2 {
            let mut worst = f64::MIN;
            for f in &polys {
                let r = growth_check(f, Exponent::new(p)?, n, &grid, &rule)?;
                if let Quantity::Real(v) = r.observed() {
                    worst = worst.max(v);
                }
            }
            out.push(
                CheckReport::bound("growth", worst, 0.0, 1e-9)
                    .param("p", p)
                    .param("n", n)
                    .param("polynomials", POLYS)
                    .param("grid_points", grid.len())
                    .resolution(res),
            );
        }
    }
    Ok(out)
}

fn mobius_metric(rng: &mut ChaCha8Rng) -> Checked {
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let a = DiscPoint::from_polar(rng.gen_range(0.0..0.95), rng.gen_range(0.0..std::f64::consts::TAU))?;
        let w = DiscPoint::from_polar(rng.gen_range(0.0..0.95), rng.gen_range(0.0..std::f64::consts::TAU))?;
        let (v, d) = mobius(a, w);
        worst = worst.max((1.0 - v.norm_sqr() - d.norm() * (1.0 - w.value().norm_sqr())).abs());
    }
    Ok(vec![CheckReport::value("mobius-metric", worst, 0.0, 1e-12).param("samples", 100)])
}

fn orthogonality() -> Checked {
    // Inner projections are widened to the angular guard of each outer ring,
    // so the outer rule is kept small and fixed.
    let res = Resolution::new(8, 32);
    let rule = QuadRule::with_resolution(res, Weight::unweighted())?;
    let cases: [(&str, TaylorPoly); 3] = [
        ("poly:1,-2,0.5", TaylorPoly::from_real(&[0.0, 1.0, 1.0])),
        ("conj-monomial:1", TaylorPoly::from_real(&[0.0, 1.0])),
        ("abs2", TaylorPoly::from_real(&[1.0])),
    ];
    let mut out = Vec::new();
    for (label, g) in cases {
        let residual = match label {
            "abs2" => orthogonality_residual(&|w: Complex64| Complex64::new(w.norm_sqr(), 0.0), &g, &rule)?,
            text => {
                let f: crate::FunctionSpec = text.parse().expect("built-in descriptors parse");
                orthogonality_residual(&f, &g, &rule)?
            }
        };
        out.push(
            CheckReport::value("orthogonality", residual, 0.0, 1e-9)
                .param("f", label)
                .param("g", crate::FunctionSpec::Poly(g))
                .resolution(res),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(checks: &[&str]) -> SuiteConfig {
        SuiteConfig {
            checks: checks.iter().map(|s| s.to_string()).collect(),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn unknown_check_is_rejected_before_running() {
        let mut buf = Vec::new();
        let err = run_suite(&config(&["orthonormality", "nonexistent"]), &mut buf).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(buf.is_empty());
    }

    #[test]
    fn orthonormality_passes() {
        let mut buf = Vec::new();
        let outcome = run_suite(&config(&["orthonormality"]), &mut buf).unwrap();
        assert_eq!(outcome, SuiteOutcome { reports: 1, failures: 0 });
        assert_eq!(outcome.exit_code(), 0);
    }

    #[test]
    fn blowup_records_use_the_series_value() {
        let reports = run_check("blowup", &SuiteConfig::default()).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.passed()), "{reports:?}");
        assert_eq!(reports[0].params()["a"], "0.5");
    }

    #[test]
    fn random_streams_are_per_check() {
        let a = SuiteConfig { seed: 7, ..SuiteConfig::default() };
        let mut r1 = a.rng_for("growth");
        let mut r2 = a.rng_for("growth");
        let mut r3 = a.rng_for("reproducing");
        let x: u64 = r1.gen();
        assert_eq!(x, r2.gen::<u64>());
        assert_ne!(x, r3.gen::<u64>());
    }

    #[test]
    fn cheap_checks_pass() {
        for name in ["kernel-series", "threshold", "tail", "means", "conformal", "mobius-metric"] {
            let reports = run_check(name, &SuiteConfig::default()).unwrap();
            assert!(!reports.is_empty());
            for r in reports {
                assert!(r.passed(), "{r}");
            }
        }
    }
}
