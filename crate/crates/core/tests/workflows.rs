use bergman_kit::bounds::{schur_constants, supremum_grid, projection_kernel_modulus, SchurParams};
use bergman_kit::kernel::{k_disc, mobius, riemann_deriv, DiscKernel, DomainMap, KernelFn, Pullback};
use bergman_kit::projection::{adjoint, project, MixedPoly};
use bergman_kit::{integrate, Complex64, DiscPoint, Exponent, QuadRule, Resolution, TaylorPoly, Weight};

fn pt(re: f64, im: f64) -> DiscPoint {
    DiscPoint::new(Complex64::new(re, im)).unwrap()
}

#[test]
fn riemann_map_of_the_disc_from_its_kernel() {
    let a = pt(0.5, 0.0);
    let kernel = DiscKernel::unweighted();
    for k in 0..10 {
        let z = DiscPoint::from_polar(0.15 + 0.08 * k as f64, 0.7 * k as f64).unwrap();
        let got = riemann_deriv(&kernel, a.value(), z.value()).unwrap();
        let (_, d) = mobius(a, z);
        // the normalized map is -phi_a
        assert!((got + d).norm() <= 1e-10);
    }
}

#[test]
fn kernel_of_a_half_plane_image_recovers_its_riemann_map() {
    // Omega = C \ [0, inf). Its kernel is the disc kernel pulled back through
    // the inverse of the slit map; the Riemann map onto the disc sending -1 to
    // 0 with positive derivative there is minus that inverse, whose
    // derivative at -1 is -1/4.
    let inverse = DomainMap::slit_plane_inverse().unwrap();
    let omega = Pullback {
        map: inverse.clone(),
        target: DiscKernel::unweighted(),
    };
    let base = Complex64::new(-1.0, 0.0);
    for w in [Complex64::new(-5.0, 0.1), Complex64::new(2.0, -3.0), Complex64::new(-0.2, 0.4)] {
        let (_, d) = inverse.eval(w).unwrap();
        let got = riemann_deriv(&omega, base, w).unwrap();
        assert!((got + d).norm() <= 1e-10 * d.norm(), "{w}: {got} vs {d}");
    }
    let diag = omega.eval(base, base).unwrap();
    assert!((diag.re - 1.0 / 16.0).abs() < 1e-14 && diag.im == 0.0);
}

#[test]
fn projection_and_adjoint_agree_on_constants() {
    let plain = QuadRule::with_resolution(Resolution::default(), Weight::unweighted()).unwrap();
    for a in [0.0, 1.0, 2.0] {
        let alpha = Weight::new(a).unwrap();
        let weighted = QuadRule::with_resolution(Resolution::default(), alpha).unwrap();
        let z = pt(0.3, 0.6);
        let one = |_w: Complex64| Complex64::new(1.0, 0.0);
        assert!((project(&one, alpha, z, &weighted).unwrap() - 1.0).norm() < 1e-12);
        let star = adjoint(&one, alpha, z, &plain).unwrap();
        assert!((star.re - (a + 1.0) * (1.0 - 0.45f64).powf(a)).abs() < 1e-10);
    }
}

#[test]
fn reproducing_kernel_pairs_with_polynomials() {
    // <f, K_z> = f(z) with the kernel written as a sampled function
    let rule = QuadRule::with_resolution(Resolution::default(), Weight::unweighted()).unwrap();
    let f = TaylorPoly::from_real(&[0.5, -1.0, 0.0, 2.0]);
    let z = pt(-0.2, 0.7);
    let integrand = |w: Complex64| f.eval(w) * k_disc(z, DiscPoint::new(w).unwrap(), Weight::unweighted());
    let v = integrate(&integrand, &rule).unwrap();
    assert!((v - f.eval(z.value())).norm() < 1e-12);
}

#[test]
fn schur_certificate_covers_exact_projections() {
    let alpha = Weight::new(1.0).unwrap();
    let p = Exponent::new(2.0).unwrap();
    let params = SchurParams::for_projection(alpha, p).unwrap();
    let c = schur_constants(&projection_kernel_modulus(alpha), &params, Resolution::default(), &supremum_grid()).unwrap();
    let rule = QuadRule::with_resolution(Resolution::default(), alpha).unwrap();
    let f = MixedPoly::new(vec![(2, 0, Complex64::new(1.0, 0.0)), (0, 2, Complex64::new(3.0, 0.0))]);
    let ratio = bergman_kit::bounds::projection_ratio(&f, p, &rule).unwrap();
    assert!(ratio < 1.0 && ratio <= c.projection_bound);
}
