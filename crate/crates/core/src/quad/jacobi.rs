//! Gauss-Jacobi rules for the weight `(1 - x)^a (1 + x)^b` on `[-1, 1]`.
//!
//! Nodes come from the Golub-Welsch eigenproblem and are then polished by
//! Newton's method on the three-term recurrence; weights use the closed form
//! in terms of `P_n'` at the nodes, which keeps small weights accurate.

use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::ln_gamma;

/// Evaluate `P_n^{(a,b)}(x)` and `P_{n-1}^{(a,b)}(x)`.
fn jacobi_pair(n: usize, a: f64, b: f64, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    if n == 0 {
        return (p_prev, 0.0);
    }
    let mut p = 0.5 * ((a + b + 2.0) * x + (a - b));
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c2 * p - c3 * p_prev) / c1;
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

/// `(P_n(x), P_n'(x))` for interior `x`.
fn jacobi_with_derivative(n: usize, a: f64, b: f64, x: f64) -> (f64, f64) {
    let (p, p_prev) = jacobi_pair(n, a, b, x);
    let nf = n as f64;
    let s = 2.0 * nf + a + b;
    let dp = (nf * ((a - b) - s * x) * p + 2.0 * (nf + a) * (nf + b) * p_prev) / (s * (1.0 - x * x));
    (p, dp)
}

fn golub_welsch_nodes(n: usize, a: f64, b: f64) -> Vec<f64> {
    let mut jm = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        jm[(k, k)] = if k == 0 {
            (b - a) / (a + b + 2.0)
        } else {
            (b * b - a * a) / (s * (s + 2.0))
        };
        if k + 1 < n {
            let k1 = kf + 1.0;
            let s1 = 2.0 * k1 + a + b;
            let num = 4.0 * k1 * (k1 + a) * (k1 + b) * (k1 + a + b);
            let den = s1 * s1 * (s1 + 1.0) * (s1 - 1.0);
            let off = (num / den).sqrt();
            jm[(k, k + 1)] = off;
            jm[(k + 1, k)] = off;
        }
    }
    let mut nodes: Vec<f64> = SymmetricEigen::new(jm).eigenvalues.iter().copied().collect();
    nodes.sort_by(|x, y| x.total_cmp(y));
    nodes
}

/// Nodes (ascending) and weights of the `n`-point Gauss-Jacobi rule.
///
/// Requires `n >= 1`, `a > -1`, `b > -1`. Exact for polynomials of degree
/// `2n - 1` against `(1 - x)^a (1 + x)^b`.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1 && a > -1.0 && b > -1.0);
    let mut nodes = golub_welsch_nodes(n, a, b);
    for x in nodes.iter_mut() {
        for _ in 0..8 {
            let (p, dp) = jacobi_with_derivative(n, a, b, *x);
            let step = p / dp;
            let next = (*x - step).clamp(-1.0 + f64::EPSILON, 1.0 - f64::EPSILON);
            let done = (next - *x).abs() <= 4.0 * f64::EPSILON * x.abs().max(1e-3);
            *x = next;
            if done {
                break;
            }
        }
    }

    let nf = n as f64;
    let log_prefactor = ln_gamma(nf + a + 1.0) + ln_gamma(nf + b + 1.0)
        - ln_gamma(nf + a + b + 1.0)
        - ln_gamma(nf + 1.0)
        + (a + b + 1.0) * std::f64::consts::LN_2;
    let prefactor = log_prefactor.exp();
    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, dp) = jacobi_with_derivative(n, a, b, x);
            prefactor / ((1.0 - x * x) * dp * dp)
        })
        .collect();
    (nodes, weights)
}
