//! Gauss-Legendre nodes and weights (Newton iteration on the three-term
//! recurrence), shared by the Fredholm discretization and the quadrature
//! oracles.

use alloc::vec::Vec;
// resolves f64 math through libm in no_std builds; under `cargo test`
// std is linked and its inherent methods shadow the trait
#[allow(unused_imports)]
use num_traits::Float;

/// P_n(x) and P_n'(x) by the Bonnet recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    // derivative from P_n and P_{n-1}
    let dp = if n == 0 {
        0.0
    } else {
        (n as f64) * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, dp)
}

/// Nodes and weights on [-1, 1].
pub(crate) fn legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "need at least one node");
    let mut xs = alloc::vec![0.0; n];
    let mut ws = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess, then Newton
        let mut z = (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, z);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, z);
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        xs[i] = -z;
        ws[i] = w;
        xs[n - 1 - i] = z;
        ws[n - 1 - i] = w;
    }
    (xs, ws)
}

/// Nodes and weights mapped affinely to [a, b].
pub(crate) fn legendre_mapped(a: f64, b: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let (xs, ws) = legendre(n);
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    (
        xs.iter().map(|&x| mid + half * x).collect(),
        ws.iter().map(|&w| half * w).collect(),
    )
}
