//! Hastings-McLeod boundary-value solver.
//!
//! q'' = s q + 2 q^3 is discretized by the Numerov scheme on a uniform grid
//! and solved by damped Newton iteration. Shooting from either side is
//! hopeless here: integrating towards -inf, the solution family around the
//! Hastings-McLeod branch separates at rate exp((2 sqrt 2 / 3) |s|^{3/2}),
//! which amplifies f64 rounding past O(1) before s = -10. The two-point
//! formulation pins the branch from both ends instead:
//!
//! * right: q(s_max) = Ai(s_max) (the connection error there is
//!   O(e^{-(4/3) s_max^{3/2}}), far below double precision);
//! * left: the Robin condition q'/q = d/ds log of the s -> -inf asymptote
//!   sqrt(-s/2) (1 + s^{-3}/8 - (73/128) s^{-6} + (10657/1024) s^{-9}),
//!   applied through a one-sided 4th-order difference.

use crate::linalg::Banded;
use crate::painleve::PainleveError;
use crate::specfun::airy;
use alloc::vec;
use alloc::vec::Vec;
// resolves f64 math through libm in no_std builds; under `cargo test`
// std is linked and its inherent methods shadow the trait
#[allow(unused_imports)]
use num_traits::Float;

pub(crate) struct SolvedGrid {
    pub s: Vec<f64>,
    pub q: Vec<f64>,
    pub qp: Vec<f64>,
}

/// Log-derivative of the left asymptote at s (s << -1).
fn left_log_derivative(s: f64) -> f64 {
    let s3 = s.powi(3);
    let u = 1.0 + 1.0 / (8.0 * s3) - 73.0 / (128.0 * s3 * s3) + 10657.0 / (1024.0 * s3 * s3 * s3);
    let du = -3.0 / (8.0 * s3 * s) + 438.0 / (128.0 * s3 * s3 * s)
        - 95913.0 / (1024.0 * s3 * s3 * s3 * s);
    1.0 / (2.0 * s) + du / u
}

/// Smooth initial guess: Ai on the right, sqrt(-s/2) on the left, blended
/// over s in [-2.5, -0.5].
fn initial_guess(s: &[f64]) -> Result<Vec<f64>, PainleveError> {
    let mut q = Vec::with_capacity(s.len());
    for &sv in s {
        let ai = airy(sv)
            .map_err(|_| PainleveError::Domain("grid point outside Airy range"))?
            .ai;
        let left = if sv < 0.0 { (-sv / 2.0).sqrt() } else { 0.0 };
        let w = ((-sv - 0.5) / 2.0).clamp(0.0, 1.0);
        let w = w * w * (3.0 - 2.0 * w);
        q.push((1.0 - w) * ai + w * left);
    }
    Ok(q)
}

pub(crate) fn solve(
    s_min: f64,
    s_max: f64,
    n_panels: usize,
    tol: f64,
) -> Result<SolvedGrid, PainleveError> {
    let n = n_panels; // grid has n+1 points
    let h = (s_max - s_min) / n as f64;
    let s: Vec<f64> = (0..=n).map(|i| s_min + h * i as f64).collect();
    let mut q = initial_guess(&s)?;

    let robin = left_log_derivative(s_min);
    let ai_right = airy(s_max)
        .map_err(|_| PainleveError::Domain("s_max outside Airy range"))?
        .ai;

    let f = |sv: f64, qv: f64| sv * qv + 2.0 * qv * qv * qv;
    let fq = |sv: f64, qv: f64| sv + 6.0 * qv * qv;
    let residual = |q: &[f64]| -> Vec<f64> {
        let mut r = vec![0.0; n + 1];
        for i in 1..n {
            let fm = f(s[i - 1], q[i - 1]);
            let f0 = f(s[i], q[i]);
            let fp = f(s[i + 1], q[i + 1]);
            r[i] = q[i - 1] - 2.0 * q[i] + q[i + 1] - h * h / 12.0 * (fm + 10.0 * f0 + fp);
        }
        let d5 = (-25.0 * q[0] + 48.0 * q[1] - 36.0 * q[2] + 16.0 * q[3] - 3.0 * q[4])
            / (12.0 * h);
        r[0] = d5 - robin * q[0];
        r[n] = q[n] - ai_right;
        r
    };
    let max_abs = |r: &[f64]| r.iter().fold(0.0f64, |m, &v| m.max(v.abs()));

    let mut rnorm = max_abs(&residual(&q));
    let mut iterations = 0usize;
    for _ in 0..40 {
        if rnorm < tol {
            break;
        }
        iterations += 1;
        let mut jac = Banded::zeros(n + 1, 1, 4);
        jac.set(0, 0, -25.0 / (12.0 * h) - robin);
        jac.set(0, 1, 48.0 / (12.0 * h));
        jac.set(0, 2, -36.0 / (12.0 * h));
        jac.set(0, 3, 16.0 / (12.0 * h));
        jac.set(0, 4, -3.0 / (12.0 * h));
        for i in 1..n {
            jac.set(i, i - 1, 1.0 - h * h / 12.0 * fq(s[i - 1], q[i - 1]));
            jac.set(i, i, -2.0 - 10.0 * h * h / 12.0 * fq(s[i], q[i]));
            jac.set(i, i + 1, 1.0 - h * h / 12.0 * fq(s[i + 1], q[i + 1]));
        }
        jac.set(n, n, 1.0);

        let mut delta: Vec<f64> = residual(&q).iter().map(|r| -r).collect();
        if !jac.solve(&mut delta) {
            return Err(PainleveError::Convergence {
                residual: rnorm,
                iterations,
            });
        }
        // damped step: halve until the residual norm actually drops
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial: Vec<f64> = q
                .iter()
                .zip(delta.iter())
                .map(|(&qi, &di)| qi + lambda * di)
                .collect();
            let rt = max_abs(&residual(&trial));
            if rt < (1.0 - 0.25 * lambda) * rnorm || rt < tol {
                q = trial;
                rnorm = rt;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(PainleveError::Convergence {
                residual: rnorm,
                iterations,
            });
        }
    }
    if rnorm >= tol {
        return Err(PainleveError::Convergence {
            residual: rnorm,
            iterations,
        });
    }

    let qp = derivative_7point(&q, h);
    Ok(SolvedGrid { s, q, qp })
}

/// 6th-order first derivative on a uniform grid, one-sided at the ends.
pub(crate) fn derivative_7point(y: &[f64], h: f64) -> Vec<f64> {
    let n = y.len();
    debug_assert!(n >= 7);
    let mut d = vec![0.0; n];
    let central = [-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0];
    for i in 3..n - 3 {
        let mut acc = 0.0;
        for (k, c) in central.iter().enumerate() {
            acc += c * y[i - 3 + k];
        }
        d[i] = acc / (60.0 * h);
    }
    let forward = [-147.0, 360.0, -450.0, 400.0, -225.0, 72.0, -10.0];
    for i in 0..3 {
        let mut acc = 0.0;
        for (k, c) in forward.iter().enumerate() {
            acc += c * y[i + k];
        }
        d[i] = acc / (60.0 * h);
        // mirrored stencil at the right end
        let j = n - 1 - i;
        let mut acc = 0.0;
        for (k, c) in forward.iter().enumerate() {
            acc += c * y[j - k];
        }
        d[j] = -acc / (60.0 * h);
    }
    d
}
