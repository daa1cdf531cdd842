//! Weighted Hermite orthonormal functions
//! phi_k(x) = H_k(x) e^{-x^2/2} / (2^k k! sqrt(pi))^{1/2}.
//!
//! The Gaussian weight is folded into the starting value of the three-term
//! recurrence, so no unweighted polynomial value is ever formed; at edge
//! arguments those would overflow long before k reaches the matrix sizes of
//! interest.

use crate::specfun::{rescale, ScaledPair, SpecFunError, WeightedPolyValue};
// resolves f64 math through libm in no_std builds; under `cargo test`
// std is linked and its inherent methods shadow the trait
#[allow(unused_imports)]
use num_traits::Float;

const PI_POW_NEG_QUARTER: f64 = 0.7511255444649425; // pi^{-1/4}

/// phi_n and phi_{n-1} under a shared exponent.
///
/// The recurrence is
/// phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1},
/// started at phi_0 = pi^{-1/4} e^{-x^2/2} with the weight carried in
/// `log_scale`.
pub(crate) fn phi_pair(n: u32, x: f64) -> ScaledPair {
    let mut log_scale = -0.5 * x * x;
    let mut prev = 0.0; // phi_{-1}
    let mut cur = PI_POW_NEG_QUARTER; // phi_0 / exp(log_scale)
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        rescale(&mut cur, &mut prev, &mut log_scale);
    }
    ScaledPair {
        vn: cur,
        vnm1: prev,
        log_scale,
    }
}

/// phi_n, phi_{n-1} and their derivatives, all under one exponent.
/// phi_k' = sqrt(2k) phi_{k-1} - x phi_k.
pub(crate) fn phi_pair_with_derivatives(n: u32, x: f64) -> (ScaledPair, f64, f64) {
    debug_assert!(n >= 1);
    let pair = phi_pair(n, x);
    let nf = n as f64;
    // phi_{n-2} recovered from the recurrence that produced phi_n
    let vnm2 = if n >= 2 {
        ((2.0 / nf).sqrt() * x * pair.vnm1 - pair.vn) * (nf / (nf - 1.0)).sqrt()
    } else {
        0.0
    };
    let dn = (2.0 * nf).sqrt() * pair.vnm1 - x * pair.vn;
    let dnm1 = if n >= 2 {
        (2.0 * (nf - 1.0)).sqrt() * vnm2 - x * pair.vnm1
    } else {
        -x * pair.vnm1
    };
    (pair, dn, dnm1)
}

/// The weighted Hermite function phi_k(x).
pub fn hermite_phi(k: u32, x: f64) -> Result<WeightedPolyValue, SpecFunError> {
    if !x.is_finite() {
        return Err(SpecFunError::Domain("hermite_phi: argument must be finite"));
    }
    let pair = phi_pair(k, x);
    Ok(WeightedPolyValue {
        value: pair.vn,
        log_scale: pair.log_scale,
    })
}
