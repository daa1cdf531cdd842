//! Special functions: Airy, weighted Hermite and Laguerre orthonormal
//! functions, and their edge asymptotic expansions.

mod airy;
mod expansions;
pub(crate) mod hermite;
pub(crate) mod laguerre;

pub use airy::{airy, airy_contour, AiryValue};
pub use expansions::{laguerre_edge_expansion, pr_laguerre_expansion, LaguerreDegree};
pub use hermite::hermite_phi;
pub use laguerre::laguerre_weighted;

use core::fmt;
// resolves f64 math through libm in no_std builds; under `cargo test`
// std is linked and its inherent methods shadow the trait
#[allow(unused_imports)]
use num_traits::Float;

/// Errors of the special-function layer.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecFunError {
    /// Argument outside the supported domain.
    Domain(&'static str),
    /// An adaptive evaluation failed to converge; `delta` is the last
    /// observed change.
    NonConvergence { delta: f64 },
    /// Expansion order outside the implemented range.
    InvalidOrder { order: u8, max: u8 },
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecFunError::Domain(what) => write!(f, "{what}"),
            SpecFunError::NonConvergence { delta } => {
                write!(f, "quadrature did not converge (last change {delta:e})")
            }
            SpecFunError::InvalidOrder { order, max } => {
                write!(f, "expansion order {order} not in 0..={max}")
            }
        }
    }
}

impl core::error::Error for SpecFunError {}

/// An exponentially weighted polynomial value, optionally split as
/// `value * exp(log_scale)` so that deep under/overflow of the weight
/// cannot destroy the recurrence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedPolyValue {
    pub value: f64,
    pub log_scale: f64,
}

impl WeightedPolyValue {
    /// The plain `f64` value; underflows to zero (or overflows to
    /// infinity) only if the represented quantity itself leaves the f64
    /// range.
    pub fn collapsed(&self) -> f64 {
        if self.log_scale == 0.0 {
            return self.value;
        }
        // split the exponential so intermediate factors stay representable
        let half = (0.5 * self.log_scale).exp();
        self.value * half * half
    }
}

/// Two consecutive members of an orthonormal-function recurrence sharing a
/// common exponent: the true values are `vn * exp(log_scale)` and
/// `vnm1 * exp(log_scale)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ScaledPair {
    pub vn: f64,
    pub vnm1: f64,
    pub log_scale: f64,
}

/// Magnitude bound past which a running recurrence pair is renormalized.
const RESCALE_LIMIT: f64 = 1e140;
/// ln(2^466), the log of the exact power-of-two renormalization factor.
const RESCALE_LOG: f64 = 466.0 * core::f64::consts::LN_2;
const RESCALE_FACTOR: f64 = 5.242131296834937e-141; // 2^-466

/// Renormalize `(a, b)` into [1e-140, 1e140] when either grows too large,
/// accumulating the removed magnitude in `log_scale`.
#[inline]
pub(crate) fn rescale(a: &mut f64, b: &mut f64, log_scale: &mut f64) {
    while a.abs() > RESCALE_LIMIT || b.abs() > RESCALE_LIMIT {
        *a *= RESCALE_FACTOR;
        *b *= RESCALE_FACTOR;
        *log_scale += RESCALE_LOG;
    }
}
