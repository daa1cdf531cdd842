//! Numerical core for finite-n largest-eigenvalue statistics of the Gaussian
//! and Laguerre Unitary Ensembles at the soft edge.
//!
//! The crate evaluates, in pure `f64` arithmetic with no runtime dependencies
//! beyond `libm`:
//!
//! * Airy functions and weighted Hermite/Laguerre orthonormal functions,
//!   together with their edge (Plancherel-Rotach type) expansions
//!   ([`specfun`]);
//! * the Hastings-McLeod solution of Painleve II, the Tracy-Widom
//!   distribution F2 and the auxiliary functions entering its finite-n
//!   correction terms ([`painleve`]);
//! * exact Christoffel-Darboux kernels for GUE_n/LUE_n, the Airy kernel, and
//!   their edge expansions ([`kernels`]);
//! * Fredholm determinants det(I - K) on (s, inf) by Nystrom discretization,
//!   giving exact finite-n largest-eigenvalue CDFs ([`fredholm`]);
//! * the corrected distribution F2(s) { 1 + a u0(s) n^{-1/3}
//!   + b E(s) n^{-2/3} } and rate-measurement harnesses ([`edgeworth`]).
//!
//! The crate is `no_std` (it allocates through `alloc`); all IO, file formats
//! and the command-line front end live in the companion `edgeworth-rmt`
//! crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod dd;
pub mod edgeworth;
pub mod fredholm;
mod gauss;
pub mod kernels;
mod linalg;
pub mod painleve;
pub mod specfun;

pub use edgeworth::{
    convergence_report, edgeworth_cdf, transform, CorrectionMode, EdgeworthError,
    ExpansionResult, RateSummary, TunedConstants,
};
pub use fredholm::{exact_cdf, nystrom_det, FredholmError, QuadratureRule};
pub use kernels::{
    airy_kernel, hermite_kernel_exact, laguerre_kernel_exact, rho1_expansion, EdgeTransform,
    Ensemble, EnsembleSpec, SpecError,
};
pub use painleve::{
    auxiliary_integrals, e_function, solve_hastings_mcleod, tw2_cdf, EKind, PainleveError,
    PainleveTable,
};
pub use specfun::{
    airy, airy_contour, hermite_phi, laguerre_weighted, pr_laguerre_expansion, AiryValue,
    SpecFunError, WeightedPolyValue,
};
