//! The corrected largest-eigenvalue distribution
//! F2(s) { 1 + a u0(s) n^{-1/3} + b E(s) n^{-2/3} } and the rate harness
//! that compares it against the exact Fredholm CDFs.

use crate::fredholm::{exact_cdf, FredholmError};
use crate::kernels::{EdgeTransform, Ensemble, EnsembleSpec};
use crate::painleve::{EKind, PainleveError, PainleveTable};
use alloc::vec::Vec;
use core::fmt;
// resolves f64 math through libm in no_std builds; under `cargo test`
// std is linked and its inherent methods shadow the trait
#[allow(unused_imports)]
use num_traits::Float;

const CBRT2: f64 = 1.2599210498948732; // 2^{1/3}
const CBRT4: f64 = 1.5874010519681994; // 2^{2/3}

#[derive(Clone, Debug, PartialEq)]
pub enum EdgeworthError {
    Painleve(PainleveError),
    Fredholm(FredholmError),
    Domain(&'static str),
}

impl fmt::Display for EdgeworthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeworthError::Painleve(e) => write!(f, "{e}"),
            EdgeworthError::Fredholm(e) => write!(f, "{e}"),
            EdgeworthError::Domain(what) => write!(f, "{what}"),
        }
    }
}

impl core::error::Error for EdgeworthError {}

impl From<PainleveError> for EdgeworthError {
    fn from(e: PainleveError) -> Self {
        EdgeworthError::Painleve(e)
    }
}

impl From<FredholmError> for EdgeworthError {
    fn from(e: FredholmError) -> Self {
        EdgeworthError::Fredholm(e)
    }
}

/// Whether the second-order term uses the per-ensemble E-function or the
/// shared one on the circle c_G^2 + c_L^2 = 1/4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrectionMode {
    PerEnsemble,
    Universal,
}

/// The correction constants attached to an ensemble.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TunedConstants {
    pub c_g: f64,
    pub c_l: f64,
    /// first-order amplitude: c_G for GUE, 2^{2/3} c_L for LUE
    pub a: f64,
    /// second-order amplitude: -1/20 for GUE, 2^{1/3}/10 for LUE
    pub b: f64,
}

impl TunedConstants {
    /// Constants in per-ensemble form; the partner constant is left on the
    /// circle only if the caller asks for universal mode.
    pub fn per_ensemble(spec: &EnsembleSpec) -> TunedConstants {
        match spec.kind {
            Ensemble::Gue => TunedConstants {
                c_g: spec.c,
                c_l: f64::NAN,
                a: spec.c,
                b: -1.0 / 20.0,
            },
            Ensemble::Lue => TunedConstants {
                c_g: f64::NAN,
                c_l: spec.c,
                a: CBRT4 * spec.c,
                b: CBRT2 / 10.0,
            },
        }
    }

    /// Universal-mode constants: `spec.c` is interpreted as the ensemble's
    /// own tuning constant on the circle, and the partner is solved from
    /// c_G^2 + c_L^2 = 1/4.
    pub fn universal(spec: &EnsembleSpec) -> Result<TunedConstants, EdgeworthError> {
        if spec.c.abs() > 0.5 {
            return Err(EdgeworthError::Domain(
                "universal mode needs |c| <= 1/2 on the circle c_G^2 + c_L^2 = 1/4",
            ));
        }
        let partner = (0.25 - spec.c * spec.c).sqrt();
        let (c_g, c_l) = match spec.kind {
            Ensemble::Gue => (spec.c, partner),
            Ensemble::Lue => (partner, spec.c),
        };
        let mut k = Self::per_ensemble(spec);
        k.c_g = c_g;
        k.c_l = c_l;
        Ok(k)
    }
}

/// One evaluation of the corrected distribution, term by term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpansionResult {
    pub s: f64,
    /// F2(s)
    pub leading: f64,
    /// a u0(s) F2(s) n^{-1/3}
    pub corr1: f64,
    /// b E(s) F2(s) n^{-2/3}
    pub corr2: f64,
    pub total: f64,
}

impl ExpansionResult {
    /// The expansion is not itself a CDF; totals slightly outside [0, 1]
    /// are possible and flagged rather than clamped.
    pub fn overshoots(&self) -> bool {
        self.total < 0.0 || self.total > 1.0
    }
}

/// The edge scaling t(s) of the ensemble.
pub fn transform(spec: &EnsembleSpec, s: f64) -> f64 {
    EdgeTransform::new(*spec).t_of_s(s)
}

/// Inverse edge scaling s(t).
pub fn inverse_transform(spec: &EnsembleSpec, t: f64) -> f64 {
    EdgeTransform::new(*spec).s_of_t(t)
}

/// F2(s) { 1 + a u0 n^{-1/3} + b E n^{-2/3} }, decomposed.
pub fn edgeworth_cdf(
    spec: &EnsembleSpec,
    s: f64,
    table: &PainleveTable,
    mode: CorrectionMode,
) -> Result<ExpansionResult, EdgeworthError> {
    edgeworth_cdf_truncated(spec, s, table, mode, 2)
}

/// Same, truncated at `order` in 0..=2 (0 = plain F2).
pub fn edgeworth_cdf_truncated(
    spec: &EnsembleSpec,
    s: f64,
    table: &PainleveTable,
    mode: CorrectionMode,
    order: u8,
) -> Result<ExpansionResult, EdgeworthError> {
    if order > 2 {
        return Err(EdgeworthError::Domain("expansion order must be 0..=2"));
    }
    let constants = match mode {
        CorrectionMode::PerEnsemble => TunedConstants::per_ensemble(spec),
        CorrectionMode::Universal => TunedConstants::universal(spec)?,
    };
    let f2 = table.f2_at(s)?;
    let nf = spec.n as f64;
    let ncbrt = nf.powf(1.0 / 3.0);

    let corr1 = if order >= 1 {
        constants.a * table.u0_at(s)? * f2 / ncbrt
    } else {
        0.0
    };
    let corr2 = if order >= 2 {
        let e = match (mode, spec.kind) {
            (CorrectionMode::PerEnsemble, Ensemble::Gue) => {
                table.e_function(s, EKind::G, spec.c)?
            }
            (CorrectionMode::PerEnsemble, Ensemble::Lue) => {
                table.e_function(s, EKind::L, spec.c)?
            }
            // the universal E is parametrized by c_G; identical for both
            // branches on the circle
            (CorrectionMode::Universal, _) => {
                table.e_function(s, EKind::Universal, constants.c_g)?
            }
        };
        constants.b * e * f2 / (ncbrt * ncbrt)
    } else {
        0.0
    };
    Ok(ExpansionResult {
        s,
        leading: f2,
        corr1,
        corr2,
        total: f2 + corr1 + corr2,
    })
}

/// Per-n sup errors of |exact - expansion| over an s-grid, with the fitted
/// log-log slope.
#[derive(Clone, Debug)]
pub struct RateSummary {
    pub per_n: Vec<(u32, f64)>,
    pub slope: f64,
}

/// Sweep matrix sizes, measuring sup_s |exact_cdf(t(s)) - expansion total|.
///
/// `base` fixes kind, alpha and c; `order` truncates the expansion.
pub fn convergence_report(
    base: &EnsembleSpec,
    n_list: &[u32],
    s_grid: &[f64],
    table: &PainleveTable,
    order: u8,
) -> Result<RateSummary, EdgeworthError> {
    if n_list.len() < 3 {
        return Err(EdgeworthError::Domain(
            "need at least 3 matrix sizes for a rate fit",
        ));
    }
    if s_grid.is_empty() {
        return Err(EdgeworthError::Domain("empty s grid"));
    }
    let mut per_n = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let spec = EnsembleSpec { n, ..*base };
        let tr = EdgeTransform::new(spec);
        let mut sup = 0.0f64;
        for &s in s_grid {
            let exact = exact_cdf(&spec, tr.t_of_s(s))?;
            let approx =
                edgeworth_cdf_truncated(&spec, s, table, CorrectionMode::PerEnsemble, order)?;
            sup = sup.max((exact - approx.total).abs());
        }
        per_n.push((n, sup));
    }
    let logs_n: Vec<f64> = per_n.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let logs_e: Vec<f64> = per_n.iter().map(|&(_, e)| e.ln()).collect();
    Ok(RateSummary {
        slope: fit_slope(&logs_n, &logs_e),
        per_n,
    })
}

/// Least-squares slope of y against x.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (&xi, &yi) in x.iter().zip(y.iter()) {
        num += (xi - mx) * (yi - my);
        den += (xi - mx) * (xi - mx);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> PainleveTable {
        PainleveTable::build(-7.0, 7.0, 0.005, 1e-12).unwrap()
    }

    #[test]
    fn decomposition_sums_exactly() {
        let t = table();
        let spec = EnsembleSpec::gue(30, 0.3).unwrap();
        let r = edgeworth_cdf(&spec, -1.5, &t, CorrectionMode::PerEnsemble).unwrap();
        assert_eq!(r.total, r.leading + r.corr1 + r.corr2);
        assert!(r.leading > 0.0 && r.leading <= 1.0);
        assert!(!r.overshoots());
    }

    #[test]
    fn right_end_saturates_to_one() {
        let t = table();
        let spec = EnsembleSpec::gue(30, 0.3).unwrap();
        let r = edgeworth_cdf(&spec, t.s_max(), &t, CorrectionMode::PerEnsemble).unwrap();
        assert!((r.total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_tuning_kills_first_order() {
        let t = table();
        for spec in [
            EnsembleSpec::gue(25, 0.0).unwrap(),
            EnsembleSpec::lue(25, 0.5, 0.0).unwrap(),
        ] {
            let r = edgeworth_cdf(&spec, -2.0, &t, CorrectionMode::PerEnsemble).unwrap();
            assert_eq!(r.corr1, 0.0);
            assert!(r.corr2 != 0.0);
        }
    }

    #[test]
    fn universal_mode_agrees_across_ensembles() {
        let t = table();
        // (c_G, c_L) = (0.3, 0.4): the E-factor must coincide
        let g = EnsembleSpec::gue(40, 0.3).unwrap();
        let l = EnsembleSpec::lue(40, 0.5, 0.4).unwrap();
        let s = -1.0;
        let rg = edgeworth_cdf(&g, s, &t, CorrectionMode::Universal).unwrap();
        let rl = edgeworth_cdf(&l, s, &t, CorrectionMode::Universal).unwrap();
        // E values equal; corr2 differ only through b and the shared F2
        let eg = rg.corr2 / (-1.0 / 20.0);
        let el = rl.corr2 / (CBRT2 / 10.0);
        assert!((eg - el).abs() < 1e-12 * eg.abs().max(1.0));
        // and universal == per-ensemble for the matching kappa
        let rp = edgeworth_cdf(&g, s, &t, CorrectionMode::PerEnsemble).unwrap();
        assert!((rg.total - rp.total).abs() < 1e-15);
    }

    #[test]
    fn universal_mode_rejects_large_c() {
        let t = table();
        let spec = EnsembleSpec::gue(40, 0.7).unwrap();
        assert!(edgeworth_cdf(&spec, 0.0, &t, CorrectionMode::Universal).is_err());
    }

    #[test]
    fn tuned_constants_values() {
        let g = TunedConstants::per_ensemble(&EnsembleSpec::gue(10, 0.0).unwrap());
        assert_eq!(g.a, 0.0);
        assert_eq!(g.b, -0.05);
        let l = TunedConstants::per_ensemble(&EnsembleSpec::lue(10, 0.5, 0.0).unwrap());
        assert_eq!(l.a, 0.0);
        assert!((l.b - CBRT2 / 10.0).abs() < 1e-16);
    }

    #[test]
    fn expansion_approaches_f2_pointwise() {
        let t = table();
        let s = -1.0;
        let mut prev = f64::INFINITY;
        for n in [10u32, 40, 160, 640] {
            let spec = EnsembleSpec::gue(n, 0.3).unwrap();
            let r = edgeworth_cdf(&spec, s, &t, CorrectionMode::PerEnsemble).unwrap();
            let gap = (r.total - r.leading).abs();
            assert!(gap < prev + 1e-8);
            prev = gap;
        }
    }

    #[test]
    fn slope_fit_is_exact_on_powers() {
        let x = [1.0f64, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| -1.5 * v + 0.3).collect();
        assert!((fit_slope(&x, &y) + 1.5).abs() < 1e-13);
    }

    #[test]
    fn report_needs_enough_points() {
        let t = table();
        let spec = EnsembleSpec::gue(10, 0.0).unwrap();
        assert!(convergence_report(&spec, &[10, 20], &[0.0], &t, 2).is_err());
        assert!(convergence_report(&spec, &[10, 20, 40], &[], &t, 2).is_err());
    }
}
