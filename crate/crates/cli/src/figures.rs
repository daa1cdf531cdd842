//! Data behind the three comparison figures: exact quantity, first-order
//! (Airy) approximation, and the corrected approximation, sampled on the
//! plotted window.
//!
//! 1. GUE one-point density at the edge, c_G = 0, n = 40;
//! 2. LUE one-point density at the edge, c_L = 0, alpha = 1/2, n = 40;
//! 3. the weighted Laguerre function e^{-xi^2/2} L_n^a(xi^2) against its
//!    leading and order-3 edge expansions, alpha = -c = 1, n = 40.

use anyhow::{bail, Result};
use edgeworth_rmt_core::kernels::{rho1_expansion, scaled_exact_kernel, EnsembleSpec};
use edgeworth_rmt_core::specfun::{laguerre_weighted, pr_laguerre_expansion};

pub struct FigureData {
    pub which: u8,
    /// name of the abscissa column
    pub x_name: &'static str,
    /// (x, exact, first-order, corrected)
    pub rows: Vec<(f64, f64, f64, f64)>,
    pub sup_err_first: f64,
    pub sup_err_corrected: f64,
}

impl FigureData {
    /// The in-run acceptance condition of every figure: the corrected curve
    /// must beat the plain Airy one in sup norm on the window.
    pub fn corrected_improves(&self) -> bool {
        self.sup_err_corrected < self.sup_err_first
    }
}

pub fn figure_data(which: u8, n: u32) -> Result<FigureData> {
    match which {
        1 => density_figure(which, EnsembleSpec::gue(n, 0.0)?, -4.0, 2.0, 121),
        2 => density_figure(which, EnsembleSpec::lue(n, 0.5, 0.0)?, -4.0, 2.0, 121),
        3 => laguerre_function_figure(n, 1.0, -1.0, -4.0, 4.0, 161),
        other => bail!("figure {other} does not exist; use 1, 2 or 3"),
    }
}

fn density_figure(
    which: u8,
    spec: EnsembleSpec,
    lo: f64,
    hi: f64,
    count: usize,
) -> Result<FigureData> {
    let mut rows = Vec::with_capacity(count);
    let mut sup_first = 0.0f64;
    let mut sup_corr = 0.0f64;
    for i in 0..count {
        let x = lo + (hi - lo) * i as f64 / (count - 1) as f64;
        let exact = scaled_exact_kernel(&spec, x, x);
        let first = rho1_expansion(&spec, x, 0);
        let corrected = rho1_expansion(&spec, x, 2);
        sup_first = sup_first.max((exact - first).abs());
        sup_corr = sup_corr.max((exact - corrected).abs());
        rows.push((x, exact, first, corrected));
    }
    Ok(FigureData {
        which,
        x_name: "X",
        rows,
        sup_err_first: sup_first,
        sup_err_corrected: sup_corr,
    })
}

fn laguerre_function_figure(
    n: u32,
    alpha: f64,
    c: f64,
    lo: f64,
    hi: f64,
    count: usize,
) -> Result<FigureData> {
    let ln = (4.0 * n as f64 + 2.0 * alpha + 2.0 * c).sqrt();
    let scale = 2.0f64.powf(2.0 / 3.0) * (n as f64).powf(1.0 / 6.0);
    let mut rows = Vec::with_capacity(count);
    let mut sup_first = 0.0f64;
    let mut sup_corr = 0.0f64;
    for i in 0..count {
        let t = lo + (hi - lo) * i as f64 / (count - 1) as f64;
        let xi = ln + t / scale;
        let exact = laguerre_weighted(n, alpha, xi * xi)
            .map_err(|e| anyhow::anyhow!("{e}"))?
            .collapsed();
        let first = pr_laguerre_expansion(n, alpha, c, t, 0).map_err(|e| anyhow::anyhow!("{e}"))?;
        let corrected =
            pr_laguerre_expansion(n, alpha, c, t, 3).map_err(|e| anyhow::anyhow!("{e}"))?;
        sup_first = sup_first.max((exact - first).abs());
        sup_corr = sup_corr.max((exact - corrected).abs());
        rows.push((t, exact, first, corrected));
    }
    Ok(FigureData {
        which: 3,
        x_name: "t",
        rows,
        sup_err_first: sup_first,
        sup_err_corrected: sup_corr,
    })
}
