//! Command implementations. Each produces deterministic CSV text (and
//! optionally a plot script) so reruns with identical configuration write
//! bit-identical files.

use crate::{figures, plot, table_io, CSV_HEADER};
use anyhow::{bail, Context, Result};
use edgeworth_rmt_core::edgeworth::{
    convergence_report, edgeworth_cdf_truncated, CorrectionMode,
};
use edgeworth_rmt_core::kernels::{Ensemble, EnsembleSpec};
use edgeworth_rmt_core::painleve::{EKind, PainleveTable};
use edgeworth_rmt_core::{exact_cdf, transform};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    PlotScript,
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn script_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("py")
}

fn csv_file_name(csv_path: &Path) -> String {
    csv_path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "data.csv".into())
}

/// `tw2-table`: s, q, u0, v0, w1, E_G, E_L, F2 over an s-grid.
pub fn cmd_tw2_table(
    table: &PainleveTable,
    s_lo: f64,
    s_hi: f64,
    count: usize,
    c: f64,
    out: &Path,
    format: OutputFormat,
) -> Result<Vec<PathBuf>> {
    if count < 2 || !(s_lo < s_hi) {
        bail!("need at least 2 points and s_lo < s_hi");
    }
    let mut text = String::new();
    let _ = writeln!(text, "{CSV_HEADER}");
    let _ = writeln!(text, "# tw2-table c={c} range=[{s_lo},{s_hi}] count={count}");
    let _ = writeln!(text, "s,q,u0,v0,w1,E_G,E_L,F2");
    let lift = |r: Result<f64, edgeworth_rmt_core::painleve::PainleveError>| {
        r.map_err(|e| anyhow::anyhow!("{e}"))
    };
    for i in 0..count {
        let s = s_lo + (s_hi - s_lo) * i as f64 / (count - 1) as f64;
        let q = lift(table.q_at(s))?;
        let u0 = lift(table.u0_at(s))?;
        let v0 = lift(table.v0_at(s))?;
        let w1 = lift(table.w1_at(s))?;
        let eg = lift(table.e_function(s, EKind::G, c))?;
        let el = lift(table.e_function(s, EKind::L, c))?;
        let f2 = lift(table.f2_at(s))?;
        let _ = writeln!(text, "{s},{q},{u0},{v0},{w1},{eg},{el},{f2}");
    }
    let mut written = vec![out.to_path_buf()];
    write_file(out, &text)?;
    if format == OutputFormat::PlotScript {
        let script = plot::table_script(&csv_file_name(out));
        let spath = script_path(out);
        write_file(&spath, &script)?;
        written.push(spath);
    }
    Ok(written)
}

/// `figure --which {1|2|3}`: the captioned comparison curves plus plot
/// script; fails if the corrected curve does not beat the first-order one.
pub fn cmd_figure(which: u8, n: u32, out: &Path, format: OutputFormat) -> Result<Vec<PathBuf>> {
    let data = figures::figure_data(which, n)?;
    let mut text = String::new();
    let _ = writeln!(text, "{CSV_HEADER}");
    let _ = writeln!(
        text,
        "# figure {which} n={n}; sup errors: first-order {:e}, corrected {:e}",
        data.sup_err_first, data.sup_err_corrected
    );
    let _ = writeln!(text, "{},exact,first_order,corrected", data.x_name);
    for &(x, exact, first, corrected) in &data.rows {
        let _ = writeln!(text, "{x},{exact},{first},{corrected}");
    }
    let mut written = vec![out.to_path_buf()];
    write_file(out, &text)?;
    if format == OutputFormat::PlotScript {
        let title = match which {
            1 => "GUE edge density, n = 40, c_G = 0",
            2 => "LUE edge density, n = 40, alpha = 1/2, c_L = 0",
            _ => "weighted Laguerre function at the edge, n = 40, alpha = -c = 1",
        };
        let script = plot::figure_script(&csv_file_name(out), data.x_name, title);
        let spath = script_path(out);
        write_file(&spath, &script)?;
        written.push(spath);
    }
    println!(
        "figure {which}: sup error first-order {:.3e}, corrected {:.3e}",
        data.sup_err_first, data.sup_err_corrected
    );
    if !data.corrected_improves() {
        bail!(
            "corrected approximation did not improve on the first-order one: {:e} >= {:e}",
            data.sup_err_corrected,
            data.sup_err_first
        );
    }
    Ok(written)
}

fn build_spec(ensemble: Ensemble, n: u32, alpha: f64, c: f64) -> Result<EnsembleSpec> {
    let spec = match ensemble {
        Ensemble::Gue => EnsembleSpec::gue(n, c),
        Ensemble::Lue => EnsembleSpec::lue(n, alpha, c),
    };
    spec.map_err(|e| anyhow::anyhow!("bad ensemble parameters: {e}"))
}

/// `exact`: one row s, t, F_{n,2}(t).
pub fn cmd_exact(
    ensemble: Ensemble,
    n: u32,
    alpha: f64,
    c: f64,
    s: f64,
    out: Option<&Path>,
) -> Result<String> {
    let spec = build_spec(ensemble, n, alpha, c)?;
    let t = transform(&spec, s);
    let f = exact_cdf(&spec, t).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut text = String::new();
    let _ = writeln!(text, "{CSV_HEADER}");
    let _ = writeln!(text, "s,t,exact_cdf");
    let _ = writeln!(text, "{s},{t},{f}");
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    Ok(text)
}

/// `edgeworth`: one decomposed expansion row.
pub fn cmd_edgeworth(
    table: &PainleveTable,
    ensemble: Ensemble,
    n: u32,
    alpha: f64,
    c: f64,
    s: f64,
    universal: bool,
    out: Option<&Path>,
) -> Result<String> {
    let spec = build_spec(ensemble, n, alpha, c)?;
    let mode = if universal {
        CorrectionMode::Universal
    } else {
        CorrectionMode::PerEnsemble
    };
    let r = edgeworth_cdf_truncated(&spec, s, table, mode, 2)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut text = String::new();
    let _ = writeln!(text, "{CSV_HEADER}");
    let _ = writeln!(text, "s,t,leading,corr1,corr2,total,overshoots");
    let _ = writeln!(
        text,
        "{},{},{},{},{},{},{}",
        r.s,
        transform(&spec, s),
        r.leading,
        r.corr1,
        r.corr2,
        r.total,
        r.overshoots()
    );
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    Ok(text)
}

/// `converge`: per-n sup errors and fitted slope.
#[allow(clippy::too_many_arguments)]
pub fn cmd_converge(
    table: &PainleveTable,
    ensemble: Ensemble,
    n_list: &[u32],
    alpha: f64,
    c: f64,
    order: u8,
    s_lo: f64,
    s_hi: f64,
    s_count: usize,
    out: &Path,
    format: OutputFormat,
) -> Result<Vec<PathBuf>> {
    if s_count < 2 || !(s_lo < s_hi) {
        bail!("need at least 2 s-points and s_lo < s_hi");
    }
    let base = build_spec(ensemble, *n_list.iter().min().unwrap_or(&2), alpha, c)?;
    let s_grid: Vec<f64> = (0..s_count)
        .map(|i| s_lo + (s_hi - s_lo) * i as f64 / (s_count - 1) as f64)
        .collect();
    let report = convergence_report(&base, n_list, &s_grid, table, order)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut text = String::new();
    let _ = writeln!(text, "{CSV_HEADER}");
    let _ = writeln!(
        text,
        "# converge {:?} alpha={alpha} c={c} order={order} s=[{s_lo},{s_hi}]x{s_count}",
        ensemble
    );
    let _ = writeln!(text, "# slope={}", report.slope);
    let _ = writeln!(text, "n,sup_err");
    for &(n, e) in &report.per_n {
        let _ = writeln!(text, "{n},{e}");
    }
    let mut written = vec![out.to_path_buf()];
    write_file(out, &text)?;
    if format == OutputFormat::PlotScript {
        let script = plot::converge_script(&csv_file_name(out));
        let spath = script_path(out);
        write_file(&spath, &script)?;
        written.push(spath);
    }
    println!("converge: slope {:.4}", report.slope);
    Ok(written)
}

/// Shared table acquisition for the commands that need one.
pub fn acquire_table() -> Result<PainleveTable> {
    table_io::load_or_build()
}
