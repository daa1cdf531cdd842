//! Painleve table CSV format.
//!
//! Layout:
//!
//! ```text
//! # edgeworth-rmt v1
//! # painleve-table
//! s,q,qp,u0,u1,u2,v0,v1,w0,w1,i_int,j_int,f2
//! -10,1.5808...,...
//! ```
//!
//! Floats are written in Rust's shortest round-trip form, so a parsed table
//! is bit-identical to the one written.

use crate::{CSV_HEADER, TABLE_CACHE_ENV};
use anyhow::{bail, Context, Result};
use edgeworth_rmt_core::painleve::PainleveTable;
use std::fmt::Write as _;
use std::path::Path;

const COLUMNS: &str = "s,q,qp,u0,u1,u2,v0,v1,w0,w1,i_int,j_int,f2";

pub fn to_csv(table: &PainleveTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_HEADER}");
    let _ = writeln!(out, "# painleve-table");
    let _ = writeln!(out, "{COLUMNS}");
    for i in 0..table.len() {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            table.s()[i],
            table.q()[i],
            table.qp()[i],
            table.u0()[i],
            table.u1()[i],
            table.u2()[i],
            table.v0()[i],
            table.v1()[i],
            table.w0()[i],
            table.w1()[i],
            table.i_int()[i],
            table.j_int()[i],
            table.f2()[i],
        );
    }
    out
}

pub fn from_csv(text: &str) -> Result<PainleveTable> {
    let mut lines = text.lines();
    match lines.next() {
        Some(first) if first.trim() == CSV_HEADER => {}
        other => bail!("not an edgeworth-rmt CSV (first line {:?})", other),
    }
    let mut cols: Vec<Vec<f64>> = vec![Vec::new(); 13];
    let mut saw_names = false;
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_names {
            if line != COLUMNS {
                bail!("unexpected column header {line:?}");
            }
            saw_names = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 13 {
            bail!("expected 13 fields, got {} in {line:?}", fields.len());
        }
        for (k, f) in fields.iter().enumerate() {
            cols[k].push(f.parse::<f64>().with_context(|| format!("bad float {f:?}"))?);
        }
    }
    let mut it = cols.into_iter();
    let mut take = || it.next().unwrap();
    PainleveTable::from_columns(
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
        take(),
    )
    .map_err(|e| anyhow::anyhow!("invalid table: {e}"))
}

pub fn write_table(path: &Path, table: &PainleveTable) -> Result<()> {
    std::fs::write(path, to_csv(table))
        .with_context(|| format!("writing table to {}", path.display()))
}

pub fn read_table(path: &Path) -> Result<PainleveTable> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading table from {}", path.display()))?;
    from_csv(&text)
}

/// The standard table, honoring the `EDGEWORTH_TABLE_CACHE` cache file when
/// the variable is set: read it if present, build and populate it if not.
pub fn load_or_build() -> Result<PainleveTable> {
    match std::env::var_os(TABLE_CACHE_ENV) {
        Some(path) => {
            let path = std::path::PathBuf::from(path);
            if path.exists() {
                read_table(&path)
            } else {
                let table = PainleveTable::build_default()
                    .map_err(|e| anyhow::anyhow!("table build failed: {e}"))?;
                write_table(&path, &table)?;
                Ok(table)
            }
        }
        None => PainleveTable::build_default()
            .map_err(|e| anyhow::anyhow!("table build failed: {e}")),
    }
}
