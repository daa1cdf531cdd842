//! Command line front end: exact finite-n largest-eigenvalue CDFs of
//! GUE/LUE, the Tracy-Widom F2 table with its correction functions, and
//! verification sweeps of the finite-n expansion.

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeworth_rmt::commands::{self, OutputFormat};
use edgeworth_rmt_core::kernels::Ensemble;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "edgeworth-rmt",
    about = "Finite-n largest-eigenvalue distributions of GUE/LUE and their edge corrections",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnsembleArg {
    Gue,
    Lue,
}

impl From<EnsembleArg> for Ensemble {
    fn from(e: EnsembleArg) -> Ensemble {
        match e {
            EnsembleArg::Gue => Ensemble::Gue,
            EnsembleArg::Lue => Ensemble::Lue,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    PlotScript,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::PlotScript => OutputFormat::PlotScript,
        }
    }
}

#[derive(Args)]
struct EnsembleOpts {
    /// Ensemble family
    #[arg(long, value_enum)]
    ensemble: EnsembleArg,
    /// Matrix size
    #[arg(long)]
    n: u32,
    /// Laguerre parameter (LUE only)
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    alpha: f64,
    /// Tuning constant c_G or c_L
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    c: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Write the Painleve/Tracy-Widom table: s, q, u0, v0, w1, E_G, E_L, F2
    Tw2Table {
        #[arg(long, default_value_t = -8.0, allow_negative_numbers = true)]
        s_lo: f64,
        #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
        s_hi: f64,
        #[arg(long, default_value_t = 141)]
        count: usize,
        /// Tuning constant used in both E-function columns
        #[arg(long, default_value_t = 0.0)]
        c: f64,
        #[arg(long, default_value = "tw2_table.csv")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Reproduce one of the three comparison figures (CSV + plot script)
    Figure {
        /// 1 = GUE density, 2 = LUE density, 3 = weighted Laguerre function
        #[arg(long)]
        which: u8,
        #[arg(long, default_value_t = 40)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plot-script")]
        format: FormatArg,
    },
    /// Exact finite-n CDF at one scaled point s
    Exact {
        #[command(flatten)]
        ensemble: EnsembleOpts,
        /// Scaled edge coordinate
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Corrected expansion F2(1 + a u0 n^{-1/3} + b E n^{-2/3}) at one s
    Edgeworth {
        #[command(flatten)]
        ensemble: EnsembleOpts,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        /// Use the shared E-function on the circle c_G^2 + c_L^2 = 1/4
        #[arg(long, value_parser = ["universal", "per-ensemble"], default_value = "per-ensemble")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rate sweep: sup_s |exact - expansion| per n, with fitted slope
    Converge {
        #[arg(long, value_enum)]
        ensemble: EnsembleArg,
        /// Comma-separated matrix sizes, e.g. 10,20,40,80
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<u32>,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        c: f64,
        /// Expansion truncation order (0, 1 or 2)
        #[arg(long, default_value_t = 2)]
        order: u8,
        #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
        s_lo: f64,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        s_hi: f64,
        #[arg(long, default_value_t = 25)]
        s_count: usize,
        #[arg(long, default_value = "converge.csv")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Tw2Table {
            s_lo,
            s_hi,
            count,
            c,
            out,
            format,
        } => {
            let table = commands::acquire_table()?;
            let files = commands::cmd_tw2_table(&table, s_lo, s_hi, count, c, &out, format.into())?;
            for f in files {
                println!("wrote {}", f.display());
            }
        }
        Command::Figure { which, n, out, format } => {
            let out = out.unwrap_or_else(|| PathBuf::from(format!("figure{which}.csv")));
            let files = commands::cmd_figure(which, n, &out, format.into())?;
            for f in files {
                println!("wrote {}", f.display());
            }
        }
        Command::Exact { ensemble, s, out } => {
            let text = commands::cmd_exact(
                ensemble.ensemble.into(),
                ensemble.n,
                ensemble.alpha,
                ensemble.c,
                s,
                out.as_deref(),
            )?;
            print!("{text}");
        }
        Command::Edgeworth {
            ensemble,
            s,
            mode,
            out,
        } => {
            let table = commands::acquire_table()?;
            let text = commands::cmd_edgeworth(
                &table,
                ensemble.ensemble.into(),
                ensemble.n,
                ensemble.alpha,
                ensemble.c,
                s,
                mode == "universal",
                out.as_deref(),
            )?;
            print!("{text}");
        }
        Command::Converge {
            ensemble,
            n_list,
            alpha,
            c,
            order,
            s_lo,
            s_hi,
            s_count,
            out,
            format,
        } => {
            let table = commands::acquire_table()?;
            let files = commands::cmd_converge(
                &table,
                ensemble.into(),
                &n_list,
                alpha,
                c,
                order,
                s_lo,
                s_hi,
                s_count,
                &out,
                format.into(),
            )?;
            for f in files {
                println!("wrote {}", f.display());
            }
        }
    }
    Ok(())
}
