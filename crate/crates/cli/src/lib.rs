//! IO, file formats and command implementations for the `edgeworth-rmt`
//! command line tool. The numerics live in `edgeworth-rmt-core`; this crate
//! only moves data in and out of files.

pub mod commands;
pub mod figures;
pub mod plot;
pub mod table_io;

/// Version line written at the top of every CSV this tool emits.
pub const CSV_HEADER: &str = "# edgeworth-rmt v1";

/// Environment variable pointing at a cached Painleve table CSV.
pub const TABLE_CACHE_ENV: &str = "EDGEWORTH_TABLE_CACHE";
