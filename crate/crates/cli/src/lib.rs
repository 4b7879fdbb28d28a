//! Command-line front end for `bessel-means-core`: JSON run configurations,
//! batch evaluation of shifts, means and EPD solutions, deterministic CSV/JSON
//! tables and the `verify` suite.

pub mod commands;
pub mod config;
pub mod error;
pub mod registry;
pub mod table;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use commands::run;
pub use config::{Command, OutputFormat, RunConfig};
pub use error::CliError;
pub use table::Table;

/// Caps parallelism.
pub const THREADS_ENV: &str = "BESSEL_MEANS_THREADS";

/// Sizes the global rayon pool from [`THREADS_ENV`] when it is set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads = value
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::config("BESSEL_MEANS_THREADS", format!("expected a positive integer, got `{value}`")))?;
    // a second initialization (tests in one process) keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Runs `config` and writes its table to `output_path` or stdout.
///
/// A `verify` run writes the manifest before reporting failures.
pub fn execute(config: &RunConfig) -> Result<Table, CliError> {
    let table = run(config)?;
    match &config.output_path {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Output(format!("{path}: {e}")))?;
            let mut out = BufWriter::new(file);
            table.write(config.output_format, &mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            table.write(config.output_format, stdout.lock())?;
        }
    }
    if config.command == Command::Verify {
        let failed = table
            .rows
            .iter()
            .filter(|r| matches!(r.last(), Some(table::Cell::Text(s)) if s != "PASS"))
            .count();
        if failed > 0 {
            return Err(CliError::VerificationFailed {
                failed,
                total: table.rows.len(),
            });
        }
    }
    Ok(table)
}
