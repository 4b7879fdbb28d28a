use std::path::PathBuf;
use std::process::ExitCode;

use bessel_means::config::Reading;
use bessel_means::{configure_threads, execute, CliError, Command, OutputFormat, RunConfig};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, ValueEnum)]
enum CommandArg {
    Shift,
    Mean,
    IteratedMean,
    EpdSolve,
    AsgeirssonCheck,
    Verify,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Self {
        match c {
            CommandArg::Shift => Command::Shift,
            CommandArg::Mean => Command::Mean,
            CommandArg::IteratedMean => Command::IteratedMean,
            CommandArg::EpdSolve => Command::EpdSolve,
            CommandArg::AsgeirssonCheck => Command::AsgeirssonCheck,
            CommandArg::Verify => Command::Verify,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReadingArg {
    Ek,
    T,
    T2,
}

/// Generalized Bessel translations, weighted spherical means and EPD solvers.
///
/// Options given on the command line override the values in the config file.
#[derive(Parser)]
#[command(name = "bessel-means", version)]
struct Cli {
    command: CommandArg,

    /// JSON run configuration; defaults are used for missing keys
    #[arg(long)]
    config: Option<PathBuf>,

    /// Multi-index, comma separated (also sets the dimension)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    gamma: Option<Vec<f64>>,

    /// EPD parameter
    #[arg(long, allow_negative_numbers = true)]
    k: Option<f64>,

    /// Quadrature order for shift, sphere and radial rules
    #[arg(long)]
    order: Option<usize>,

    /// Built-in field: one, radius-squared, gauss[:a], bessel-product:ξ1,…, b-harmonic[:a]
    #[arg(long)]
    field: Option<String>,

    /// Use the printed normalization constant for k > n + |γ| − 1
    #[arg(long)]
    paper_constant: bool,

    /// Use the fractional-derivative formula for 0 < k < 1
    #[arg(long)]
    fractional: bool,

    /// Reading of the fractional formula (implies --fractional)
    #[arg(long, value_enum)]
    fractional_reading: Option<ReadingArg>,

    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<String>,

    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

fn build_config(cli: Cli) -> Result<RunConfig, CliError> {
    let command = Command::from(cli.command);
    let mut config = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::for_command(command),
    };
    config.command = command;
    if let Some(g) = cli.gamma {
        config.dimension = g.len();
        config.gamma = g;
    }
    if let Some(k) = cli.k {
        config.k = Some(k);
    }
    if let Some(order) = cli.order {
        config.orders.shift = order;
        config.orders.sphere = order;
        config.orders.radial = order;
    }
    if let Some(field) = cli.field {
        config.field = field;
    }
    config.flags.paper_constant |= cli.paper_constant;
    config.flags.fractional |= cli.fractional;
    if let Some(r) = cli.fractional_reading {
        config.flags.fractional = true;
        config.flags.fractional_reading = match r {
            ReadingArg::Ek => Reading::Ek,
            ReadingArg::T => Reading::T,
            ReadingArg::T2 => Reading::T2,
        };
    }
    if let Some(out) = cli.out {
        config.output_path = Some(out);
    }
    if let Some(f) = cli.format {
        config.output_format = match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        };
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| build_config(cli)).and_then(|c| {
        let table = execute(&c)?;
        if c.command == Command::Verify {
            eprintln!("verify: {} checks passed", table.rows.len());
        }
        for (key, value) in table.meta.iter().filter(|(k, _)| k == "diagnostic") {
            eprintln!("{key}: {value}");
        }
        Ok(())
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bessel-means: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
