//! One function per CLI command; each turns a validated [`RunConfig`] into a [`Table`].
//!
//! Rows are computed on the rayon pool and collected in input order.

use bessel_means_core::epd::{EpdProblem, EpdSolution, Regime};
use bessel_means_core::means::{iterated_mean_single, MultidimShift, SphericalMean};
use bessel_means_core::ultrahyperbolic::{separable_solution, BlockMeans, BlockOrders, SplitGeometry};
use bessel_means_core::{MultiIndex, Result as CoreResult};
use rayon::prelude::*;

use crate::config::{Command, RunConfig};
use crate::error::CliError;
use crate::registry::{build_field, Field};
use crate::table::{indexed, Cell, Table};
use crate::verify;

/// Gap between the fractional formula and the recurrence that is reported.
const FRACTIONAL_GATE: f64 = 1e-4;

fn field(config: &RunConfig) -> Result<Field, CliError> {
    build_field(&config.field, &config.gamma).map_err(|e| CliError::config("field", e))
}

fn gamma(values: &[f64], name: &'static str) -> Result<MultiIndex, CliError> {
    MultiIndex::from_slice(values).map_err(|e| CliError::config(name, e.to_string()))
}

fn columns(head: impl IntoIterator<Item = String>, tail: &[&str]) -> Vec<String> {
    head.into_iter().chain(tail.iter().map(|s| s.to_string())).collect()
}

fn cells(point: &[f64], tail: &[f64]) -> Vec<Cell> {
    point.iter().chain(tail).map(|v| Cell::Num(*v)).collect()
}

/// Every `(point, value)` pair in row-major order.
fn pairs<'a, T: Sync>(points: &'a [Vec<f64>], values: &'a [T]) -> Vec<(&'a [f64], &'a T)> {
    points
        .iter()
        .flat_map(|p| values.iter().map(move |v| (p.as_slice(), v)))
        .collect()
}

/// Validates and runs `config`; `verify` yields its manifest.
pub fn run(config: &RunConfig) -> Result<Table, CliError> {
    config.validate()?;
    let mut table = match config.command {
        Command::Shift => shift(config)?,
        Command::Mean => mean(config)?,
        Command::IteratedMean => iterated_mean(config)?,
        Command::EpdSolve => epd_solve(config)?,
        Command::AsgeirssonCheck => asgeirsson(config)?,
        Command::Verify => verify::manifest(&verify::run_suite()),
    };
    if config.command != Command::Verify {
        table.note("field", config.field.clone());
        table.note("gamma", format!("{:?}", config.gamma));
    }
    Ok(table)
}

fn shift(config: &RunConfig) -> Result<Table, CliError> {
    let n = config.dimension;
    let f = field(config)?;
    let op = MultidimShift::new(&gamma(&config.gamma, "gamma")?, config.orders.shift)?;
    let rows = pairs(&config.points, &config.shifts)
        .into_par_iter()
        .map(|(x, y)| op.apply_checked(&f, x, y).map(|v| cells(x, &[y.to_vec(), vec![v]].concat())))
        .collect::<CoreResult<Vec<_>>>()?;
    let mut table = Table::new(
        "shift",
        columns(indexed("x", n).chain(indexed("y", n)), &["value"]),
    );
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

fn mean(config: &RunConfig) -> Result<Table, CliError> {
    let f = field(config)?;
    let mean = SphericalMean::with_orders(&gamma(&config.gamma, "gamma")?, config.orders.sphere, config.orders.shift)?;
    let rows = pairs(&config.points, &config.times)
        .into_par_iter()
        .map(|(x, &t)| mean.mean(&f, x, t).map(|v| cells(x, &[t, v])))
        .collect::<CoreResult<Vec<_>>>()?;
    let mut table = Table::new("mean", columns(indexed("x", config.dimension), &["t", "value"]));
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

fn iterated_mean(config: &RunConfig) -> Result<Table, CliError> {
    let f = field(config)?;
    let mean = SphericalMean::with_orders(&gamma(&config.gamma, "gamma")?, config.orders.sphere, config.orders.shift)?;
    let radii: Vec<(f64, f64)> = config
        .radii
        .iter()
        .flat_map(|&l| config.times.iter().map(move |&m| (l, m)))
        .collect();
    let rows = pairs(&config.points, &radii)
        .into_par_iter()
        .map(|(x, &(l, m))| iterated_mean_single(&mean, &f, x, l, m, config.orders.radial).map(|v| cells(x, &[l, m, v])))
        .collect::<CoreResult<Vec<_>>>()?;
    let mut table = Table::new(
        "iterated-mean",
        columns(indexed("x", config.dimension), &["lambda", "mu", "value"]),
    );
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

fn epd_solve(config: &RunConfig) -> Result<Table, CliError> {
    let f = field(config)?;
    let k = config.k.ok_or_else(|| CliError::config("k", "epd-solve needs k"))?;
    let g = gamma(&config.gamma, "gamma")?;
    let options = config.epd_options();
    let solution = EpdSolution::new(EpdProblem::new(f.clone(), g.clone(), k)?, options.clone())?;
    let fractional = solution.regime() == Regime::Fractional;
    // the fractional formula is always reported next to the recurrence it must match
    let reference = if fractional {
        let mut opts = options;
        opts.fractional = false;
        Some(EpdSolution::new(EpdProblem::new(f, g, k)?, opts)?)
    } else {
        None
    };
    let blocks = config
        .points
        .par_iter()
        .map(|x| -> CoreResult<Vec<Vec<Cell>>> {
            let point = solution.at(x)?;
            let other = reference.as_ref().map(|r| r.at(x)).transpose()?;
            config
                .times
                .iter()
                .map(|&t| {
                    let u = point.eval(t)?;
                    Ok(match &other {
                        Some(o) => cells(x, &[t, u, o.eval(t)?]),
                        None => cells(x, &[t, u]),
                    })
                })
                .collect()
        })
        .collect::<CoreResult<Vec<_>>>()?;
    let tail: &[&str] = if fractional { &["t", "u", "recurrence"] } else { &["t", "u"] };
    let mut table = Table::new("epd-solve", columns(indexed("x", config.dimension), tail));
    blocks.into_iter().flatten().for_each(|r| table.push(r));
    table.note("k", k.to_string());
    table.note("regime", solution.regime().name());
    table.note("depth", solution.depth().to_string());
    for d in solution.diagnostics() {
        table.note("diagnostic", d.to_string());
    }
    if fractional {
        let n = config.dimension;
        let gap = table
            .rows
            .iter()
            .filter_map(|r| Some((r[n + 1].as_f64()? - r[n + 2].as_f64()?).abs()))
            .fold(0.0, f64::max);
        table.note("fractional-reading", config.flags.fractional_reading.to_core().name());
        table.note("fractional-recurrence-gap", format!("{gap:.3e}"));
        if !(gap <= FRACTIONAL_GATE) {
            table.note(
                "diagnostic",
                format!("fractional formula differs from the recurrence by {gap:.3e} > {FRACTIONAL_GATE:e}"),
            );
        }
    }
    Ok(table)
}

fn asgeirsson(config: &RunConfig) -> Result<Table, CliError> {
    let split = config
        .split
        .as_ref()
        .ok_or_else(|| CliError::config("split", "asgeirsson-check needs the y-block geometry"))?;
    let geometry = SplitGeometry::new(gamma(&config.gamma, "gamma")?, gamma(&split.gamma_y, "split.gamma_y")?);
    let u = separable_solution(&geometry, &split.xi, &split.xi_y)
        .map_err(|e| CliError::config("split.xi_y", e.to_string()))?;
    let means = BlockMeans::new(
        &geometry,
        BlockOrders {
            sphere: config.orders.sphere,
            shift: config.orders.shift,
        },
    )?;
    let m1 = geometry.m1();
    let rows = pairs(&config.points, &config.radii)
        .into_par_iter()
        .map(|(p, &r)| {
            let (x, y) = p.split_at(m1);
            let a = means.mean_x(&u, x, y, r)?;
            let b = means.mean_y(&u, x, y, r)?;
            Ok(cells(p, &[r, a, b, (a - b).abs()]))
        })
        .collect::<CoreResult<Vec<_>>>()?;
    let mut table = Table::new(
        "asgeirsson-check",
        columns(
            indexed("x", m1).chain(indexed("y", geometry.m2())),
            &["r", "mean_x", "mean_y", "gap"],
        ),
    );
    rows.into_iter().for_each(|r| table.push(r));
    table.note("admissible", geometry.asgeirsson_admissible().to_string());
    table.note("balance-gap", geometry.balance_gap().to_string());
    Ok(table)
}
