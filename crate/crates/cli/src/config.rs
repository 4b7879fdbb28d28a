//! JSON run configuration.
//!
//! ```json
//! {
//!   "command": "epd-solve",
//!   "gamma": [1.0, 1.0],
//!   "dimension": 2,
//!   "field": "bessel-product:1,1",
//!   "k": 0.5,
//!   "points": [[0.4, 0.7]],
//!   "times": [0.0, 0.5, 1.0],
//!   "orders": { "shift": 64, "sphere": 48, "radial": 64, "profile_nodes": 33 },
//!   "output_path": "u.csv",
//!   "output_format": "csv",
//!   "flags": { "paper-constant": false, "fractional": false, "fractional-reading": "ek" }
//! }
//! ```
//!
//! Every key except `command` may be omitted; [`RunConfig::for_command`] supplies the defaults.

use std::fs;
use std::path::Path;

use bessel_means_core::epd::{EpdOptions, FractionalReading, Normalization};
use bessel_means_core::shift1d::{DEFAULT_SHIFT_ORDER, MIN_SHIFT_ORDER};
use bessel_means_core::sphere::DEFAULT_SPHERE_ORDER;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;
use crate::registry::FieldSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Shift,
    Mean,
    IteratedMean,
    EpdSolve,
    AsgeirssonCheck,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Shift => "shift",
            Command::Mean => "mean",
            Command::IteratedMean => "iterated-mean",
            Command::EpdSolve => "epd-solve",
            Command::AsgeirssonCheck => "asgeirsson-check",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Reading {
    #[default]
    #[serde(rename = "ek")]
    Ek,
    #[serde(rename = "t")]
    T,
    #[serde(rename = "t2")]
    T2,
}

impl Reading {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ek" => Some(Reading::Ek),
            "t" => Some(Reading::T),
            "t2" => Some(Reading::T2),
            _ => None,
        }
    }

    pub fn to_core(self) -> FractionalReading {
        match self {
            Reading::Ek => FractionalReading::ErdelyiKoberOrder,
            Reading::T => FractionalReading::PrintedAtT,
            Reading::T2 => FractionalReading::PrintedAtTSquared,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Orders {
    pub shift: usize,
    pub sphere: usize,
    /// Jacobi rules in the radial variable (EPD levels, iterated-mean reduction).
    pub radial: usize,
    pub profile_nodes: usize,
}

impl Default for Orders {
    fn default() -> Self {
        Self {
            shift: DEFAULT_SHIFT_ORDER,
            sphere: DEFAULT_SPHERE_ORDER,
            radial: 64,
            profile_nodes: 33,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct Flags {
    /// Use the printed constant for `k > n + |γ| − 1`.
    pub paper_constant: bool,
    /// Use the fractional-derivative formula for `0 < k < 1`.
    pub fractional: bool,
    pub fractional_reading: Reading,
}

/// The y-block of an `asgeirsson-check` run; `gamma` and `xi` hold the x-block.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Split {
    pub gamma_y: Vec<f64>,
    pub xi: Vec<f64>,
    pub xi_y: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub gamma: Vec<f64>,
    #[serde(default)]
    pub dimension: usize,
    /// Registry name, see [`FieldSpec`].
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(default)]
    pub points: Vec<Vec<f64>>,
    /// Shift arguments `y` for `shift`.
    #[serde(default)]
    pub shifts: Vec<Vec<f64>>,
    /// `λ` for `iterated-mean`, `r` for `asgeirsson-check`.
    #[serde(default)]
    pub radii: Vec<f64>,
    /// `t` for `mean` and `epd-solve`, `μ` for `iterated-mean`.
    #[serde(default)]
    pub times: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horizon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
    #[serde(default)]
    pub orders: Orders,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
    #[serde(default)]
    pub output_format: OutputFormat,
    #[serde(default)]
    pub flags: Flags,
}

/// Overlays `given` on `base`, descending into objects present in both.
fn merge(base: &mut Value, given: Value) {
    match (base, given) {
        (Value::Object(b), Value::Object(g)) => {
            for (key, value) in g {
                match b.get_mut(&key) {
                    Some(slot) if slot.is_object() && value.is_object() => merge(slot, value),
                    _ => {
                        b.insert(key, value);
                    }
                }
            }
        }
        (b, g) => *b = g,
    }
}

fn default_field() -> String {
    "radius-squared".to_owned()
}

impl RunConfig {
    /// Defaults: `γ = (1, 1)`, `f = |x|²`, one point `(1, 1)`, `t ∈ {0, 0.25, …, 2}`.
    pub fn for_command(command: Command) -> Self {
        let mut config = Self {
            command,
            gamma: vec![1.0, 1.0],
            dimension: 2,
            field: default_field(),
            k: None,
            points: vec![vec![1.0, 1.0]],
            shifts: vec![vec![0.5, 0.5]],
            radii: vec![0.5, 1.0],
            times: (0..=8).map(|i| 0.25 * i as f64).collect(),
            horizon: None,
            split: None,
            orders: Orders::default(),
            output_path: None,
            output_format: OutputFormat::Csv,
            flags: Flags::default(),
        };
        match command {
            Command::EpdSolve => config.k = Some(-1.0),
            Command::AsgeirssonCheck => {
                config.gamma = vec![3.0];
                config.dimension = 1;
                config.field = "separable".to_owned();
                config.points = vec![vec![0.6, 0.3, 0.9]];
                config.radii = vec![0.5, 1.0, 2.0];
                config.split = Some(Split {
                    gamma_y: vec![1.0, 1.0],
                    xi: vec![std::f64::consts::SQRT_2],
                    xi_y: vec![1.0, 1.0],
                });
                config.orders.shift = 24;
                config.orders.sphere = 16;
            }
            _ => {}
        }
        config
    }

    /// Parses a config; keys left out take the defaults of its `command`.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        use serde::de::Error as _;
        let given: Value = serde_json::from_str(text)?;
        let Value::Object(map) = &given else {
            return Err(serde_json::Error::custom("config must be a JSON object"));
        };
        let command: Command = match map.get("command") {
            Some(c) => serde_json::from_value(c.clone())?,
            None => return Err(serde_json::Error::missing_field("command")),
        };
        let mut merged = serde_json::to_value(Self::for_command(command))?;
        merge(&mut merged, given.clone());
        let mut config: Self = serde_json::from_value(merged)?;
        if map.contains_key("gamma") && !map.contains_key("dimension") {
            config.dimension = config.gamma.len();
        }
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("RunConfig serializes")
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::ConfigRead {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text).map_err(|source| CliError::ConfigParse {
            path: path.display().to_string(),
            source,
        })
    }

    /// Checks the invariants the commands rely on and names the first offending field.
    pub fn validate(&self) -> Result<(), CliError> {
        let o = &self.orders;
        for (field, value) in [
            ("orders.shift", o.shift),
            ("orders.sphere", o.sphere),
            ("orders.radial", o.radial),
            ("orders.profile_nodes", o.profile_nodes),
        ] {
            if value < MIN_SHIFT_ORDER {
                return Err(CliError::config(field, format!("must be at least {MIN_SHIFT_ORDER}, got {value}")));
            }
        }
        if self.command == Command::Verify {
            return Ok(());
        }
        if self.gamma.is_empty() {
            return Err(CliError::config("gamma", "at least one component is required"));
        }
        if let Some(g) = self.gamma.iter().find(|g| !(g.is_finite() && **g > 0.0)) {
            return Err(CliError::config("gamma", format!("components must be positive, got {g}")));
        }
        if self.dimension != self.gamma.len() {
            return Err(CliError::config(
                "dimension",
                format!("is {} but gamma has {} components", self.dimension, self.gamma.len()),
            ));
        }
        let point_len = match (self.command, &self.split) {
            (Command::AsgeirssonCheck, None) => {
                return Err(CliError::config("split", "asgeirsson-check needs the y-block geometry"))
            }
            (Command::AsgeirssonCheck, Some(split)) => {
                if split.gamma_y.is_empty() || split.gamma_y.iter().any(|g| !(g.is_finite() && *g > 0.0)) {
                    return Err(CliError::config("split.gamma_y", "components must be positive"));
                }
                if split.xi.len() != self.dimension {
                    return Err(CliError::config("split.xi", "length must equal dimension"));
                }
                if split.xi_y.len() != split.gamma_y.len() {
                    return Err(CliError::config("split.xi_y", "length must equal split.gamma_y length"));
                }
                self.dimension + split.gamma_y.len()
            }
            _ => self.dimension,
        };
        if self.command != Command::AsgeirssonCheck {
            FieldSpec::parse(&self.field)
                .and_then(|spec| spec.build(&self.gamma))
                .map_err(|e| CliError::config("field", e))?;
        }
        if self.points.is_empty() {
            return Err(CliError::config("points", "at least one point is required"));
        }
        check_points("points", &self.points, point_len)?;
        match self.command {
            Command::Shift => {
                if self.shifts.is_empty() {
                    return Err(CliError::config("shifts", "at least one shift is required"));
                }
                check_points("shifts", &self.shifts, self.dimension)?;
            }
            Command::Mean | Command::EpdSolve => check_values("times", &self.times)?,
            Command::IteratedMean => {
                check_values("radii", &self.radii)?;
                check_values("times", &self.times)?;
            }
            Command::AsgeirssonCheck => check_values("radii", &self.radii)?,
            Command::Verify => {}
        }
        if self.command == Command::EpdSolve {
            match self.k {
                None => return Err(CliError::config("k", "epd-solve needs k")),
                Some(k) if !k.is_finite() => return Err(CliError::config("k", "must be finite")),
                _ => {}
            }
            if let Some(h) = self.horizon {
                if !(h > 0.0 && h.is_finite()) {
                    return Err(CliError::config("horizon", "must be positive"));
                }
            }
        }
        Ok(())
    }

    pub fn epd_options(&self) -> EpdOptions {
        let largest = self.times.iter().fold(0.0_f64, |a, t| a.max(t.abs()));
        EpdOptions {
            shift_order: self.orders.shift,
            sphere_order: self.orders.sphere,
            radial_order: self.orders.radial,
            profile_nodes: self.orders.profile_nodes,
            horizon: self.horizon.unwrap_or(if largest > 0.0 { largest } else { 1.0 }),
            normalization: if self.flags.paper_constant {
                Normalization::AsPrinted
            } else {
                Normalization::Constraint
            },
            fractional: self.flags.fractional,
            fractional_reading: self.flags.fractional_reading.to_core(),
            ..EpdOptions::default()
        }
    }
}

fn check_points(field: &'static str, points: &[Vec<f64>], len: usize) -> Result<(), CliError> {
    for (i, p) in points.iter().enumerate() {
        if p.len() != len {
            return Err(CliError::config(field, format!("entry {i} has {} coordinates, expected {len}", p.len())));
        }
        if p.iter().any(|v| !(v.is_finite() && *v >= 0.0)) {
            return Err(CliError::config(field, format!("entry {i} leaves the closed positive orthant")));
        }
    }
    Ok(())
}

fn check_values(field: &'static str, values: &[f64]) -> Result<(), CliError> {
    if values.is_empty() {
        return Err(CliError::config(field, "at least one value is required"));
    }
    if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
        return Err(CliError::config(field, format!("values must be finite and nonnegative, got {v}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        for c in [
            Command::Shift,
            Command::Mean,
            Command::IteratedMean,
            Command::EpdSolve,
            Command::AsgeirssonCheck,
            Command::Verify,
        ] {
            RunConfig::for_command(c).validate().unwrap();
        }
    }

    #[test]
    fn minimal_json() {
        let c = RunConfig::from_json(r#"{"command": "mean", "gamma": [1.5], "dimension": 1, "points": [[0.3]], "times": [1]}"#)
            .unwrap();
        assert_eq!(c.field, "radius-squared");
        assert_eq!(c.orders, Orders::default());
        c.validate().unwrap();
    }

    #[test]
    fn missing_keys_take_command_defaults() {
        let c = RunConfig::from_json(r#"{"command": "asgeirsson-check", "radii": [1.0], "orders": {"radial": 8}}"#)
            .unwrap();
        let d = RunConfig::for_command(Command::AsgeirssonCheck);
        assert_eq!(c.split, d.split);
        assert_eq!((c.orders.shift, c.orders.sphere, c.orders.radial), (24, 16, 8));
        assert_eq!(c.radii, [1.0]);
        let c = RunConfig::from_json(r#"{"command": "mean", "gamma": [1, 2, 3], "points": [[1, 1, 1]]}"#).unwrap();
        assert_eq!(c.dimension, 3);
        c.validate().unwrap();
        assert!(RunConfig::from_json(r#"{"gamma": [1]}"#).is_err());
        assert!(RunConfig::from_json("[1]").is_err());
    }

    #[test]
    fn offending_field_is_named() {
        let mut c = RunConfig::for_command(Command::EpdSolve);
        c.k = None;
        assert!(matches!(c.validate(), Err(CliError::Config { field: "k", .. })));
        let mut c = RunConfig::for_command(Command::Mean);
        c.orders.sphere = 3;
        assert!(matches!(c.validate(), Err(CliError::Config { field: "orders.sphere", .. })));
        let mut c = RunConfig::for_command(Command::Mean);
        c.dimension = 3;
        assert!(matches!(c.validate(), Err(CliError::Config { field: "dimension", .. })));
        let mut c = RunConfig::for_command(Command::AsgeirssonCheck);
        c.split = None;
        assert!(matches!(c.validate(), Err(CliError::Config { field: "split", .. })));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(RunConfig::from_json(r#"{"command": "mean", "gama": [1]}"#).is_err());
    }

    #[test]
    fn reading_names() {
        for r in [Reading::Ek, Reading::T, Reading::T2] {
            assert_eq!(Reading::parse(r.to_core().name()), Some(r));
        }
    }
}
