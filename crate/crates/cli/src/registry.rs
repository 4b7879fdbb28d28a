//! Built-in even fields selectable by name.
//!
//! | name                     | field                                            |
//! |--------------------------|--------------------------------------------------|
//! | `one`                    | `1`                                              |
//! | `radius-squared`         | `\|x\|²`                                         |
//! | `gauss[:a]`              | `exp(−a\|x\|²)`, `a = 1` by default              |
//! | `bessel-product:ξ1,…,ξn` | `Π j_{(γ_i−1)/2}(x_i ξ_i)`                       |
//! | `b-harmonic[:a]`         | `j_{(γ_1−1)/2}(a x_1) i_{(γ_2−1)/2}(a x_2)`, n ≥ 2 |

use bessel_means_core::fields::{BHarmonicProduct, BesselProduct, Constant, Gaussian, RadiusSquared};
use bessel_means_core::{MultiIndex, ScalarField};

#[derive(Debug, Clone, PartialEq)]
pub enum FieldSpec {
    One,
    RadiusSquared,
    Gauss(f64),
    BesselProduct(Vec<f64>),
    BHarmonic(f64),
}

fn number(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("`{s}` is not a finite number"))
}

impl FieldSpec {
    pub fn parse(name: &str) -> Result<Self, String> {
        let (head, arg) = match name.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (name, None),
        };
        match (head, arg) {
            ("one", None) => Ok(FieldSpec::One),
            ("radius-squared", None) => Ok(FieldSpec::RadiusSquared),
            ("gauss", None) => Ok(FieldSpec::Gauss(1.0)),
            ("gauss", Some(a)) => Ok(FieldSpec::Gauss(number(a)?)),
            ("b-harmonic", None) => Ok(FieldSpec::BHarmonic(1.0)),
            ("b-harmonic", Some(a)) => Ok(FieldSpec::BHarmonic(number(a)?)),
            ("bessel-product", Some(list)) => {
                let xi = list.split(',').map(number).collect::<Result<Vec<_>, _>>()?;
                Ok(FieldSpec::BesselProduct(xi))
            }
            ("bessel-product", None) => Err("bessel-product needs frequencies, e.g. bessel-product:1,1".into()),
            _ => Err(format!(
                "unknown field `{name}`; expected one, radius-squared, gauss[:a], bessel-product:ξ…, b-harmonic[:a]"
            )),
        }
    }

    pub fn build(&self, gamma: &[f64]) -> Result<Field, String> {
        let g = MultiIndex::from_slice(gamma).map_err(|e| e.to_string())?;
        let n = g.len();
        Ok(match self {
            FieldSpec::One => Field::One(Constant { dimension: n, value: 1.0 }),
            FieldSpec::RadiusSquared => Field::RadiusSquared(RadiusSquared { dimension: n }),
            FieldSpec::Gauss(rate) => Field::Gauss(Gaussian { dimension: n, rate: *rate }),
            FieldSpec::BesselProduct(xi) => Field::BesselProduct(BesselProduct::new(&g, xi).map_err(|e| e.to_string())?),
            FieldSpec::BHarmonic(rate) => Field::BHarmonic(BHarmonicProduct::new(&g, *rate).map_err(|e| e.to_string())?),
        })
    }
}

/// A constructed registry field.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    One(Constant),
    RadiusSquared(RadiusSquared),
    Gauss(Gaussian),
    BesselProduct(BesselProduct),
    BHarmonic(BHarmonicProduct),
}

impl Field {
    fn inner(&self) -> &dyn ScalarField {
        match self {
            Field::One(f) => f,
            Field::RadiusSquared(f) => f,
            Field::Gauss(f) => f,
            Field::BesselProduct(f) => f,
            Field::BHarmonic(f) => f,
        }
    }
}

impl ScalarField for Field {
    fn dimension(&self) -> usize {
        self.inner().dimension()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.inner().eval(x)
    }

    fn support_radius(&self) -> Option<f64> {
        self.inner().support_radius()
    }
}

pub fn build_field(name: &str, gamma: &[f64]) -> Result<Field, String> {
    FieldSpec::parse(name)?.build(gamma)
}
