//! Closed-form even fields used as initial data and as exact-solution oracles.

use alloc::vec::Vec;

use crate::math;
use crate::numerics::NormalizedBessel;
use crate::{Error, MultiIndex, Result, ScalarField};

/// The constant field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constant {
    pub dimension: usize,
    pub value: f64,
}

impl ScalarField for Constant {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn eval(&self, _x: &[f64]) -> f64 {
        self.value
    }
}

/// `|x|²`; `Δ_γ |x|² = 2(n + |γ|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusSquared {
    pub dimension: usize,
}

impl ScalarField for RadiusSquared {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn eval(&self, x: &[f64]) -> f64 {
        x.iter().map(|v| v * v).sum()
    }
}

/// `exp(−a|x|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gaussian {
    pub dimension: usize,
    pub rate: f64,
}

impl ScalarField for Gaussian {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn eval(&self, x: &[f64]) -> f64 {
        math::exp(-self.rate * x.iter().map(|v| v * v).sum::<f64>())
    }
}

/// `j_γ(x, ξ) = Π j_{(γ_i−1)/2}(x_i ξ_i)`, which satisfies `Δ_γ j_γ(·, ξ) = −|ξ|² j_γ(·, ξ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselProduct {
    factors: Vec<NormalizedBessel>,
    xi: Vec<f64>,
}

impl BesselProduct {
    pub fn new(g: &MultiIndex, xi: &[f64]) -> Result<Self> {
        if xi.len() != g.len() {
            return Err(Error::DimensionMismatch {
                expected: g.len(),
                found: xi.len(),
            });
        }
        let factors = g
            .components()
            .iter()
            .map(|gi| NormalizedBessel::new(0.5 * (gi - 1.0)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            factors,
            xi: xi.to_vec(),
        })
    }

    pub fn frequency(&self) -> &[f64] {
        &self.xi
    }

    /// `|ξ|`.
    pub fn frequency_norm(&self) -> f64 {
        math::sqrt(self.xi.iter().map(|v| v * v).sum())
    }
}

impl ScalarField for BesselProduct {
    fn dimension(&self) -> usize {
        self.xi.len()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.factors
            .iter()
            .zip(x.iter().zip(&self.xi))
            .map(|(j, (xi, k))| j.eval(xi * k))
            .product()
    }
}

/// `j_{(γ_1−1)/2}(a x_1) · i_{(γ_2−1)/2}(a x_2)`, B-harmonic and not a polynomial.
///
/// Remaining coordinates (if any) do not enter. Requires `n ≥ 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BHarmonicProduct {
    dimension: usize,
    oscillating: NormalizedBessel,
    growing: NormalizedBessel,
    rate: f64,
}

impl BHarmonicProduct {
    pub fn new(g: &MultiIndex, rate: f64) -> Result<Self> {
        if g.len() < 2 {
            return Err(Error::Invalid("a B-harmonic product needs at least two coordinates"));
        }
        let c = g.components();
        Ok(Self {
            dimension: g.len(),
            oscillating: NormalizedBessel::new(0.5 * (c[0] - 1.0))?,
            growing: NormalizedBessel::new(0.5 * (c[1] - 1.0))?,
            rate,
        })
    }
}

impl ScalarField for BHarmonicProduct {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.oscillating.eval(self.rate * x[0]) * self.growing.eval_modified(self.rate * x[1])
    }
}

/// Pointwise sum of two fields of equal dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Sum<A, B>(pub A, pub B);

impl<A: ScalarField, B: ScalarField> ScalarField for Sum<A, B> {
    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.0.eval(x) + self.1.eval(x)
    }

    fn support_radius(&self) -> Option<f64> {
        match (self.0.support_radius(), self.1.support_radius()) {
            (Some(a), Some(b)) => Some(a.max(b)),
            _ => None,
        }
    }
}
