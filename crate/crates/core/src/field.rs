use alloc::vec::Vec;

use crate::{Error, Result};

/// A real function on the closed positive orthant.
///
/// Implementors promise that the function is the restriction of a function
/// even in every coordinate; operators in this crate evaluate it at
/// `|x_i ± y_i|` and at points produced by generalized translations without
/// further checks.
pub trait ScalarField {
    fn dimension(&self) -> usize;

    fn eval(&self, x: &[f64]) -> f64;

    /// Radius of a ball containing the support, `None` when unbounded.
    fn support_radius(&self) -> Option<f64> {
        None
    }
}

impl<T: ScalarField + ?Sized> ScalarField for &T {
    fn dimension(&self) -> usize {
        (**self).dimension()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        (**self).eval(x)
    }

    fn support_radius(&self) -> Option<f64> {
        (**self).support_radius()
    }
}

/// Adapts a closure over `&[f64]` into a [`ScalarField`].
#[derive(Clone)]
pub struct FnField<F> {
    dimension: usize,
    support: Option<f64>,
    f: F,
}

impl<F: Fn(&[f64]) -> f64> FnField<F> {
    pub fn new(dimension: usize, f: F) -> Self {
        Self {
            dimension,
            support: None,
            f,
        }
    }

    pub fn with_support(mut self, radius: f64) -> Self {
        self.support = Some(radius);
        self
    }
}

impl<F: Fn(&[f64]) -> f64> ScalarField for FnField<F> {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn eval(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }

    fn support_radius(&self) -> Option<f64> {
        self.support
    }
}

/// The vector `γ = (γ_1, …, γ_n)` of positive Bessel parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiIndex {
    components: Vec<f64>,
    abs: f64,
}

impl MultiIndex {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("multi-index must have at least one component"));
        }
        if let Some(&bad) = components.iter().find(|g| !(g.is_finite() && **g > 0.0)) {
            return Err(Error::domain("multi-index component", bad));
        }
        let abs = components.iter().sum();
        Ok(Self { components, abs })
    }

    pub fn from_slice(components: &[f64]) -> Result<Self> {
        Self::new(components.to_vec())
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// `|γ| = Σ γ_i`.
    pub fn abs(&self) -> f64 {
        self.abs
    }

    /// `n + |γ|`, the weighted dimension that governs radial behaviour.
    pub fn weighted_dimension(&self) -> f64 {
        self.len() as f64 + self.abs
    }

    pub(crate) fn check_point(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: x.len(),
            });
        }
        if let Some(&bad) = x.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::domain("orthant coordinate", bad));
        }
        Ok(())
    }
}

pub(crate) fn check_field_dimension<F: ScalarField + ?Sized>(f: &F, n: usize) -> Result<()> {
    if f.dimension() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.dimension(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn multi_index_sum_and_validation() {
        let g = MultiIndex::new(vec![0.5, 1.25, 2.0]).unwrap();
        assert!((g.abs() - 3.75).abs() < 1e-15);
        assert_eq!(g.weighted_dimension(), 6.75);
        assert!(MultiIndex::new(vec![1.0, 0.0]).is_err());
        assert!(MultiIndex::new(vec![1.0, -2.0]).is_err());
        assert!(MultiIndex::new(vec![]).is_err());
    }

    #[test]
    fn point_checks() {
        let g = MultiIndex::new(vec![1.0, 1.0]).unwrap();
        assert!(g.check_point(&[0.0, 2.0]).is_ok());
        assert!(matches!(
            g.check_point(&[1.0]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
        assert!(g.check_point(&[1.0, -0.1]).is_err());
    }
}
