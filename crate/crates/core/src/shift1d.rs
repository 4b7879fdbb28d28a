//! The one-dimensional generalized translation `^γT^y_x`.
//!
//! For `γ > 0`
//!
//! ```text
//!     T^y_x f(x) = C(γ) ∫_0^π f(√(x² + y² − 2xy cos φ)) sin^{γ−1} φ dφ,
//!     C(γ) = Γ((γ+1)/2) / (√π Γ(γ/2)),
//! ```
//!
//! which solves `(B_γ)_x T = (B_γ)_y T` with `T|_{y=0} = f`, `∂_y T|_{y=0} = 0`.
//! Functions are always evaluated through their even extension.

use alloc::vec::Vec;

use crate::math;
use crate::numerics::{gamma, gauss_2f1, gauss_jacobi_rule, QuadratureRule};
use crate::{Error, Result};

pub const DEFAULT_SHIFT_ORDER: usize = 64;

/// Smallest order accepted by the shift quadratures.
pub const MIN_SHIFT_ORDER: usize = 4;

fn check_gamma(gamma: f64) -> Result<()> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::domain("shift parameter gamma", gamma));
    }
    Ok(())
}

fn check_order(order: usize) -> Result<()> {
    if order < MIN_SHIFT_ORDER {
        return Err(Error::Invalid("shift quadrature order must be at least 4"));
    }
    Ok(())
}

/// `C(γ) = (∫_0^π sin^{γ−1} φ dφ)^{−1} = Γ((γ+1)/2) / (√π Γ(γ/2))`.
pub fn shift_constant_c(gamma_param: f64) -> Result<f64> {
    check_gamma(gamma_param)?;
    Ok(gamma(0.5 * (gamma_param + 1.0)) / (math::sqrt(math::PI) * gamma(0.5 * gamma_param)))
}

/// Precomputed angular quadrature for `^γT`, reusable across many `(x, y)`.
///
/// With `u = cos φ` the weight `sin^{γ−1} φ dφ` becomes `(1 − u²)^{(γ−2)/2} du`,
/// a symmetric Jacobi weight. Weights are stored normalized to unit sum, which
/// is the same as multiplying by `C(γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularShift {
    gamma: f64,
    one_minus_u: Vec<f64>,
    weights: Vec<f64>,
}

impl AngularShift {
    pub fn new(gamma_param: f64, order: usize) -> Result<Self> {
        check_gamma(gamma_param)?;
        check_order(order)?;
        let e = 0.5 * (gamma_param - 2.0);
        let rule = gauss_jacobi_rule(order, e, e)?;
        let total: f64 = rule.weights().iter().sum();
        Ok(Self {
            gamma: gamma_param,
            one_minus_u: rule.nodes().iter().map(|u| 1.0 - u).collect(),
            weights: rule.weights().iter().map(|w| w / total).collect(),
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    /// Quadrature pairs `(z_i, w_i)` with `T^y_x f(x) ≈ Σ w_i f(z_i)`.
    ///
    /// Every `z_i` lies in `[|x − y|, x + y]`; the weights are positive and sum to one.
    pub fn points(&self, x: f64, y: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let d = x - y;
        let p = 2.0 * x * y;
        self.one_minus_u
            .iter()
            .zip(&self.weights)
            .map(move |(v, w)| (math::sqrt(d * d + p * v), *w))
    }

    /// `T^y_x f(x)`; returns `f(x)` exactly at `y = 0` and `f(y)` at `x = 0`.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F, x: f64, y: f64) -> f64 {
        let (x, y) = (x.abs(), y.abs());
        if y == 0.0 {
            return f(x);
        }
        if x == 0.0 {
            return f(y);
        }
        self.points(x, y).map(|(z, w)| w * f(z)).sum()
    }
}

/// `^γT^y_x f(x)` by Gauss–Jacobi quadrature in `u = cos φ`.
pub fn shift_angular<F: Fn(f64) -> f64>(f: F, gamma_param: f64, x: f64, y: f64, order: usize) -> Result<f64> {
    check_point(x, y)?;
    Ok(AngularShift::new(gamma_param, order)?.apply(f, x, y))
}

fn check_point(x: f64, y: f64) -> Result<()> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::domain("shift point x", x));
    }
    if !(y >= 0.0 && y.is_finite()) {
        return Err(Error::domain("shift point y", y));
    }
    Ok(())
}

/// The radial representation
///
/// ```text
///     T^y_x f(x) = 2^γ C(γ) / (4xy)^{γ−1} ∫_{|x−y|}^{x+y} z f(z) [(z² − (x−y)²)((x+y)² − z²)]^{γ/2−1} dz
/// ```
///
/// with both endpoint singularities absorbed into a Jacobi rule.
pub fn shift_radial<F: Fn(f64) -> f64>(f: F, gamma_param: f64, x: f64, y: f64, order: usize) -> Result<f64> {
    check_gamma(gamma_param)?;
    check_order(order)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("radial shift point x", x));
    }
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::domain("radial shift point y", y));
    }
    let e = 0.5 * gamma_param - 1.0;
    let a = (x - y).abs();
    let b = x + y;
    let prefactor = math::powf(2.0, gamma_param) * shift_constant_c(gamma_param)?
        / math::powf(4.0 * x * y, gamma_param - 1.0);
    let integral = if a == 0.0 {
        // (z²)^e · z = z^{γ−1} joins the left endpoint weight.
        let rule = gauss_jacobi_rule(order, e, gamma_param - 1.0)?;
        rule.integrate_on(0.0, b, |z| f(z) * math::powf(b + z, e))
    } else {
        let rule = gauss_jacobi_rule(order, e, e)?;
        rule.integrate_on(a, b, |z| z * f(z) * math::powf((z + a) * (b + z), e))
    };
    Ok(prefactor * integral)
}

/// The `γ = 0` translation `(f(x + y) + f(|x − y|)) / 2`.
pub fn shift_degenerate<F: Fn(f64) -> f64>(f: F, x: f64, y: f64) -> f64 {
    0.5 * (f(x + y) + f((x - y).abs()))
}

/// Closed form `T^y x^α = |x − y|^α ₂F₁(−α/2, γ/2; γ; −4xy/(x − y)²)`.
pub fn shift_power(alpha: f64, gamma_param: f64, x: f64, y: f64) -> Result<f64> {
    check_gamma(gamma_param)?;
    check_point(x, y)?;
    if x == y {
        return Err(Error::domain("power shift requires x != y, got x = y", x));
    }
    let d = (x - y).abs();
    let z = -4.0 * x * y / (d * d);
    Ok(math::powf(d, alpha) * gauss_2f1(-0.5 * alpha, 0.5 * gamma_param, gamma_param, z)?)
}

/// `∫_0^R f(y) g(y) y^γ dy` with the weight `y^γ` absorbed into the rule.
pub fn weighted_halfline_inner<F, G>(f: F, g: G, gamma_param: f64, radius: f64, order: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    if !(gamma_param >= 0.0 && gamma_param.is_finite()) {
        return Err(Error::domain("weight exponent gamma", gamma_param));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::domain("truncation radius", radius));
    }
    let rule: QuadratureRule = gauss_jacobi_rule(order.max(1), 0.0, gamma_param)?;
    Ok(rule.integrate_on(0.0, radius, |y| f(y) * g(y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert!((shift_constant_c(1.0).unwrap() - 1.0 / math::PI).abs() < 1e-15);
        assert!((shift_constant_c(2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((shift_constant_c(3.0).unwrap() - 2.0 / math::PI).abs() < 1e-15);
        assert!(shift_constant_c(0.0).is_err());
    }

    #[test]
    fn angular_examples() {
        for g in [0.3, 1.0, 2.0, 5.0] {
            let one = shift_angular(|_| 1.0, g, 1.3, 0.4, 16).unwrap();
            assert!((one - 1.0).abs() < 1e-14);
            let sq = shift_angular(|t| t * t, g, 1.3, 0.4, 16).unwrap();
            assert!((sq - 1.85).abs() < 1e-13, "γ={g}: {sq}");
        }
        let s1 = math::sin(1.0);
        let j = shift_angular(|t: f64| if t == 0.0 { 1.0 } else { math::sin(t) / t }, 2.0, 1.0, 1.0, 64)
            .unwrap();
        assert!((j - s1 * s1).abs() < 1e-12);
    }

    #[test]
    fn identity_at_zero_is_exact() {
        let f = |t: f64| math::exp(-t) * math::cos(3.0 * t);
        assert_eq!(shift_angular(f, 1.7, 0.8, 0.0, 8).unwrap(), f(0.8));
        assert_eq!(shift_angular(f, 1.7, 0.0, 0.6, 8).unwrap(), f(0.6));
    }

    #[test]
    fn radial_examples() {
        let one = shift_radial(|_| 1.0, 1.5, 1.0, 0.5, 32).unwrap();
        assert!((one - 1.0).abs() < 1e-13);
        let sq = shift_radial(|t| t * t, 0.7, 0.8, 0.3, 32).unwrap();
        assert!((sq - 0.73).abs() < 1e-13);
        let diag = shift_radial(|t| t * t, 2.5, 0.6, 0.6, 32).unwrap();
        assert!((diag - 0.72).abs() < 1e-13);
        assert!(shift_radial(|t| t, 1.0, 0.0, 1.0, 8).is_err());
    }

    #[test]
    fn degenerate_examples() {
        assert_eq!(shift_degenerate(|t| t * t, 1.0, 2.0), 5.0);
        assert_eq!(shift_degenerate(|t| t * t * t, 0.7, 0.0), 0.7 * 0.7 * 0.7);
        assert_eq!(shift_degenerate(|_| 1.0, 3.0, 1.0), 1.0);
    }

    #[test]
    fn power_examples() {
        assert!((shift_power(0.0, 1.3, 1.0, 0.2).unwrap() - 1.0).abs() < 1e-15);
        assert!((shift_power(2.0, 0.9, 1.3, 0.4).unwrap() - 1.85).abs() < 1e-13);
        assert!(shift_power(2.0, 0.9, 1.0, 1.0).is_err());
        let closed = shift_power(3.2, 1.4, 1.0, 0.5).unwrap();
        let quad = shift_angular(|t| math::powf(t, 3.2), 1.4, 1.0, 0.5, 64).unwrap();
        assert!((closed - quad).abs() < 1e-10);
    }

    #[test]
    fn halfline_inner_examples() {
        let a = weighted_halfline_inner(|_| 1.0, |_| 1.0, 1.0, 1.0, 4).unwrap();
        assert!((a - 0.5).abs() < 1e-15);
        let b = weighted_halfline_inner(|y| y, |_| 1.0, 2.0, 1.0, 4).unwrap();
        assert!((b - 0.25).abs() < 1e-15);
    }
}
