//! Erdélyi–Kober integrals and Riemann–Liouville derivatives on the half line.

use crate::math;
use crate::numerics::{central_derivative, gamma, gauss_jacobi_rule};
use crate::{Error, Result};

/// Quadrature order for the fractional integrals.
pub const FRACTIONAL_ORDER: usize = 64;

/// The Erdélyi–Kober integral with lower limit zero,
///
/// ```text
///     I^α_{0+;σ,η} φ(x) = σ x^{−σ(α+η)} / Γ(α) ∫_0^x (x^σ − r^σ)^{α−1} r^{ση+σ−1} φ(r) dr.
/// ```
///
/// After `v = (r/x)^σ` this is `Γ(α)^{−1} ∫_0^1 (1−v)^{α−1} v^η φ(x v^{1/σ}) dv`,
/// a Jacobi integral with exponents `(α−1, η)`.
pub fn erdelyi_kober<F: Fn(f64) -> f64>(
    phi: F,
    alpha: f64,
    sigma: f64,
    eta: f64,
    x: f64,
    order: usize,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain("Erdelyi-Kober order alpha", alpha));
    }
    if !(sigma > 0.0 && sigma.is_finite()) {
        return Err(Error::domain("Erdelyi-Kober sigma", sigma));
    }
    if !(eta > -1.0 && eta.is_finite()) {
        return Err(Error::domain("Erdelyi-Kober eta", eta));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("Erdelyi-Kober point", x));
    }
    let rule = gauss_jacobi_rule(order, alpha - 1.0, eta)?;
    let inv_sigma = 1.0 / sigma;
    let value = rule.integrate_on(0.0, 1.0, |v| phi(x * math::powf(v, inv_sigma)));
    Ok(value / gamma(alpha))
}

/// Left Riemann–Liouville integral `I^β[r^c ψ](s)` for `β > 0`, `c > −1`.
pub fn riemann_liouville_integral_power<F: Fn(f64) -> f64>(
    psi: F,
    c: f64,
    beta: f64,
    s: f64,
    order: usize,
) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::domain("fractional integral order", beta));
    }
    if !(c > -1.0) {
        return Err(Error::domain("power weight exponent", c));
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    // s^{β+c}/Γ(β) ∫_0^1 (1−v)^{β−1} v^c ψ(sv) dv
    let rule = gauss_jacobi_rule(order, beta - 1.0, c)?;
    let integral = rule.integrate_on(0.0, 1.0, |v| psi(s * v));
    Ok(math::powf(s, beta + c) / gamma(beta) * integral)
}

/// `D^α φ(t) = (d/dt)^m I^{m−α} φ(t)`, `m = ⌈α⌉`, for `φ(r) = r^c ψ(r)`.
///
/// The fractional integral is a Jacobi quadrature; the outer derivative is the
/// centred `m`-th difference of step `h`.
pub fn riemann_liouville_derivative_power<F: Fn(f64) -> f64>(
    psi: F,
    c: f64,
    alpha: f64,
    t: f64,
    h: f64,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain("fractional derivative order", alpha));
    }
    let m = math::ceil(alpha);
    let beta = m - alpha;
    let m = m as u32;
    if !(t - 0.5 * m as f64 * h > 0.0) {
        return Err(Error::domain("fractional derivative stencil leaves t > 0 at", t));
    }
    if beta == 0.0 {
        return Ok(central_derivative(|r| math::powf(r, c) * psi(r), t, h, m));
    }
    let mut failure = None;
    let value = central_derivative(
        |s| match riemann_liouville_integral_power(&psi, c, beta, s, FRACTIONAL_ORDER) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                f64::NAN
            }
        },
        t,
        h,
        m,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(value),
    }
}

/// `D^α φ(t)` for a plain `φ`, see [`riemann_liouville_derivative_power`].
pub fn riemann_liouville_derivative<F: Fn(f64) -> f64>(phi: F, alpha: f64, t: f64, h: f64) -> Result<f64> {
    riemann_liouville_derivative_power(phi, 0.0, alpha, t, h)
}
