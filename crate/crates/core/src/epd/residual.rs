//! Finite-difference Bessel Laplacians and PDE residuals.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::check_field_dimension;
use crate::numerics::richardson;
use crate::{MultiIndex, Result, ScalarField};

use super::EpdSolution;

/// `(B_γ u)(t)` from samples `u(|t−h|)`, `u(t)`, `u(t+h)`; the axis limit at `t = 0`.
pub(crate) fn bessel_from_samples(minus: f64, centre: f64, plus: f64, gamma: f64, t: f64, h: f64) -> f64 {
    if t == 0.0 {
        return (1.0 + gamma) * 2.0 * (plus - centre) / (h * h);
    }
    (plus - 2.0 * centre + minus) / (h * h) + gamma / t * (plus - minus) / (2.0 * h)
}

fn delta_plain<F: Fn(&[f64]) -> f64>(f: &F, gamma: &[f64], x: &[f64], h: f64) -> f64 {
    let centre = f(x);
    let mut y = x.to_vec();
    let mut sum = 0.0;
    for (i, &g) in gamma.iter().enumerate() {
        let xi = x[i];
        y[i] = xi + h;
        let plus = f(&y);
        let minus = if xi == 0.0 {
            plus
        } else {
            y[i] = (xi - h).abs();
            f(&y)
        };
        y[i] = xi;
        sum += bessel_from_samples(minus, centre, plus, g, xi, h);
    }
    sum
}

fn delta_step<F: Fn(&[f64]) -> f64>(f: &F, gamma: &[f64], x: &[f64], h: f64, extrapolate: bool) -> f64 {
    if extrapolate {
        richardson(delta_plain(f, gamma, x, h), delta_plain(f, gamma, x, 0.5 * h), 2)
    } else {
        delta_plain(f, gamma, x, h)
    }
}

/// `Δ_γ^m f(x)` by `m` nested stencils.
pub(crate) fn delta_power<F: Fn(&[f64]) -> f64>(
    f: &F,
    gamma: &[f64],
    x: &[f64],
    m: usize,
    h: f64,
    extrapolate: bool,
) -> f64 {
    match m {
        0 => f(x),
        1 => delta_step(f, gamma, x, h, extrapolate),
        _ => delta_step(
            &|y: &[f64]| delta_power(f, gamma, y, m - 1, h, extrapolate),
            gamma,
            x,
            h,
            extrapolate,
        ),
    }
}

/// `Δ_γ f(x) = Σ (B_{γ_i})_{x_i} f` by second-order central differences.
///
/// Coordinates on the axis use the limit `(1 + γ_i) ∂²f/∂x_i²`; stencil points
/// that would leave the orthant are reflected.
pub fn apply_delta_gamma<F: ScalarField + ?Sized>(f: &F, gamma: &MultiIndex, x: &[f64], h: f64) -> Result<f64> {
    check_field_dimension(f, gamma.len())?;
    gamma.check_point(x)?;
    Ok(delta_plain(&|y: &[f64]| f.eval(y), gamma.components(), x, h))
}

/// [`apply_delta_gamma`] with one Richardson step on `{h, h/2}`.
pub fn apply_delta_gamma_extrapolated<F: ScalarField + ?Sized>(
    f: &F,
    gamma: &MultiIndex,
    x: &[f64],
    h: f64,
) -> Result<f64> {
    check_field_dimension(f, gamma.len())?;
    gamma.check_point(x)?;
    Ok(delta_step(&|y: &[f64]| f.eval(y), gamma.components(), x, h, true))
}

/// `max_p |Δ_γ^m f(p)|` over the probes, with `m` nested plain stencils of step `h`.
pub fn b_polyharmonic_residual<F: ScalarField + ?Sized>(
    f: &F,
    gamma: &MultiIndex,
    order: usize,
    probes: &[Vec<f64>],
    h: f64,
) -> Result<f64> {
    check_field_dimension(f, gamma.len())?;
    let mut worst: f64 = 0.0;
    for p in probes {
        gamma.check_point(p)?;
        let v = delta_power(&|y: &[f64]| f.eval(y), gamma.components(), p, order, h, false);
        worst = worst.max(v.abs());
    }
    Ok(worst)
}

/// `|Δ_γ u(·, t)(x) − (B_k)_t u(x, t)|` with second-order stencils of step `h`.
pub fn epd_residual<F: ScalarField>(u: &EpdSolution<F>, x: &[f64], t: f64, h: f64) -> Result<f64> {
    let gamma = u.problem().gamma().components();
    let centre = u.at(x)?;
    let u0 = centre.eval(t)?;
    let mut lap = 0.0;
    let mut y = x.to_vec();
    for (i, &g) in gamma.iter().enumerate() {
        let xi = x[i];
        y[i] = xi + h;
        let plus = u.at(&y)?.eval(t)?;
        let minus = if xi == 0.0 {
            plus
        } else {
            y[i] = (xi - h).abs();
            u.at(&y)?.eval(t)?
        };
        y[i] = xi;
        lap += bessel_from_samples(minus, u0, plus, g, xi, h);
    }
    let tp = centre.eval(t + h)?;
    let tm = centre.eval((t - h).abs())?;
    let bk = bessel_from_samples(tm, u0, tp, u.k(), t, h);
    Ok((lap - bk).abs())
}

/// The residual of an arbitrary `u(x, t)`, for negative controls.
pub fn epd_residual_of<U: Fn(&[f64], f64) -> f64>(
    u: U,
    gamma: &MultiIndex,
    k: f64,
    x: &[f64],
    t: f64,
    h: f64,
) -> Result<f64> {
    gamma.check_point(x)?;
    let lap = delta_plain(&|y: &[f64]| u(y, t), gamma.components(), x, h);
    let bk = bessel_from_samples(u(x, (t - h).abs()), u(x, t), u(x, t + h), k, t, h);
    Ok((lap - bk).abs())
}

/// The grid `{a, b, c}^n` used to probe B-polyharmonicity.
pub fn probe_lattice(n: usize, values: &[f64]) -> Vec<Vec<f64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}
