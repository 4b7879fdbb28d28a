//! Second-order finite differences for Bessel operators and plain derivatives.

/// Central-difference approximation of `(B_γ u)(t) = u'' + (γ/t) u'` for an even `u`.
///
/// Arguments `t − h < 0` are reflected through the even extension. At `t = 0`
/// the continuous limit `(1 + γ) u''(0)` is returned, with
/// `u''(0) ≈ 2(u(h) − u(0))/h²`.
pub fn bessel_operator_fd<F: Fn(f64) -> f64>(u: F, gamma: f64, t: f64, h: f64) -> f64 {
    let u0 = u(t);
    if t == 0.0 {
        return (1.0 + gamma) * 2.0 * (u(h) - u0) / (h * h);
    }
    let up = u(t + h);
    let um = u((t - h).abs());
    (up - 2.0 * u0 + um) / (h * h) + gamma / t * (up - um) / (2.0 * h)
}

/// [`bessel_operator_fd`] with one Richardson step on `{h, h/2}`, error `O(h⁴)`.
pub fn bessel_operator_extrapolated<F: Fn(f64) -> f64>(u: F, gamma: f64, t: f64, h: f64) -> f64 {
    let coarse = bessel_operator_fd(&u, gamma, t, h);
    let fine = bessel_operator_fd(&u, gamma, t, 0.5 * h);
    richardson(coarse, fine, 2)
}

/// The `m`-th derivative by the centred `m`-th difference
/// `h^{−m} Σ_j (−1)^j C(m, j) f(t + (m/2 − j) h)`, error `O(h²)`.
pub fn central_derivative<F: FnMut(f64) -> f64>(mut f: F, t: f64, h: f64, m: u32) -> f64 {
    if m == 0 {
        return f(t);
    }
    let mut sum = 0.0;
    let mut binom = 1.0;
    for j in 0..=m {
        if j > 0 {
            binom *= (m - j + 1) as f64 / j as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * binom * f(t + (0.5 * m as f64 - j as f64) * h);
    }
    let mut scale = 1.0;
    for _ in 0..m {
        scale *= h;
    }
    sum / scale
}

/// Combines estimates at steps `h` and `h/2` whose leading error is `O(h^p)`.
pub fn richardson(coarse: f64, fine: f64, order: u32) -> f64 {
    let factor = (1u64 << order) as f64;
    (factor * fine - coarse) / (factor - 1.0)
}
