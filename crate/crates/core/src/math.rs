//! Thin wrappers over `libm` so results do not depend on whether `std` is linked.

pub use core::f64::consts::PI;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

#[inline]
pub fn round(x: f64) -> f64 {
    libm::round(x)
}

#[inline]
pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub fn is_integer(x: f64) -> bool {
    x.is_finite() && libm::floor(x) == x
}

/// `sin(πx)` with the argument reduced before scaling, so integers give exact zeros.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * round(0.5 * x);
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    sin(PI * r)
}
