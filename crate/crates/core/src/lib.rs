//! Generalized (Bessel) translations, weighted spherical means on the
//! positive orthant and Cauchy-problem solvers for the general
//! Euler–Poisson–Darboux equation
//!
//! ```text
//!     Δ_γ u(x, t) = u_tt + (k / t) u_t,    u(x, 0) = f(x),  u_t(x, 0) = 0,
//! ```
//!
//! where `Δ_γ = Σ (∂²/∂x_i² + (γ_i / x_i) ∂/∂x_i)` acts on functions even in
//! every coordinate.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs; the companion `bessel-means` crate carries the CLI,
//! file formats and thread pools.
//!
//! Layout:
//!
//! - [`numerics`]: Euler gamma, normalized Bessel functions, ₂F₁ for `z ≤ 0`,
//!   Gauss–Jacobi rules (Golub–Welsch), Chebyshev series and finite differences
//! - [`shift1d`]: the one-dimensional generalized translation in its angular,
//!   radial, power-law and degenerate forms
//! - [`sphere`]: weighted measures of the sphere and ball parts of the orthant
//! - [`means`]: multidimensional shift, weighted spherical mean, iterated mean
//! - [`epd`]: the Euler–Poisson–Darboux solver in every parameter regime
//! - [`ultrahyperbolic`]: mean-value identities for the B-ultrahyperbolic equation
//! - [`fields`]: closed-form test fields (constants, quadratics, Bessel products)

#![no_std]
#![allow(clippy::too_many_arguments)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod field;
pub(crate) mod math;

pub mod epd;
pub mod fields;
pub mod means;
pub mod numerics;
pub mod shift1d;
pub mod sphere;
pub mod ultrahyperbolic;

pub use error::{Error, Result};
pub use field::{FnField, MultiIndex, ScalarField};
