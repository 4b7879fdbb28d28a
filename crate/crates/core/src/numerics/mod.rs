//! Special functions and quadrature primitives shared by every other module.

mod bessel;
mod chebyshev;
mod finite_diff;
mod gamma;
mod hypergeometric;
mod quadrature;

pub use bessel::{bessel_j_normalized, bessel_i_normalized, NormalizedBessel};
pub use chebyshev::ChebyshevSeries;
pub use finite_diff::{
    bessel_operator_extrapolated, bessel_operator_fd, central_derivative, richardson,
};
pub use gamma::{beta_fn, gamma_fn};
pub use hypergeometric::gauss_2f1;
pub use quadrature::{gauss_jacobi_rule, QuadratureRule};

pub(crate) use gamma::gamma;
