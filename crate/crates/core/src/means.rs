//! Multidimensional generalized shift, weighted spherical means and iterated means.
//!
//! The weighted spherical mean of `f` is
//!
//! ```text
//!     M_f^γ(x; t) = |S_1^+(n)|_γ^{−1} ∫_{S_1^+(n)} ^γT_x^{tθ} f(x) θ^γ dS,
//! ```
//!
//! where `^γT^y = ^{γ_1}T^{y_1}_{x_1} ⋯ ^{γ_n}T^{y_n}_{x_n}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::check_field_dimension;
use crate::math;
use crate::numerics::{gamma, gauss_jacobi_rule, ChebyshevSeries};
use crate::shift1d::AngularShift;
use crate::sphere::SphereGrid;
use crate::{Error, MultiIndex, Result, ScalarField};

/// Radial quadrature order used by the single-integral reduction of the iterated mean.
pub const DEFAULT_REDUCTION_ORDER: usize = 32;

/// Tensor product of one-dimensional angular shifts, one per coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct MultidimShift {
    gamma: MultiIndex,
    factors: Vec<AngularShift>,
}

impl MultidimShift {
    pub fn new(g: &MultiIndex, order: usize) -> Result<Self> {
        let factors = g
            .components()
            .iter()
            .map(|&gi| AngularShift::new(gi, order))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            gamma: g.clone(),
            factors,
        })
    }

    pub fn gamma(&self) -> &MultiIndex {
        &self.gamma
    }

    pub fn order(&self) -> usize {
        self.factors[0].order()
    }

    /// `^γT^y f(x)` without argument validation.
    pub fn apply<F: ScalarField + ?Sized>(&self, f: &F, x: &[f64], y: &[f64]) -> f64 {
        let lists: Vec<Vec<(f64, f64)>> = self
            .factors
            .iter()
            .zip(x.iter().zip(y))
            .map(|(s, (&xi, &yi))| {
                let (xi, yi) = (xi.abs(), yi.abs());
                if yi == 0.0 {
                    vec![(xi, 1.0)]
                } else if xi == 0.0 {
                    vec![(yi, 1.0)]
                } else {
                    s.points(xi, yi).collect()
                }
            })
            .collect();
        let mut point = vec![0.0; x.len()];
        tensor_sum(f, &lists, &mut point, 0)
    }

    pub fn apply_checked<F: ScalarField + ?Sized>(&self, f: &F, x: &[f64], y: &[f64]) -> Result<f64> {
        check_field_dimension(f, self.gamma.len())?;
        self.gamma.check_point(x)?;
        self.gamma.check_point(y)?;
        Ok(self.apply(f, x, y))
    }
}

fn tensor_sum<F: ScalarField + ?Sized>(
    f: &F,
    lists: &[Vec<(f64, f64)>],
    point: &mut [f64],
    level: usize,
) -> f64 {
    if level == lists.len() {
        return f.eval(point);
    }
    let mut sum = 0.0;
    for &(z, w) in &lists[level] {
        point[level] = z;
        sum += w * tensor_sum(f, lists, point, level + 1);
    }
    sum
}

/// `^γT^y f(x)` by an n-fold tensor quadrature.
pub fn multidim_shift<F: ScalarField + ?Sized>(
    f: &F,
    g: &MultiIndex,
    x: &[f64],
    y: &[f64],
    order: usize,
) -> Result<f64> {
    MultidimShift::new(g, order)?.apply_checked(f, x, y)
}

/// Evaluator for `M_f^γ(x; t)` holding a sphere grid and the shift rules.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalMean {
    grid: SphereGrid,
    shift: MultidimShift,
    inv_area: f64,
}

impl SphericalMean {
    pub fn new(grid: SphereGrid, shift_order: usize) -> Result<Self> {
        let shift = MultidimShift::new(grid.gamma(), shift_order)?;
        let inv_area = 1.0 / grid.weight_sum();
        Ok(Self {
            grid,
            shift,
            inv_area,
        })
    }

    pub fn with_orders(g: &MultiIndex, sphere_order: usize, shift_order: usize) -> Result<Self> {
        Self::new(SphereGrid::new(g.len(), g, sphere_order)?, shift_order)
    }

    pub fn gamma(&self) -> &MultiIndex {
        self.grid.gamma()
    }

    pub fn dimension(&self) -> usize {
        self.grid.dimension()
    }

    pub fn grid(&self) -> &SphereGrid {
        &self.grid
    }

    pub fn shift(&self) -> &MultidimShift {
        &self.shift
    }

    /// `M_f^γ(x; t)` without validation; `t = 0` gives `f(x)` exactly.
    pub fn eval<F: ScalarField + ?Sized>(&self, f: &F, x: &[f64], t: f64) -> f64 {
        let t = t.abs();
        if t == 0.0 {
            return f.eval(x);
        }
        let mut y = vec![0.0; x.len()];
        let sum = self.grid.integrate(|theta| {
            for (yi, th) in y.iter_mut().zip(theta) {
                *yi = t * th;
            }
            self.shift.apply(f, x, &y)
        });
        sum * self.inv_area
    }

    pub fn mean<F: ScalarField + ?Sized>(&self, f: &F, x: &[f64], t: f64) -> Result<f64> {
        self.check(f, x)?;
        if !t.is_finite() {
            return Err(Error::domain("mean radius", t));
        }
        Ok(self.eval(f, x, t))
    }

    fn check<F: ScalarField + ?Sized>(&self, f: &F, x: &[f64]) -> Result<()> {
        check_field_dimension(f, self.dimension())?;
        self.gamma().check_point(x)
    }
}

/// `M_f^γ(x; t)` on the given grid with shift rules of the given order.
pub fn spherical_mean<F: ScalarField + ?Sized>(
    f: &F,
    g: &MultiIndex,
    x: &[f64],
    t: f64,
    grid: &SphereGrid,
    order: usize,
) -> Result<f64> {
    if grid.gamma() != g {
        return Err(Error::Invalid("sphere grid was built for a different multi-index"));
    }
    SphericalMean::new(grid.clone(), order)?.mean(f, x, t)
}

/// The field `z ↦ M_f^γ(z; μ)`, used to nest means.
pub struct MeanField<'a, F: ?Sized> {
    mean: &'a SphericalMean,
    f: &'a F,
    radius: f64,
}

impl<'a, F: ScalarField + ?Sized> MeanField<'a, F> {
    pub fn new(mean: &'a SphericalMean, f: &'a F, radius: f64) -> Self {
        Self { mean, f, radius }
    }
}

impl<F: ScalarField + ?Sized> ScalarField for MeanField<'_, F> {
    fn dimension(&self) -> usize {
        self.mean.dimension()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        self.mean.eval(self.f, x, self.radius)
    }
}

/// `I_f^γ(x; λ, μ) = M_λ M_μ f(x)` by nesting two spherical means.
///
/// `outer` carries the λ-mean and `inner` the μ-mean, so their orders can be
/// chosen separately; the cost is the product of both.
pub fn iterated_mean_nested<F: ScalarField + ?Sized>(
    outer: &SphericalMean,
    inner: &SphericalMean,
    f: &F,
    x: &[f64],
    lambda: f64,
    mu: f64,
) -> Result<f64> {
    inner.check(f, x)?;
    if outer.gamma() != inner.gamma() {
        return Err(Error::Invalid("nested means must share the multi-index"));
    }
    let g = MeanField::new(inner, f, mu);
    Ok(outer.eval(&g, x, lambda))
}

/// `I_f^γ(x; λ, μ)` as a mean of means on one grid.
pub fn iterated_mean_double<F: ScalarField + ?Sized>(
    f: &F,
    g: &MultiIndex,
    x: &[f64],
    lambda: f64,
    mu: f64,
    grid: &SphereGrid,
    order: usize,
) -> Result<f64> {
    if grid.gamma() != g {
        return Err(Error::Invalid("sphere grid was built for a different multi-index"));
    }
    let mean = SphericalMean::new(grid.clone(), order)?;
    iterated_mean_nested(&mean, &mean, f, x, lambda, mu)
}

/// Kernel of the single-integral reduction at radius `r`:
/// `((λ² − (r−μ)²)((r+μ)² − λ²))^{(N−3)/2} r` with `N = n + |γ|`.
pub fn reduction_kernel(weighted_dimension: f64, lambda: f64, mu: f64, r: f64) -> f64 {
    let p = (lambda * lambda - (r - mu) * (r - mu)) * ((r + mu) * (r + mu) - lambda * lambda);
    math::powf(p.max(0.0), 0.5 * (weighted_dimension - 3.0)) * r
}

/// Prefactor turning [`reduction_kernel`] into a probability density on `[|λ−μ|, λ+μ]`.
pub fn reduction_prefactor(weighted_dimension: f64, lambda: f64, mu: f64) -> f64 {
    let n = weighted_dimension;
    2.0 * gamma(0.5 * n) / (math::sqrt(math::PI) * gamma(0.5 * (n - 1.0)))
        / math::powf(2.0 * lambda * mu, n - 2.0)
}

/// `I_f^γ(x; λ, μ)` through one radial integral of the mean profile,
///
/// ```text
///     I = c(λ, μ) ∫_{|λ−μ|}^{λ+μ} ((λ² − (r−μ)²)((r+μ)² − λ²))^{(N−3)/2} M_f^γ(x; r) r dr,
/// ```
///
/// i.e. the one-dimensional shift `^{N−1}T^λ_μ` applied to `r ↦ M_f^γ(x; r)`.
/// With `ρ = r²` the kernel is a symmetric Jacobi weight on `[(λ−μ)², (λ+μ)²]`.
pub fn iterated_mean_single<F: ScalarField + ?Sized>(
    mean: &SphericalMean,
    f: &F,
    x: &[f64],
    lambda: f64,
    mu: f64,
    radial_order: usize,
) -> Result<f64> {
    mean.check(f, x)?;
    let (lambda, mu) = (lambda.abs(), mu.abs());
    if lambda == 0.0 {
        return Ok(mean.eval(f, x, mu));
    }
    if mu == 0.0 {
        return Ok(mean.eval(f, x, lambda));
    }
    let nw = mean.gamma().weighted_dimension();
    let e = 0.5 * (nw - 3.0);
    let rule = gauss_jacobi_rule(radial_order, e, e)?;
    let total: f64 = rule.weights().iter().sum();
    let lo = (lambda - mu) * (lambda - mu);
    let hi = (lambda + mu) * (lambda + mu);
    // Σ w_i / Σ w = normalized kernel because the reduction maps 1 to 1.
    let half = 0.5 * (hi - lo);
    Ok(rule
        .iter()
        .map(|(u, w)| w / total * mean.eval(f, x, math::sqrt(lo + half * (1.0 + u))))
        .sum())
}

/// [`iterated_mean_single`] with a fresh evaluator for `grid` and the default radial order.
pub fn iterated_mean_reduced<F: ScalarField + ?Sized>(
    f: &F,
    g: &MultiIndex,
    x: &[f64],
    lambda: f64,
    mu: f64,
    grid: &SphereGrid,
    order: usize,
) -> Result<f64> {
    if grid.gamma() != g {
        return Err(Error::Invalid("sphere grid was built for a different multi-index"));
    }
    let mean = SphericalMean::new(grid.clone(), order)?;
    iterated_mean_single(&mean, f, x, lambda, mu, DEFAULT_REDUCTION_ORDER)
}

/// A sampled profile `r ↦ M_f^γ(center; r)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialCurve {
    pub center: Vec<f64>,
    pub gamma: MultiIndex,
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
}

impl RadialCurve {
    /// Samples the mean at strictly increasing nonnegative radii.
    pub fn sample<F: ScalarField + ?Sized>(
        mean: &SphericalMean,
        f: &F,
        center: &[f64],
        radii: &[f64],
    ) -> Result<Self> {
        mean.check(f, center)?;
        if radii.first().is_some_and(|r| *r < 0.0) {
            return Err(Error::domain("profile radius", radii[0]));
        }
        if radii.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Invalid("profile radii must be strictly increasing"));
        }
        Ok(Self {
            center: center.to_vec(),
            gamma: mean.gamma().clone(),
            radii: radii.to_vec(),
            values: radii.iter().map(|&r| mean.eval(f, center, r)).collect(),
        })
    }
}

/// Chebyshev interpolant of `P(ρ) = M_f^γ(center; √ρ)` on `[0, horizon²]`.
///
/// The mean is even and smooth in `r`, so it is a smooth function of `ρ = r²`
/// and a modest number of Lobatto nodes resolves it to near machine precision.
/// Derivatives in `ρ` come from differentiating the series.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanProfile {
    horizon: f64,
    at_zero: f64,
    series: Vec<ChebyshevSeries>,
}

impl MeanProfile {
    pub fn build<F: ScalarField + ?Sized>(
        mean: &SphericalMean,
        f: &F,
        center: &[f64],
        horizon: f64,
        nodes: usize,
        derivatives: usize,
    ) -> Result<Self> {
        mean.check(f, center)?;
        if !(horizon > 0.0 && horizon.is_finite()) {
            return Err(Error::domain("profile horizon", horizon));
        }
        let at_zero = f.eval(center);
        let p = ChebyshevSeries::from_fn(0.0, horizon * horizon, nodes, |rho| {
            if rho <= 0.0 {
                at_zero
            } else {
                mean.eval(f, center, math::sqrt(rho))
            }
        })?;
        let mut series = Vec::with_capacity(derivatives + 1);
        series.push(p);
        for j in 0..derivatives {
            let d = series[j].derivative();
            series.push(d);
        }
        Ok(Self {
            horizon,
            at_zero,
            series,
        })
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// `f(center)`, the exact value at `r = 0`.
    pub fn value_at_zero(&self) -> f64 {
        self.at_zero
    }

    /// Highest `ρ`-derivative available.
    pub fn max_derivative(&self) -> usize {
        self.series.len() - 1
    }

    /// `M_f^γ(center; r)`.
    pub fn eval(&self, r: f64) -> f64 {
        if r == 0.0 {
            return self.at_zero;
        }
        self.series[0].eval(r * r)
    }

    /// `d^j P / dρ^j` at `ρ`.
    pub fn derivative_rho(&self, j: usize, rho: f64) -> f64 {
        if j == 0 && rho == 0.0 {
            return self.at_zero;
        }
        self.series[j].eval(rho)
    }

    /// Magnitude of the trailing coefficients of the interpolant.
    pub fn truncation_estimate(&self) -> f64 {
        self.series[0].tail_magnitude()
    }
}
