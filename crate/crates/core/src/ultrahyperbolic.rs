//! Mean-value identities for the B-ultrahyperbolic equation
//!
//! ```text
//!     Δ_{γ'} u = Δ_{γ''} u,    u = u(x, y),  x ∈ ℝ^{m'}_+,  y ∈ ℝ^{m''}_+.
//! ```
//!
//! When `m' + |γ'| = m'' + |γ''|` the weighted spherical means of a solution over
//! the two blocks agree at equal radii, and iterated block means commute.
//! Fields on the product space take the concatenated point `(x, y)`.

use alloc::vec::Vec;

use crate::fields::BesselProduct;
use crate::field::check_field_dimension;
use crate::means::SphericalMean;
use crate::numerics::bessel_j_normalized;
use crate::{Error, MultiIndex, Result, ScalarField};

/// The split `ℝ^{m'}_+ × ℝ^{m''}_+` with a multi-index per block.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitGeometry {
    gamma_x: MultiIndex,
    gamma_y: MultiIndex,
}

impl SplitGeometry {
    pub fn new(gamma_x: MultiIndex, gamma_y: MultiIndex) -> Self {
        Self { gamma_x, gamma_y }
    }

    pub fn gamma_x(&self) -> &MultiIndex {
        &self.gamma_x
    }

    pub fn gamma_y(&self) -> &MultiIndex {
        &self.gamma_y
    }

    pub fn m1(&self) -> usize {
        self.gamma_x.len()
    }

    pub fn m2(&self) -> usize {
        self.gamma_y.len()
    }

    /// `m' + |γ'| − (m'' + |γ''|)`.
    pub fn balance_gap(&self) -> f64 {
        self.gamma_x.weighted_dimension() - self.gamma_y.weighted_dimension()
    }

    /// Whether `m' + |γ'| = m'' + |γ''|` (to `1e−12`).
    pub fn asgeirsson_admissible(&self) -> bool {
        self.balance_gap().abs() <= 1e-12
    }

    fn split<'p>(&self, point: &'p [f64]) -> (&'p [f64], &'p [f64]) {
        point.split_at(self.m1())
    }
}

/// `u(x, y) = j_{γ'}(x, ξ') j_{γ''}(y, ξ'')`, an exact solution when `|ξ'| = |ξ''|`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableSolution {
    geometry: SplitGeometry,
    x_factor: BesselProduct,
    y_factor: BesselProduct,
}

impl SeparableSolution {
    pub fn geometry(&self) -> &SplitGeometry {
        &self.geometry
    }

    /// `|ξ'| = |ξ''|`.
    pub fn frequency(&self) -> f64 {
        self.x_factor.frequency_norm()
    }

    /// Closed form of both block means at radius `r`: `u(x, y) · j_{(m'+|γ'|−2)/2}(r|ξ|)`.
    pub fn block_mean_x(&self, point: &[f64], r: f64) -> Result<f64> {
        let nu = 0.5 * (self.geometry.gamma_x.weighted_dimension() - 2.0);
        Ok(self.eval(point) * bessel_j_normalized(nu, r * self.frequency())?)
    }

    /// `u(x, y) · j_{(m''+|γ''|−2)/2}(r|ξ|)`.
    pub fn block_mean_y(&self, point: &[f64], r: f64) -> Result<f64> {
        let nu = 0.5 * (self.geometry.gamma_y.weighted_dimension() - 2.0);
        Ok(self.eval(point) * bessel_j_normalized(nu, r * self.frequency())?)
    }
}

impl ScalarField for SeparableSolution {
    fn dimension(&self) -> usize {
        self.geometry.m1() + self.geometry.m2()
    }

    fn eval(&self, point: &[f64]) -> f64 {
        let (x, y) = self.geometry.split(point);
        self.x_factor.eval(x) * self.y_factor.eval(y)
    }
}

/// Builds the separable solution; `|ξ'|` and `|ξ''|` must agree to `1e−12`.
pub fn separable_solution(geometry: &SplitGeometry, xi1: &[f64], xi2: &[f64]) -> Result<SeparableSolution> {
    let x_factor = BesselProduct::new(&geometry.gamma_x, xi1)?;
    let y_factor = BesselProduct::new(&geometry.gamma_y, xi2)?;
    let (a, b) = (x_factor.frequency_norm(), y_factor.frequency_norm());
    if (a - b).abs() > 1e-12 * a.max(b).max(1.0) {
        return Err(Error::Invalid("separable solution needs |xi'| = |xi''|"));
    }
    Ok(SeparableSolution {
        geometry: geometry.clone(),
        x_factor,
        y_factor,
    })
}

/// Quadrature orders for the block means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockOrders {
    pub sphere: usize,
    pub shift: usize,
}

impl Default for BlockOrders {
    fn default() -> Self {
        Self { sphere: 16, shift: 24 }
    }
}

// u restricted to one block with the other block frozen
struct Slice<'a, U: ?Sized> {
    u: &'a U,
    frozen: &'a [f64],
    x_block: bool,
}

impl<U: ScalarField + ?Sized> ScalarField for Slice<'_, U> {
    fn dimension(&self) -> usize {
        self.u.dimension() - self.frozen.len()
    }

    fn eval(&self, z: &[f64]) -> f64 {
        let mut p = Vec::with_capacity(self.u.dimension());
        if self.x_block {
            p.extend_from_slice(z);
            p.extend_from_slice(self.frozen);
        } else {
            p.extend_from_slice(self.frozen);
            p.extend_from_slice(z);
        }
        self.u.eval(&p)
    }
}

// x-block field z ↦ M^{γ''}_s [u(z, ·)](y)
struct InnerYMean<'a, U: ?Sized> {
    u: &'a U,
    y: &'a [f64],
    s: f64,
    mean_y: &'a SphericalMean,
}

impl<U: ScalarField + ?Sized> ScalarField for InnerYMean<'_, U> {
    fn dimension(&self) -> usize {
        self.u.dimension() - self.y.len()
    }

    fn eval(&self, z: &[f64]) -> f64 {
        let slice = Slice {
            u: self.u,
            frozen: z,
            x_block: false,
        };
        self.mean_y.eval(&slice, self.y, self.s)
    }
}

/// Block mean evaluators for one geometry.
#[derive(Debug, Clone)]
pub struct BlockMeans {
    geometry: SplitGeometry,
    mean_x: SphericalMean,
    mean_y: SphericalMean,
}

impl BlockMeans {
    pub fn new(geometry: &SplitGeometry, orders: BlockOrders) -> Result<Self> {
        Ok(Self {
            geometry: geometry.clone(),
            mean_x: SphericalMean::with_orders(&geometry.gamma_x, orders.sphere, orders.shift)?,
            mean_y: SphericalMean::with_orders(&geometry.gamma_y, orders.sphere, orders.shift)?,
        })
    }

    fn check<U: ScalarField + ?Sized>(&self, u: &U, x: &[f64], y: &[f64]) -> Result<()> {
        check_field_dimension(u, self.geometry.m1() + self.geometry.m2())?;
        self.geometry.gamma_x.check_point(x)?;
        self.geometry.gamma_y.check_point(y)
    }

    /// `M^{γ'}_u(x, r; y)`: the x-block mean at radius `r` with `y` fixed.
    pub fn mean_x<U: ScalarField + ?Sized>(&self, u: &U, x: &[f64], y: &[f64], r: f64) -> Result<f64> {
        self.check(u, x, y)?;
        let slice = Slice { u, frozen: y, x_block: true };
        Ok(self.mean_x.eval(&slice, x, r))
    }

    /// `M^{γ''}_u(x; y, r)`: the y-block mean at radius `r` with `x` fixed.
    pub fn mean_y<U: ScalarField + ?Sized>(&self, u: &U, x: &[f64], y: &[f64], r: f64) -> Result<f64> {
        self.check(u, x, y)?;
        let slice = Slice { u, frozen: x, x_block: false };
        Ok(self.mean_y.eval(&slice, y, r))
    }

    /// `U(x, r; y, s) = M^{γ'}_r M^{γ''}_s u`.
    pub fn iterated<U: ScalarField + ?Sized>(&self, u: &U, x: &[f64], y: &[f64], r: f64, s: f64) -> Result<f64> {
        self.check(u, x, y)?;
        let inner = InnerYMean {
            u,
            y,
            s,
            mean_y: &self.mean_y,
        };
        Ok(self.mean_x.eval(&inner, x, r))
    }
}

/// Both sides `(M^{γ'}_u(x, r; y), M^{γ''}_u(x; y, r))` of the Asgeirsson identity.
pub fn asgeirsson_check<U: ScalarField + ?Sized>(
    u: &U,
    geometry: &SplitGeometry,
    x: &[f64],
    y: &[f64],
    r: f64,
    orders: BlockOrders,
) -> Result<(f64, f64)> {
    let means = BlockMeans::new(geometry, orders)?;
    Ok((means.mean_x(u, x, y, r)?, means.mean_y(u, x, y, r)?))
}

/// `(U(x, r; y, s), U(x, s; y, r))`, equal for solutions on admissible geometries.
pub fn commuting_means_check<U: ScalarField + ?Sized>(
    u: &U,
    geometry: &SplitGeometry,
    x: &[f64],
    y: &[f64],
    r: f64,
    s: f64,
    orders: BlockOrders,
) -> Result<(f64, f64)> {
    let means = BlockMeans::new(geometry, orders)?;
    Ok((means.iterated(u, x, y, r, s)?, means.iterated(u, x, y, s, r)?))
}

/// Normalized means of `u(rθ; 0)` over `S_1^+(m')` (weight `θ^{γ'}`) and of
/// `u(0; rω)` over `S_1^+(m'')` (weight `ω^{γ''}`).
///
/// Requires `m' + |γ'| = m'' + |γ''| ≥ 3`.
pub fn boundary_means_check<U: ScalarField + ?Sized>(
    u: &U,
    geometry: &SplitGeometry,
    r: f64,
    orders: BlockOrders,
) -> Result<(f64, f64)> {
    check_field_dimension(u, geometry.m1() + geometry.m2())?;
    if !geometry.asgeirsson_admissible() {
        return Err(Error::Invalid("boundary means need m' + |gamma'| = m'' + |gamma''|"));
    }
    if geometry.gamma_x.weighted_dimension() < 3.0 {
        return Err(Error::Invalid("boundary means need m' + |gamma'| >= 3"));
    }
    let means = BlockMeans::new(geometry, orders)?;
    let mut point = alloc::vec![0.0; geometry.m1() + geometry.m2()];
    let m1 = geometry.m1();
    let left = means.mean_x.grid().average(|theta| {
        point.iter_mut().for_each(|p| *p = 0.0);
        for (p, th) in point[..m1].iter_mut().zip(theta) {
            *p = r * th;
        }
        u.eval(&point)
    });
    let right = means.mean_y.grid().average(|omega| {
        point.iter_mut().for_each(|p| *p = 0.0);
        for (p, om) in point[m1..].iter_mut().zip(omega) {
            *p = r * om;
        }
        u.eval(&point)
    });
    Ok((left, right))
}

/// `|Δ_{γ'} u − Δ_{γ''} u|` at `(x, y)` by second-order stencils.
pub fn ultrahyperbolic_residual<U: ScalarField + ?Sized>(
    u: &U,
    geometry: &SplitGeometry,
    x: &[f64],
    y: &[f64],
    h: f64,
) -> Result<f64> {
    check_field_dimension(u, geometry.m1() + geometry.m2())?;
    let slice_x = Slice { u, frozen: y, x_block: true };
    let slice_y = Slice { u, frozen: x, x_block: false };
    let lx = crate::epd::apply_delta_gamma(&slice_x, &geometry.gamma_x, x, h)?;
    let ly = crate::epd::apply_delta_gamma(&slice_y, &geometry.gamma_y, y, h)?;
    Ok((lx - ly).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Constant;
    use crate::math;

    fn mi(v: &[f64]) -> MultiIndex {
        MultiIndex::from_slice(v).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(SplitGeometry::new(mi(&[3.0]), mi(&[1.0, 1.0])).asgeirsson_admissible());
        assert!(!SplitGeometry::new(mi(&[1.0]), mi(&[1.0, 1.0])).asgeirsson_admissible());
    }

    #[test]
    fn separable_needs_equal_norms() {
        let g = SplitGeometry::new(mi(&[1.0, 1.0]), mi(&[1.0, 1.0]));
        assert!(separable_solution(&g, &[1.0, 1.0], &[1.0, 1.0]).is_ok());
        assert!(separable_solution(&g, &[1.0, 1.0], &[1.0, 0.5]).is_err());
    }

    #[test]
    fn constant_sides_are_one() {
        let g = SplitGeometry::new(mi(&[3.0]), mi(&[1.0, 1.0]));
        let one = Constant { dimension: 3, value: 1.0 };
        let orders = BlockOrders { sphere: 6, shift: 8 };
        let (a, b) = asgeirsson_check(&one, &g, &[0.5], &[0.2, 0.3], 1.0, orders).unwrap();
        assert!((a - 1.0).abs() < 1e-14 && (b - 1.0).abs() < 1e-14);
        let (a, b) = boundary_means_check(&one, &g, 0.7, orders).unwrap();
        assert!((a - 1.0).abs() < 1e-14 && (b - 1.0).abs() < 1e-14);
    }

    #[test]
    fn mixed_blocks_agree() {
        let g = SplitGeometry::new(mi(&[3.0]), mi(&[1.0, 1.0]));
        let u = separable_solution(&g, &[math::sqrt(2.0)], &[1.0, 1.0]).unwrap();
        let orders = BlockOrders { sphere: 12, shift: 16 };
        let (x, y) = ([0.6], [0.3, 0.9]);
        let (a, b) = asgeirsson_check(&u, &g, &x, &y, 1.2, orders).unwrap();
        let want = u.block_mean_x(&[0.6, 0.3, 0.9], 1.2).unwrap();
        assert!((a - want).abs() < 1e-9 && (b - want).abs() < 1e-9, "{a} {b} {want}");
        assert!(ultrahyperbolic_residual(&u, &g, &x, &y, 1e-3).unwrap() < 1e-5);
    }
}
