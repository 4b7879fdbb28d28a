//! Weighted measures on the sphere part `S_1^+(n)` and ball part `B_1^+(n)`
//! of the positive orthant, all carrying the weight `x^γ = Π x_i^{γ_i}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::check_field_dimension;
use crate::math;
use crate::numerics::{gamma, gauss_jacobi_rule};
use crate::{Error, MultiIndex, Result, ScalarField};

pub const DEFAULT_SPHERE_ORDER: usize = 48;

fn check_dimension(n: usize, g: &MultiIndex) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("dimension must be at least 1"));
    }
    if g.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.len(),
        });
    }
    Ok(())
}

/// `|S_1^+(n)|_γ = Π Γ((γ_i+1)/2) / (2^{n−1} Γ((n+|γ|)/2))`.
pub fn weighted_sphere_area(n: usize, g: &MultiIndex) -> Result<f64> {
    check_dimension(n, g)?;
    let num: f64 = g.components().iter().map(|gi| gamma(0.5 * (gi + 1.0))).product();
    Ok(num / (math::powi(2.0, n as i32 - 1) * gamma(0.5 * g.weighted_dimension())))
}

/// `∫_{B_1^+(n)} x^γ dx = Π Γ((γ_i+1)/2) / (2^n Γ((n+|γ|)/2 + 1))`.
pub fn weighted_ball_volume(n: usize, g: &MultiIndex) -> Result<f64> {
    check_dimension(n, g)?;
    let num: f64 = g.components().iter().map(|gi| gamma(0.5 * (gi + 1.0))).product();
    Ok(num / (math::powi(2.0, n as i32) * gamma(0.5 * g.weighted_dimension() + 1.0)))
}

/// `∫_{Σy_i ≤ 1, y ≥ 0} Π y_i^{α_i} dy = Π Γ(α_i+1) / Γ(Σα_i + n + 1)`.
pub fn simplex_monomial_integral(alpha: &[f64]) -> Result<f64> {
    if alpha.is_empty() {
        return Err(Error::Invalid("simplex integral needs at least one exponent"));
    }
    if let Some(&bad) = alpha.iter().find(|a| !(**a > -1.0 && a.is_finite())) {
        return Err(Error::domain("simplex exponent", bad));
    }
    let num: f64 = alpha.iter().map(|a| gamma(a + 1.0)).product();
    let total: f64 = alpha.iter().sum::<f64>() + alpha.len() as f64 + 1.0;
    Ok(num / gamma(total))
}

/// Tensor quadrature on `S_1^+(n)` with `θ^γ dS` folded into the weights.
///
/// Nodes come from the hyperspherical angles `θ_1 = cos ψ_1`,
/// `θ_2 = sin ψ_1 cos ψ_2`, …, `θ_n = sin ψ_1 ⋯ sin ψ_{n−1}`, `ψ_j ∈ [0, π/2]`.
/// The factor belonging to `ψ_j` is `cos^{γ_j} ψ sin^{γ_{j+1}+…+γ_n+n−1−j} ψ`,
/// and `u = cos 2ψ` turns it into a Jacobi weight on `[−1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    dimension: usize,
    gamma: MultiIndex,
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl SphereGrid {
    pub fn new(n: usize, g: &MultiIndex, order: usize) -> Result<Self> {
        check_dimension(n, g)?;
        if order < 1 {
            return Err(Error::Invalid("sphere grid order must be positive"));
        }
        let comps = g.components();
        // (cos ψ_j, sin ψ_j, weight) per angle
        let mut factors: Vec<Vec<(f64, f64, f64)>> = Vec::with_capacity(n.saturating_sub(1));
        for j in 0..n.saturating_sub(1) {
            let a = comps[j];
            let b: f64 = comps[j + 1..].iter().sum::<f64>() + (n - 2 - j) as f64;
            let rule = gauss_jacobi_rule(order, 0.5 * (b - 1.0), 0.5 * (a - 1.0))?;
            let scale = 0.5 * math::powf(2.0, -0.5 * (a + b));
            factors.push(
                rule.iter()
                    .map(|(u, w)| (math::sqrt(0.5 * (1.0 + u)), math::sqrt(0.5 * (1.0 - u)), scale * w))
                    .collect(),
            );
        }

        let count = factors.iter().map(Vec::len).product::<usize>();
        let mut nodes = Vec::with_capacity(count * n);
        let mut weights = Vec::with_capacity(count);
        let mut idx = vec![0usize; factors.len()];
        let mut theta = vec![0.0; n];
        for _ in 0..count {
            let mut tail = 1.0;
            let mut w = 1.0;
            for (j, f) in factors.iter().enumerate() {
                let (c, s, wj) = f[idx[j]];
                theta[j] = tail * c;
                tail *= s;
                w *= wj;
            }
            theta[n - 1] = tail;
            nodes.extend_from_slice(&theta);
            weights.push(w);
            for j in (0..idx.len()).rev() {
                idx[j] += 1;
                if idx[j] < order {
                    break;
                }
                idx[j] = 0;
            }
        }
        Ok(Self {
            dimension: n,
            gamma: g.clone(),
            order,
            nodes,
            weights,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn gamma(&self) -> &MultiIndex {
        &self.gamma
    }

    /// Per-angle rule order.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of nodes, `order^{n−1}`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn node(&self, i: usize) -> &[f64] {
        &self.nodes[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], f64)> + '_ {
        self.nodes
            .chunks_exact(self.dimension)
            .zip(self.weights.iter().copied())
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `∫_{S_1^+(n)} f(θ) θ^γ dS`.
    pub fn integrate<F: FnMut(&[f64]) -> f64>(&self, mut f: F) -> f64 {
        self.iter().map(|(theta, w)| w * f(theta)).sum()
    }

    /// The normalized average `∫ f θ^γ dS / ∫ θ^γ dS`.
    pub fn average<F: FnMut(&[f64]) -> f64>(&self, f: F) -> f64 {
        self.integrate(f) / self.weight_sum()
    }
}

/// `∫_{B_r^+(n)} g(|x|) f(x) x^γ dx = ∫_0^r g(λ) λ^{n+|γ|−1} ∫_{S_1^+(n)} f(λθ) θ^γ dS dλ`.
pub fn ball_integral<F, G>(
    f: &F,
    g: G,
    r: f64,
    gamma_index: &MultiIndex,
    radial_order: usize,
    sphere_order: usize,
) -> Result<f64>
where
    F: ScalarField + ?Sized,
    G: Fn(f64) -> f64,
{
    let n = gamma_index.len();
    check_field_dimension(f, n)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("ball radius", r));
    }
    let grid = SphereGrid::new(n, gamma_index, sphere_order)?;
    let rule = gauss_jacobi_rule(radial_order, 0.0, gamma_index.weighted_dimension() - 1.0)?;
    let mut point = vec![0.0; n];
    Ok(rule.integrate_on(0.0, r, |lambda| {
        let sphere = grid.integrate(|theta| {
            for (p, t) in point.iter_mut().zip(theta) {
                *p = lambda * t;
            }
            f.eval(&point)
        });
        g(lambda) * sphere
    }))
}
