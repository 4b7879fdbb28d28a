use alloc::vec;
use alloc::vec::Vec;

use super::gamma::gamma;
use crate::math;
use crate::{Error, Result};

/// A Gauss–Jacobi rule on `[−1, 1]` for the weight `(1 − u)^α (1 + u)^β`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    jacobi_exponents: (f64, f64),
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn interval(&self) -> (f64, f64) {
        (-1.0, 1.0)
    }

    /// `(α, β)`; `(0, 0)` is Gauss–Legendre.
    pub fn jacobi_exponents(&self) -> (f64, f64) {
        self.jacobi_exponents
    }

    /// Exact integral of the weight function, `2^{α+β+1} B(α+1, β+1)`.
    pub fn weight_integral(&self) -> f64 {
        let (a, b) = self.jacobi_exponents;
        jacobi_moment_zero(a, b)
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `∫_{−1}^{1} (1−u)^α (1+u)^β f(u) du`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.iter().map(|(u, w)| w * f(u)).sum()
    }

    /// `∫_a^b (b−r)^α (r−a)^β f(r) dr` through the affine map of `[−1, 1]` onto `[a, b]`.
    pub fn integrate_on<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let (alpha, beta) = self.jacobi_exponents;
        let scale = math::powf(half, alpha + beta + 1.0);
        scale * self.integrate(|u| f(a + half * (1.0 + u)))
    }

    /// Nodes mapped to `[a, b]` with weights that sum to one.
    pub fn probability_nodes(&self, a: f64, b: f64) -> Vec<(f64, f64)> {
        let total: f64 = self.weights.iter().sum();
        let half = 0.5 * (b - a);
        self.iter()
            .map(|(u, w)| (a + half * (1.0 + u), w / total))
            .collect()
    }
}

fn jacobi_moment_zero(alpha: f64, beta: f64) -> f64 {
    math::powf(2.0, alpha + beta + 1.0) * gamma(alpha + 1.0) * gamma(beta + 1.0)
        / gamma(alpha + beta + 2.0)
}

/// Gauss–Jacobi rule of the given order for `(1 − u)^α (1 + u)^β` on `[−1, 1]`,
/// exact for polynomials of degree `≤ 2·order − 1`.
///
/// Built with Golub–Welsch: the nodes are the eigenvalues of the Jacobi matrix
/// of the orthonormal recurrence, the weights are `μ₀ v₀²` from the first
/// components of its normalized eigenvectors.
pub fn gauss_jacobi_rule(order: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    if order == 0 {
        return Err(Error::Invalid("quadrature order must be at least 1"));
    }
    if !(alpha > -1.0 && alpha.is_finite()) {
        return Err(Error::domain("Jacobi exponent alpha", alpha));
    }
    if !(beta > -1.0 && beta.is_finite()) {
        return Err(Error::domain("Jacobi exponent beta", beta));
    }

    let n = order;
    let ab = alpha + beta;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    for (i, d) in diag.iter_mut().enumerate() {
        let k = i as f64;
        let s = 2.0 * k + ab;
        *d = if i == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / (s * (s + 2.0))
        };
    }
    for (i, e) in off.iter_mut().enumerate().take(n - 1) {
        let k = (i + 1) as f64;
        let s = 2.0 * k + ab;
        let b2 = if i == 0 {
            4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0))
        } else {
            4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        *e = math::sqrt(b2);
    }

    let mut first = vec![0.0; n];
    first[0] = 1.0;
    symmetric_tridiagonal_eigen(&mut diag, &mut off, &mut first)?;

    let mu0 = jacobi_moment_zero(alpha, beta);
    let mut pairs: Vec<(f64, f64)> = diag
        .into_iter()
        .zip(first)
        .map(|(x, v)| (x, mu0 * v * v))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let (nodes, weights) = pairs.into_iter().unzip();
    Ok(QuadratureRule {
        nodes,
        weights,
        jacobi_exponents: (alpha, beta),
    })
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
///
/// `diag` is overwritten by the eigenvalues, `off[i]` couples rows `i` and
/// `i+1` (the last entry is scratch), and `first` is the first row of the
/// accumulated rotation matrix, i.e. the first component of every eigenvector.
fn symmetric_tridiagonal_eigen(diag: &mut [f64], off: &mut [f64], first: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n == 1 {
        return Ok(());
    }
    off[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 100 {
                return Err(Error::NoConvergence {
                    what: "tridiagonal QL",
                    iterations,
                });
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = math::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + if g >= 0.0 { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = math::hypot(f, g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                let z = first[i + 1];
                first[i + 1] = s * first[i] + c * z;
                first[i] = c * first[i] - s * z;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::gamma::beta_fn;

    // Moments M_d = ∫ (1−u)^α (1+u)^β u^d du from integrating
    // d/du[(1−u)^{α+1}(1+u)^{β+1}u^d] = 0:  (α+β+d+2) M_{d+1} = (β−α) M_d + d M_{d−1}.
    fn monomial_moment(alpha: f64, beta: f64, d: u32) -> f64 {
        let m0 = math::powf(2.0, alpha + beta + 1.0) * beta_fn(alpha + 1.0, beta + 1.0).unwrap();
        let (mut prev, mut cur) = (0.0, m0);
        for j in 0..d {
            let next = ((beta - alpha) * cur + j as f64 * prev) / (alpha + beta + j as f64 + 2.0);
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn single_node_legendre() {
        let r = gauss_jacobi_rule(1, 0.0, 0.0).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn legendre_16_integrates_quadratic() {
        let r = gauss_jacobi_rule(16, 0.0, 0.0).unwrap();
        assert!((r.integrate(|u| u * u) - 2.0 / 3.0).abs() < 1e-14);
        for d in 0..=31u32 {
            let got = r.integrate(|u| math::powi(u, d as i32));
            let want = if d % 2 == 1 { 0.0 } else { 2.0 / (d as f64 + 1.0) };
            assert!((got - want).abs() < 1e-14, "d={d}");
        }
    }

    #[test]
    fn chebyshev_second_kind_mass() {
        // ∫ (1−u²)^{1/2} du = π/2
        let r = gauss_jacobi_rule(20, 0.5, 0.5).unwrap();
        let total: f64 = r.weights().iter().sum();
        assert!((total - math::PI / 2.0).abs() < 1e-14);
    }

    #[test]
    fn polynomial_exactness_against_beta_moments() {
        for (alpha, beta) in [(0.0, 0.0), (-0.5, -0.5), (0.35, -0.7), (2.5, 1.25), (-0.99, 0.0)] {
            for m in [1usize, 3, 6, 9] {
                let rule = gauss_jacobi_rule(m, alpha, beta).unwrap();
                assert_eq!(rule.order(), m);
                assert!(rule.weights().iter().all(|w| *w > 0.0));
                let mass: f64 = rule.weights().iter().sum();
                assert!((mass / rule.weight_integral() - 1.0).abs() < 1e-12);
                for d in 0..(2 * m as u32) {
                    let got = rule.integrate(|u| math::powi(u, d as i32));
                    let want = monomial_moment(alpha, beta, d);
                    let scale = rule.weight_integral();
                    assert!(
                        (got - want).abs() <= 1e-12 * scale,
                        "α={alpha} β={beta} m={m} d={d}: {got} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn nodes_sorted_inside_interval() {
        let r = gauss_jacobi_rule(64, -0.25, 1.5).unwrap();
        assert!(r.nodes().windows(2).all(|w| w[0] < w[1]));
        assert!(r.nodes()[0] > -1.0 && r.nodes()[63] < 1.0);
    }

    #[test]
    fn mapped_interval_integral() {
        // ∫_0^2 (2−r)^{1/2} r dr = 16√2/15
        let r = gauss_jacobi_rule(8, 0.5, 0.0).unwrap();
        let got = r.integrate_on(0.0, 2.0, |x| x);
        assert!((got - 16.0 * math::sqrt(2.0) / 15.0).abs() < 1e-14);
    }

    #[test]
    fn exponent_domain() {
        assert!(gauss_jacobi_rule(4, -1.0, 0.0).is_err());
        assert!(gauss_jacobi_rule(4, 0.0, -1.5).is_err());
        assert!(gauss_jacobi_rule(0, 0.0, 0.0).is_err());
    }
}
