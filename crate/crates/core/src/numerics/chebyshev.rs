use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

/// A truncated Chebyshev expansion `Σ' c_k T_k(s)` of a function on `[a, b]`,
/// `s = (2x − a − b)/(b − a)`.
///
/// Built by interpolation at the Chebyshev–Lobatto points, so a smooth
/// profile sampled once can be evaluated and differentiated cheaply.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevSeries {
    a: f64,
    b: f64,
    coeffs: Vec<f64>,
}

impl ChebyshevSeries {
    /// The `n` Lobatto points on `[a, b]` in increasing order.
    pub fn lobatto_nodes(a: f64, b: f64, n: usize) -> Vec<f64> {
        let m = (n - 1) as f64;
        (0..n)
            .map(|j| {
                let s = -math::cos(math::PI * j as f64 / m);
                0.5 * (a + b) + 0.5 * (b - a) * s
            })
            .collect()
    }

    /// Interpolates `f` at `n ≥ 2` Lobatto points of `[a, b]`.
    pub fn from_fn<F: FnMut(f64) -> f64>(a: f64, b: f64, n: usize, mut f: F) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("Chebyshev interpolation needs at least two nodes"));
        }
        let values: Vec<f64> = Self::lobatto_nodes(a, b, n).into_iter().map(&mut f).collect();
        Self::from_samples(a, b, &values)
    }

    /// Coefficients from values at [`ChebyshevSeries::lobatto_nodes`] (increasing order).
    pub fn from_samples(a: f64, b: f64, values: &[f64]) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(Error::Invalid("Chebyshev interpolation needs at least two nodes"));
        }
        if !(b > a) {
            return Err(Error::Invalid("Chebyshev interval must satisfy a < b"));
        }
        // values[j] sits at s = −cos(πj/m) = cos(π(m−j)/m); reindex to the usual cos(πi/m).
        let m = n - 1;
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let mut sum = 0.0;
            for i in 0..n {
                let w = if i == 0 || i == m { 0.5 } else { 1.0 };
                let angle = math::PI * ((k * i) % (2 * m)) as f64 / m as f64;
                sum += w * values[m - i] * math::cos(angle);
            }
            let scale = if k == 0 || k == m { 1.0 } else { 2.0 };
            coeffs.push(scale * sum / m as f64);
        }
        Ok(Self { a, b, coeffs })
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    /// Coefficients with `c_0` already halved, i.e. `f = Σ c_k T_k`.
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Clenshaw evaluation; arguments outside `[a, b]` extrapolate the polynomial.
    pub fn eval(&self, x: f64) -> f64 {
        let s = (2.0 * x - self.a - self.b) / (self.b - self.a);
        let (mut b1, mut b2) = (0.0, 0.0);
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * s * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        s * b1 - b2 + self.coeffs[0]
    }

    /// The derivative as another series on the same interval.
    pub fn derivative(&self) -> Self {
        let n = self.coeffs.len();
        let mut d = alloc::vec![0.0; n.max(2) - 1];
        if n >= 2 {
            // c'_{k−1} = c'_{k+1} + 2k c_k, then c'_0 halved.
            let mut next = 0.0;
            let mut next2 = 0.0;
            for k in (1..n).rev() {
                let v = next2 + 2.0 * k as f64 * self.coeffs[k];
                d[k - 1] = v;
                next2 = next;
                next = v;
            }
            d[0] *= 0.5;
        }
        let scale = 2.0 / (self.b - self.a);
        for c in &mut d {
            *c *= scale;
        }
        Self {
            a: self.a,
            b: self.b,
            coeffs: d,
        }
    }

    /// Largest magnitude among the last two coefficients, a cheap truncation estimate.
    pub fn tail_magnitude(&self) -> f64 {
        self.coeffs.iter().rev().take(2).fold(0.0, |m, c| m.max(c.abs()))
    }
}
