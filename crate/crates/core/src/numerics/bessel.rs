use alloc::vec::Vec;

use super::gamma::gamma;
use crate::math::{self, PI};
use crate::{Error, Result};

/// Beyond this argument the large-argument (Hankel) expansion replaces the power series.
const SERIES_SWITCH: f64 = 12.0;
/// Power-series length; at |x| = 12 the 48th term is below 1e-40 of the leading one.
const SERIES_TERMS: usize = 48;
const ASYMPTOTIC_MAX_TERMS: usize = 60;

/// `j_ν(x) = 2^ν Γ(ν+1) x^{−ν} J_ν(x)`, the eigenfunction of `B_{2ν+1}` with
/// `j_ν(0) = 1`. Even in `x`.
pub fn bessel_j_normalized(nu: f64, x: f64) -> Result<f64> {
    Ok(NormalizedBessel::new(nu)?.eval(x))
}

/// `i_ν(x) = j_ν(ix) = 2^ν Γ(ν+1) x^{−ν} I_ν(x)`; solves `B_{2ν+1} i = i`.
pub fn bessel_i_normalized(nu: f64, x: f64) -> Result<f64> {
    Ok(NormalizedBessel::new(nu)?.eval_modified(x))
}

/// Normalized Bessel function of a fixed order with its series coefficients
/// precomputed, for repeated evaluation inside quadratures.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedBessel {
    nu: f64,
    // c_k = 1 / (k! (ν+1)_k)
    coeffs: Vec<f64>,
    // 2^ν Γ(ν+1)
    scale: f64,
}

impl NormalizedBessel {
    pub fn new(nu: f64) -> Result<Self> {
        if !(nu.is_finite() && nu > -1.0) {
            return Err(Error::domain("Bessel order must exceed -1", nu));
        }
        let mut coeffs = Vec::with_capacity(SERIES_TERMS);
        let mut c = 1.0;
        coeffs.push(c);
        for k in 1..SERIES_TERMS {
            let k = k as f64;
            c /= k * (nu + k);
            coeffs.push(c);
        }
        Ok(Self {
            nu,
            coeffs,
            scale: math::powf(2.0, nu) * gamma(nu + 1.0),
        })
    }

    pub fn order(&self) -> f64 {
        self.nu
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.abs();
        if x <= SERIES_SWITCH {
            self.horner(-0.25 * x * x)
        } else {
            self.scale * math::powf(x, -self.nu) * hankel_j(self.nu, x)
        }
    }

    /// The modified counterpart `i_ν(x)`; the series has no cancellation.
    pub fn eval_modified(&self, x: f64) -> f64 {
        let y = 0.25 * x * x;
        if y <= 36.0 {
            return self.horner(y);
        }
        // longer arguments: keep summing the positive series until it settles
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 1.0;
        loop {
            term *= y / (k * (self.nu + k));
            sum += term;
            if term < 1e-17 * sum && k > y {
                return sum;
            }
            k += 1.0;
        }
    }

    fn horner(&self, y: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * y + c)
    }
}

/// `J_ν(x)` from the Hankel expansion, truncated at its smallest term.
fn hankel_j(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term: f64 = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..=ASYMPTOTIC_MAX_TERMS {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() >= last || next == 0.0 {
            break;
        }
        last = next.abs();
        term = next;
        // a_k / x^k enters P with sign (−1)^{k/2} for even k, Q with (−1)^{(k−1)/2} for odd k
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if last < 1e-17 {
            break;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    math::sqrt(2.0 / (PI * x)) * (p * math::cos(chi) - q * math::sin(chi))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Direct power series with a generous term count, evaluated independently.
    fn series_oracle(nu: f64, x: f64) -> f64 {
        let y = -0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..200 {
            let k = k as f64;
            term *= y / (k * (nu + k));
            sum += term;
        }
        sum
    }

    #[test]
    fn unit_at_origin() {
        for nu in [-0.75, -0.25, 0.0, 0.5, 1.0, 3.7] {
            assert_eq!(bessel_j_normalized(nu, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn half_order_is_sinc() {
        for x in [0.5, 1.0, 2.0, 7.5] {
            let want = math::sin(x) / x;
            let got = bessel_j_normalized(0.5, x).unwrap();
            assert!((got - want).abs() < 1e-14, "x={x}: {got} vs {want}");
            assert!((series_oracle(0.5, x) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn first_zero_of_j0() {
        // bisection on the series oracle locates the root independently
        let (mut lo, mut hi) = (2.0, 3.0);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if series_oracle(0.0, mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((lo - 2.404_825_557_695_773).abs() < 1e-14);
        assert!(bessel_j_normalized(0.0, 2.404_825_557_695_773).unwrap().abs() < 1e-15);
    }

    #[test]
    fn even_in_x() {
        let b = NormalizedBessel::new(0.35).unwrap();
        for x in [0.3, 4.0, 15.0] {
            assert_eq!(b.eval(x), b.eval(-x));
        }
    }

    #[test]
    fn asymptotic_branch_matches_closed_forms() {
        // j_{1/2}(x) = sin x / x and j_{-1/2}(x) = cos x hold exactly
        for x in [12.5, 20.0, 40.0] {
            let s = bessel_j_normalized(0.5, x).unwrap();
            let c = bessel_j_normalized(-0.5, x).unwrap();
            assert!((s - math::sin(x) / x).abs() < 1e-15);
            assert!((c - math::cos(x)).abs() < 1e-14);
        }
        // j_{3/2}(x) = 3 (sin x − x cos x) / x³
        for x in [12.5, 25.0] {
            let want = 3.0 * (math::sin(x) - x * math::cos(x)) / (x * x * x);
            assert!((bessel_j_normalized(1.5, x).unwrap() - want).abs() < 1e-13);
        }
    }

    #[test]
    fn branches_meet_at_the_switch() {
        for nu in [0.0, 0.25, 1.0, 1.35] {
            let b = NormalizedBessel::new(nu).unwrap();
            let below = b.horner(-0.25 * SERIES_SWITCH * SERIES_SWITCH);
            let above = b.scale * math::powf(SERIES_SWITCH, -nu) * hankel_j(nu, SERIES_SWITCH);
            assert!((below - above).abs() < 5e-11, "ν={nu}: {below} vs {above}");
        }
    }

    #[test]
    fn modified_cosh_identity() {
        // i_{-1/2}(x) = cosh x
        for x in [0.0, 1.0, 5.0, 14.0] {
            let want = 0.5 * (math::exp(x) + math::exp(-x));
            let got = bessel_i_normalized(-0.5, x).unwrap();
            assert!(((got - want) / want).abs() < 1e-14, "x={x}");
        }
    }

    #[test]
    fn order_domain() {
        assert!(bessel_j_normalized(-1.0, 1.0).is_err());
        assert!(NormalizedBessel::new(f64::NAN).is_err());
    }
}
