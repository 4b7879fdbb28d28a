use crate::math;
use crate::{Error, Result};

const MAX_TERMS: usize = 5_000_000;

fn nonpositive_integer(v: f64) -> bool {
    v <= 0.0 && math::is_integer(v)
}

/// Gauss hypergeometric function `₂F₁(a, b; c; z)` for `z ≤ 0`.
///
/// A nonpositive-integer `a` or `b` gives the terminating polynomial, summed
/// exactly. Otherwise the Pfaff transformation maps `z` to
/// `w = z/(z−1) ∈ [0, 1)` where the Gauss series converges; of the two Pfaff
/// forms the one whose terms decay faster is used.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if nonpositive_integer(c) {
        return Err(Error::domain("2F1 lower parameter c", c));
    }
    if !(z <= 0.0) || !z.is_finite() {
        return Err(Error::domain("2F1 argument (only z <= 0 is supported)", z));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if nonpositive_integer(a) {
        return Ok(terminating(a, b, c, z));
    }
    if nonpositive_integer(b) {
        return Ok(terminating(b, a, c, z));
    }

    let w = z / (z - 1.0);
    let one_minus_z = 1.0 - z;
    // (1−z)^{−a} F(a, c−b; c; w)  or  (1−z)^{−b} F(c−a, b; c; w)
    let first_terminates = nonpositive_integer(c - b);
    let second_terminates = nonpositive_integer(c - a);
    let use_first = if first_terminates || second_terminates {
        first_terminates
    } else {
        a <= b
    };
    let (prefactor, p, q) = if use_first {
        (math::powf(one_minus_z, -a), a, c - b)
    } else {
        (math::powf(one_minus_z, -b), c - a, b)
    };
    if nonpositive_integer(p) {
        return Ok(prefactor * terminating(p, q, c, w));
    }
    if nonpositive_integer(q) {
        return Ok(prefactor * terminating(q, p, c, w));
    }
    Ok(prefactor * series(p, q, c, w)?)
}

/// Σ_{n=0}^{−a} (a)_n (b)_n / ((c)_n n!) z^n for nonpositive integer `a`.
fn terminating(a: f64, b: f64, c: f64, z: f64) -> f64 {
    let degree = (-a) as usize;
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..degree {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
    }
    sum
}

fn series(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    // geometric tail bound: remaining ≲ |term| · w / (1 − w)
    let tail_factor = 1.0 / (1.0 - w);
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * w;
        sum += term;
        if term.abs() * tail_factor <= 1e-17 * sum.abs() && nf > a.abs() + b.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        what: "2F1 series",
        iterations: MAX_TERMS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // The Gauss series summed directly in z (valid for |z| < 1), independent of Pfaff.
    fn direct_series(a: f64, b: f64, c: f64, z: f64) -> f64 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 0..2000 {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
        }
        sum
    }

    #[test]
    fn zero_argument() {
        assert_eq!(gauss_2f1(0.3, -2.5, 1.7, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn terminating_linear_case() {
        // 1 − (b/c) z with a = −1
        let got = gauss_2f1(-1.0, 0.5, 1.0, -3.0).unwrap();
        assert!((got - 2.5).abs() < 1e-15);
    }

    #[test]
    fn terminating_matches_explicit_polynomial() {
        // a = −3: 1 + 3·(b/c)(−z)... written out term by term
        let (b, c, z) = (0.7_f64, 1.9_f64, -2.25_f64);
        let t1 = -3.0 * b / c * z;
        let t2 = (-3.0 * -2.0) * (b * (b + 1.0)) / (c * (c + 1.0) * 2.0) * z * z;
        let t3 = (-3.0 * -2.0 * -1.0) * (b * (b + 1.0) * (b + 2.0))
            / (c * (c + 1.0) * (c + 2.0) * 6.0)
            * z
            * z
            * z;
        let want = 1.0 + t1 + t2 + t3;
        assert!((gauss_2f1(-3.0, b, c, z).unwrap() - want).abs() < 1e-14 * want.abs());
        assert!((gauss_2f1(b, -3.0, c, z).unwrap() - want).abs() < 1e-14 * want.abs());
    }

    #[test]
    fn pfaff_agrees_with_direct_series_inside_unit_disc() {
        for (a, b, c, z) in [
            (0.3, 0.7, 1.1, -0.5),
            (-1.6, 0.7, 1.4, -0.8),
            (2.5, 1.25, 3.5, -0.3),
            (0.5, 0.5, 1.0, -0.95),
        ] {
            let got = gauss_2f1(a, b, c, z).unwrap();
            let want = direct_series(a, b, c, z);
            assert!(
                (got - want).abs() < 1e-13 * want.abs().max(1.0),
                "{a},{b},{c},{z}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn large_negative_argument_closed_form() {
        // ₂F₁(1, 1; 2; z) = ln(1 − z) / (−z)
        for z in [-3.0, -8.0, -50.0] {
            let want = libm::log(1.0 - z) / (-z);
            let got = gauss_2f1(1.0, 1.0, 2.0, z).unwrap();
            assert!((got - want).abs() < 1e-14, "z={z}: {got} vs {want}");
        }
        // ₂F₁(a, b; b; z) = (1 − z)^{−a}
        let got = gauss_2f1(0.8, 1.3, 1.3, -7.0).unwrap();
        assert!((got - math::powf(8.0, -0.8)).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(gauss_2f1(0.5, 0.5, 0.0, -1.0).is_err());
        assert!(gauss_2f1(0.5, 0.5, -2.0, -1.0).is_err());
        assert!(gauss_2f1(0.5, 0.5, 1.5, 0.5).is_err());
    }
}
