//! Randomized invariants of the public API.

use bessel_means_core::epd::{classify, EpdProblem, Regime};
use bessel_means_core::fields::{Constant, Gaussian, RadiusSquared};
use bessel_means_core::means::{MultidimShift, SphericalMean};
use bessel_means_core::shift1d::{shift_angular, AngularShift};
use bessel_means_core::sphere::{ball_integral, weighted_ball_volume, weighted_sphere_area, SphereGrid};
use bessel_means_core::{FnField, MultiIndex, ScalarField};
use proptest::prelude::*;

fn multi_index(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.1..4.0f64, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_preserves_constants_and_is_symmetric(gamma in 0.05..6.0f64, x in 0.0..4.0f64, y in 0.0..4.0f64) {
        let t = AngularShift::new(gamma, 48).unwrap();
        prop_assert!((t.apply(|_| 1.0, x, y) - 1.0).abs() < 1e-12);
        let f = |s: f64| (-0.3 * s * s).exp() * (1.0 + s * s);
        prop_assert!((t.apply(f, x, y) - t.apply(f, y, x)).abs() < 1e-12);
    }

    #[test]
    fn shift_is_positive_and_linear(gamma in 0.05..6.0f64, x in 0.0..4.0f64, y in 0.0..4.0f64, a in -3.0..3.0f64) {
        let t = AngularShift::new(gamma, 48).unwrap();
        let f = |s: f64| (-s * s).exp();
        let g = |s: f64| s * s;
        prop_assert!(t.apply(f, x, y) >= 0.0);
        let combined = t.apply(|s| f(s) + a * g(s), x, y);
        prop_assert!((combined - t.apply(f, x, y) - a * t.apply(g, x, y)).abs() < 1e-10);
    }

    #[test]
    fn zero_shift_is_identity(gamma in 0.05..6.0f64, x in 0.0..4.0f64) {
        let f = |s: f64| s.cos() + s.powi(4);
        let v = shift_angular(f, gamma, x, 0.0, 32).unwrap();
        prop_assert!((v - f(x)).abs() < 1e-12 * f(x).abs().max(1.0));
    }

    #[test]
    fn sphere_grid_matches_area(gamma in multi_index(3), order in 4usize..24) {
        let g = MultiIndex::from_slice(&gamma).unwrap();
        let grid = SphereGrid::new(3, &g, order).unwrap();
        let area = weighted_sphere_area(3, &g).unwrap();
        prop_assert!((grid.weight_sum() - area).abs() <= 1e-11 * area);
        // each node lies on the unit sphere in the closed orthant
        for (node, w) in grid.iter() {
            prop_assert!(w > 0.0);
            prop_assert!(node.iter().all(|v| *v >= 0.0));
            prop_assert!((node.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn area_is_weighted_dimension_times_volume(gamma in multi_index(2)) {
        let g = MultiIndex::from_slice(&gamma).unwrap();
        let area = weighted_sphere_area(2, &g).unwrap();
        let volume = weighted_ball_volume(2, &g).unwrap();
        prop_assert!((area - g.weighted_dimension() * volume).abs() <= 1e-13 * area);
        let one = Constant { dimension: 2, value: 1.0 };
        let ball = ball_integral(&one, |_| 1.0, 1.0, &g, 16, 12).unwrap();
        prop_assert!((ball - volume).abs() <= 1e-11 * volume);
    }

    #[test]
    fn mean_reproduces_data_at_zero_radius(gamma in multi_index(2), x in prop::collection::vec(0.0..2.0f64, 2)) {
        let g = MultiIndex::from_slice(&gamma).unwrap();
        let mean = SphericalMean::with_orders(&g, 12, 16).unwrap();
        let f = Gaussian { dimension: 2, rate: 0.8 };
        prop_assert!((mean.mean(&f, &x, 0.0).unwrap() - f.eval(&x)).abs() < 1e-13);
    }

    #[test]
    fn mean_of_radius_squared(gamma in multi_index(2), x in prop::collection::vec(0.0..2.0f64, 2), t in 0.0..3.0f64) {
        let g = MultiIndex::from_slice(&gamma).unwrap();
        let mean = SphericalMean::with_orders(&g, 8, 8).unwrap();
        let v = mean.mean(&RadiusSquared { dimension: 2 }, &x, t).unwrap();
        prop_assert!((v - (x[0] * x[0] + x[1] * x[1] + t * t)).abs() < 1e-11);
    }

    #[test]
    fn mean_is_linear(gamma in multi_index(2), t in 0.0..2.0f64, a in -2.0..2.0f64) {
        let g = MultiIndex::from_slice(&gamma).unwrap();
        let mean = SphericalMean::with_orders(&g, 12, 16).unwrap();
        let x = [0.3, 1.1];
        let f = Gaussian { dimension: 2, rate: 0.5 };
        let h = RadiusSquared { dimension: 2 };
        let sum = FnField::new(2, |p: &[f64]| f.eval(p) + a * h.eval(p));
        let lhs = mean.mean(&sum, &x, t).unwrap();
        let rhs = mean.mean(&f, &x, t).unwrap() + a * mean.mean(&h, &x, t).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn multidim_shift_factorizes(gamma in multi_index(2), x in prop::collection::vec(0.0..2.0f64, 2), y in prop::collection::vec(0.0..2.0f64, 2)) {
        // T^y of a product is the product of one-dimensional shifts
        let g = MultiIndex::from_slice(&gamma).unwrap();
        let op = MultidimShift::new(&g, 24).unwrap();
        let f = FnField::new(2, |p: &[f64]| (-p[0] * p[0]).exp() * (1.0 + p[1] * p[1]));
        let a = shift_angular(|s| (-s * s).exp(), gamma[0], x[0], y[0], 24).unwrap();
        let b = shift_angular(|s| 1.0 + s * s, gamma[1], x[1], y[1], 24).unwrap();
        prop_assert!((op.apply(&f, &x, &y) - a * b).abs() < 1e-12);
    }

    #[test]
    fn regimes_partition_the_k_line(k in -8.0..8.0f64, nw in 1.0..8.0f64) {
        let regime = classify(k, nw, false);
        let seam = nw - 1.0;
        match regime {
            Regime::Mean => prop_assert!((k - seam).abs() <= 1e-12),
            Regime::Above => prop_assert!(k > seam),
            Regime::Recurrence => prop_assert!(k < seam),
            Regime::Exceptional => prop_assert!(k < 0.0 && k.fract() == 0.0),
            Regime::Fractional => prop_assert!(false, "fractional needs the opt-in"),
        }
        let opt_in = classify(k, nw, true);
        if opt_in == Regime::Fractional {
            prop_assert!(k > 0.0 && k < 1.0 && k < seam);
        } else {
            prop_assert_eq!(opt_in, regime);
        }
    }
}

#[test]
fn negative_odd_integers_are_exceptional() {
    for k in [-1.0, -3.0, -5.0, -7.0] {
        assert_eq!(classify(k, 3.0, false), Regime::Exceptional);
    }
    for k in [-2.0, -4.0, -0.5] {
        assert_eq!(classify(k, 3.0, false), Regime::Recurrence);
    }
    assert_eq!(classify(2.0, 3.0, false), Regime::Mean);
}

#[test]
fn problem_rejects_bad_input() {
    let g = MultiIndex::from_slice(&[1.0, 1.0]).unwrap();
    let f = RadiusSquared { dimension: 3 };
    assert!(EpdProblem::new(f, g.clone(), 1.0).is_err());
    assert!(EpdProblem::new(RadiusSquared { dimension: 2 }, g, f64::NAN).is_err());
    assert!(MultiIndex::from_slice(&[1.0, -0.5]).is_err());
    assert!(MultiIndex::from_slice(&[]).is_err());
}
