//! Acceptance run: one PASS/FAIL line per item, tolerances pinned below.
//!
//! Oracles live here and do not call back into the solver for the expected
//! value: Bessel functions come from their power series, Gamma from `libm`,
//! EPD residuals from a local five-point stencil and the degenerate limit from
//! composite Simpson.

use std::collections::HashMap;
use std::f64::consts::SQRT_2;
use std::process::{Command, ExitCode};
use std::time::Instant;

use bessel_means_core::epd::{epd_above_erdelyi_kober, EpdOptions, EpdProblem, EpdSolution, PointSolution};
use bessel_means_core::fields::{BHarmonicProduct, BesselProduct, Constant, Gaussian, RadiusSquared};
use bessel_means_core::means::{iterated_mean_double, iterated_mean_single, SphericalMean};
use bessel_means_core::shift1d::{shift_angular, shift_degenerate, shift_power, shift_radial, AngularShift};
use bessel_means_core::sphere::{ball_integral, SphereGrid};
use bessel_means_core::ultrahyperbolic::{
    asgeirsson_check, commuting_means_check, separable_solution, BlockOrders, SplitGeometry,
};
use bessel_means_core::{FnField, MultiIndex, ScalarField};

type Outcome = Result<(f64, String), String>;

struct Item {
    id: u8,
    title: &'static str,
    /// `measured <= tol` passes, except where `check` says otherwise.
    tol: f64,
    run: fn() -> Outcome,
    check: fn(f64, f64) -> bool,
}

fn at_most(v: f64, tol: f64) -> bool {
    v <= tol
}

fn below(v: f64, tol: f64) -> bool {
    v < tol
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- oracles

/// `j_ν(x) = Γ(ν+1) (2/x)^ν J_ν(x)` from `Σ (−x²/4)^m / (m! (ν+1)_m)`.
fn j_series(nu: f64, x: f64) -> f64 {
    let y = -0.25 * x * x;
    let (mut term, mut sum) = (1.0, 1.0);
    for m in 1..200 {
        let m = m as f64;
        term *= y / (m * (nu + m));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// `Π j_{(γ_i−1)/2}(x_i ξ_i)`.
fn bessel_product(gamma: &[f64], xi: &[f64], x: &[f64]) -> f64 {
    gamma
        .iter()
        .zip(xi)
        .zip(x)
        .map(|((g, s), v)| j_series(0.5 * (g - 1.0), v * s))
        .product()
}

fn tgamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `∫_{S_1^+(n)} θ^γ dS`.
fn sphere_area(gamma: &[f64]) -> f64 {
    let n = gamma.len() as f64;
    let total: f64 = gamma.iter().sum::<f64>() + n;
    gamma.iter().map(|g| tgamma(0.5 * (g + 1.0))).product::<f64>() / (2f64.powf(n - 1.0) * tgamma(0.5 * total))
}

/// Composite Simpson with `n` (even) panels.
fn simpson(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> f64 {
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n).map(|i| f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 }).sum();
    h / 3.0 * (f(a) + f(b) + inner)
}

/// `∫_0^R f g x^γ dx` with `x = s²`, which makes the weight smooth for the γ used here.
fn weighted_inner(f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64, gamma: f64, radius: f64) -> f64 {
    simpson(0.0, radius.sqrt(), 4000, |s| {
        let x = s * s;
        2.0 * s.powf(2.0 * gamma + 1.0) * f(x) * g(x)
    })
}

fn bump(t: f64) -> f64 {
    let s = t * t;
    if s >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - s)).exp()
    }
}

/// `|Δ_γ u − (∂_t² + k/t ∂_t) u|` by second-order central differences.
fn residual(u: &dyn Fn(&[f64], f64) -> f64, gamma: &[f64], k: f64, x: &[f64], t: f64, h: f64) -> f64 {
    let u0 = u(x, t);
    let mut lap = 0.0;
    let mut p = x.to_vec();
    for i in 0..x.len() {
        p[i] = x[i] + h;
        let up = u(&p, t);
        p[i] = x[i] - h;
        let um = u(&p, t);
        p[i] = x[i];
        lap += (up - 2.0 * u0 + um) / (h * h) + gamma[i] / x[i] * (up - um) / (2.0 * h);
    }
    let (tp, tm) = (u(x, t + h), u(x, t - h));
    let bk = (tp - 2.0 * u0 + tm) / (h * h) + k / t * (tp - tm) / (2.0 * h);
    (lap - bk).abs()
}

// ---------------------------------------------------------------- shared setup

const X0: [f64; 2] = [0.4, 0.7];
const G_MIXED: [f64; 2] = [0.8, 1.7];

fn mi(v: &[f64]) -> MultiIndex {
    MultiIndex::from_slice(v).unwrap()
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

/// Default orders with room for `t + h` stencils past `t = 2`.
fn orders() -> EpdOptions {
    EpdOptions {
        horizon: 2.5,
        ..EpdOptions::default()
    }
}

/// One mean profile per spatial point, shared by every stencil through it.
struct Cache<'a, F> {
    solution: &'a EpdSolution<F>,
    points: std::cell::RefCell<HashMap<Vec<u64>, PointSolution<'a, F>>>,
}

impl<'a, F: ScalarField + Clone> Cache<'a, F> {
    fn new(solution: &'a EpdSolution<F>) -> Self {
        Self {
            solution,
            points: Default::default(),
        }
    }

    fn eval(&self, x: &[f64], t: f64) -> f64 {
        let key: Vec<u64> = x.iter().map(|v| v.to_bits()).collect();
        let mut map = self.points.borrow_mut();
        if !map.contains_key(&key) {
            match self.solution.at(x) {
                Ok(p) => {
                    map.insert(key.clone(), p);
                }
                Err(_) => return f64::NAN,
            }
        }
        map[&key].eval(t).unwrap_or(f64::NAN)
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    // NaN must not be swallowed by f64::max
    values
        .into_iter()
        .fold(0.0, |a, v| if v.is_nan() || a.is_nan() { f64::NAN } else { a.max(v) })
}

// ---------------------------------------------------------------- 1–4 shift

fn item1() -> Outcome {
    let grid = linspace(0.0, 3.0, 20);
    let mut e = 0.0_f64;
    for gamma in [0.3, 1.0, 2.0, 5.0] {
        let t = AngularShift::new(gamma, 64).map_err(err)?;
        for &x in &grid {
            for &y in &grid {
                e = e.max((t.apply(|_| 1.0, x, y) - 1.0).abs());
            }
            let f = |s: f64| s.cos() + s * s;
            e = e.max((t.apply(f, x, 0.0) - f(x)).abs());
            e = e.max((t.apply(f, 0.0, x) - f(x)).abs());
        }
    }
    Ok((e, "max |T^y 1 - 1|, |T^0 f - f|, gamma in {0.3,1,2,5}".into()))
}

fn item2() -> Outcome {
    let pts = [0.2, 0.7, 1.3, 2.0];
    let mut e = 0.0_f64;
    for gamma in [0.5, 1.0, 1.4, 3.0] {
        for &x in &pts {
            for &y in &pts {
                if x == y {
                    continue;
                }
                for alpha in [0.0, 2.0, 4.0, 3.2] {
                    let f = |s: f64| s.abs().powf(alpha);
                    let a = shift_angular(f, gamma, x, y, 64).map_err(err)?;
                    let r = shift_radial(f, gamma, x, y, 64).map_err(err)?;
                    let p = shift_power(alpha, gamma, x, y).map_err(err)?;
                    let (x2, y2) = (x * x, y * y);
                    // even polynomials have elementary translations
                    let exact = if alpha == 0.0 {
                        Some(1.0)
                    } else if alpha == 2.0 {
                        Some(x2 + y2)
                    } else if alpha == 4.0 {
                        Some((x2 + y2).powi(2) + 4.0 * x2 * y2 / (gamma + 1.0))
                    } else {
                        None
                    };
                    e = e.max((a - r).abs()).max((a - p).abs()).max((r - p).abs());
                    if let Some(v) = exact {
                        e = e.max((a - v).abs()).max((r - v).abs()).max((p - v).abs());
                    }
                }
            }
        }
    }
    Ok((e, "angular/radial/power pairwise and vs closed forms (alpha=0,2,4)".into()))
}

fn item3() -> Outcome {
    let grid = linspace(0.0, 4.0, 17);
    let mut e = 0.0_f64;
    for gamma in [0.5, 1.0, 2.0, 3.7] {
        let nu = 0.5 * (gamma - 1.0);
        let t = AngularShift::new(gamma, 64).map_err(err)?;
        for &x in &grid {
            for &y in &grid {
                e = e.max((t.apply(|s| j_series(nu, s), x, y) - j_series(nu, x) * j_series(nu, y)).abs());
            }
        }
    }
    Ok((e, "max |T^y j(x) - j(x) j(y)| on [0,4]^2".into()))
}

fn item4() -> Outcome {
    let gamma = 1.5;
    let t = AngularShift::new(gamma, 64).map_err(err)?;
    let f = bump;
    let h = |s: f64| s * s * bump(s / 1.5);
    let mut e = 0.0_f64;
    for y in [0.3, 0.8] {
        let radius = 1.5 + y;
        let left = weighted_inner(|x| t.apply(f, x, y), h, gamma, radius);
        let right = weighted_inner(f, |x| t.apply(h, x, y), gamma, radius);
        e = e.max((left - right).abs());
    }
    Ok((e, "|<T^y f, g> - <f, T^y g>|, y in {0.3, 0.8}".into()))
}

// ---------------------------------------------------------------- 5–7 geometry and means

fn item5() -> Outcome {
    let mut e = 0.0_f64;
    for gamma in [&[1.0, 1.0][..], &[0.8, 1.7], &[0.3, 1.0, 2.5], &[1.5, 0.5, 0.7]] {
        let gi = mi(gamma);
        let n = gamma.len();
        let area = sphere_area(gamma);
        let grid = SphereGrid::new(n, &gi, 48).map_err(err)?;
        e = e.max((grid.weight_sum() - area).abs() / area);
        // ∫_{B_1^+} 1 = |S_1^+| / N
        let nw = gi.weighted_dimension();
        let one = Constant { dimension: n, value: 1.0 };
        let ball = ball_integral(&one, |_| 1.0, 1.0, &gi, 64, 24).map_err(err)?;
        e = e.max((ball - area / nw).abs() / (area / nw));
        // sphere integral = r^{1−N} d/dr of the ball integral
        let f = Gaussian { dimension: n, rate: 0.7 };
        let (r, dr) = (0.9, 1e-2);
        let b = |rr: f64| ball_integral(&f, |_| 1.0, rr, &gi, 48, 24).map_err(err);
        let derivative = (8.0 * (b(r + dr)? - b(r - dr)?) - (b(r + 2.0 * dr)? - b(r - 2.0 * dr)?)) / (12.0 * dr);
        let sg = SphereGrid::new(n, &gi, 24).map_err(err)?;
        let sphere = sg.integrate(|theta| f.eval(&theta.iter().map(|v| r * v).collect::<Vec<_>>()));
        e = e.max((derivative * r.powf(1.0 - nw) - sphere).abs() / sphere);
    }
    Ok((e, "relative: grid area vs Gamma closed form, ball volume, d/dr ball = sphere".into()))
}

fn item6() -> Outcome {
    let times = linspace(0.0, 3.0, 13);
    let mut e = 0.0_f64;
    for gamma in [&[1.0, 1.0][..], &G_MIXED] {
        let gi = mi(gamma);
        let mean = SphericalMean::with_orders(&gi, 48, 64).map_err(err)?;
        let r2 = X0[0] * X0[0] + X0[1] * X0[1];
        let nu = 0.5 * (gi.weighted_dimension() - 2.0);
        for &t in &times {
            let one = mean.mean(&Constant { dimension: 2, value: 1.0 }, &X0, t).map_err(err)?;
            let sq = mean.mean(&RadiusSquared { dimension: 2 }, &X0, t).map_err(err)?;
            e = e.max((one - 1.0).abs()).max((sq - r2 - t * t).abs());
            for xi in [[0.6, 0.8], [1.0, 1.0], [1.2, 1.6]] {
                let f = BesselProduct::new(&gi, &xi).map_err(err)?;
                let norm = (xi[0] * xi[0] + xi[1] * xi[1]).sqrt();
                let want = bessel_product(gamma, &xi, &X0) * j_series(nu, t * norm);
                e = e.max((mean.mean(&f, &X0, t).map_err(err)? - want).abs());
            }
        }
    }
    Ok((e, "M[1]=1, M[|x|^2]=|x|^2+t^2, M[j(x,xi)]=j(x,xi) j_nu(t|xi|), t in [0,3]".into()))
}

fn item7() -> Outcome {
    let radii = [0.3, 0.7, 1.2];
    let mut e = 0.0_f64;
    for gamma in [&[1.0, 1.0][..], &G_MIXED] {
        let gi = mi(gamma);
        let mean = SphericalMean::with_orders(&gi, 48, 64).map_err(err)?;
        let grid = SphereGrid::new(2, &gi, 16).map_err(err)?;
        let gauss = Gaussian { dimension: 2, rate: 0.5 };
        let sq = RadiusSquared { dimension: 2 };
        let r2 = X0[0] * X0[0] + X0[1] * X0[1];
        for &l in &radii {
            for &m in &radii {
                let double = iterated_mean_double(&gauss, &gi, &X0, l, m, &grid, 16).map_err(err)?;
                let single = iterated_mean_single(&mean, &gauss, &X0, l, m, 64).map_err(err)?;
                e = e.max((double - single).abs());
                let single = iterated_mean_single(&mean, &sq, &X0, l, m, 64).map_err(err)?;
                e = e.max((single - (r2 + l * l + m * m)).abs());
            }
        }
    }
    Ok((e, "nested double mean (16/16) vs single integral; |x|^2 -> |x|^2+l^2+m^2".into()))
}

// ---------------------------------------------------------------- 8–11, 13 EPD

/// `x_1⁴ − (3+γ_1)/(1+γ_2) x_1² x_2²`, B-biharmonic but not B-harmonic.
fn quartic(x: &[f64]) -> f64 {
    let b = (3.0 + G_MIXED[0]) / (1.0 + G_MIXED[1]);
    let (a, c) = (x[0] * x[0], x[1] * x[1]);
    a * a - b * a * c
}

fn ratio<F: ScalarField + Clone>(sol: &EpdSolution<F>, k: f64) -> f64 {
    let cache = Cache::new(sol);
    let u = |x: &[f64], t: f64| cache.eval(x, t);
    residual(&u, &G_MIXED, k, &X0, 1.0, 1e-2) / residual(&u, &G_MIXED, k, &X0, 1.0, 5e-3)
}

fn item8() -> Outcome {
    let gi = mi(&G_MIXED);
    let nw = gi.weighted_dimension();
    let oracle = BesselProduct::new(&gi, &[1.0, 1.0]).map_err(err)?;
    let mut worst = 0.0_f64;
    let mut seen = Vec::new();
    for k in [nw - 1.0, nw + 1.0, 1.0, 0.5] {
        let sol = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), k).map_err(err)?, orders())
            .map_err(err)?;
        let r = ratio(&sol, k);
        seen.push(format!("{}:{r:.4}", sol.regime()));
        worst = max_of([worst, (r - 4.0).abs()]);
    }
    let harmonic = BHarmonicProduct::new(&gi, 1.0).map_err(err)?;
    let sol = EpdSolution::new(EpdProblem::new(harmonic, gi.clone(), -1.0).map_err(err)?, orders()).map_err(err)?;
    let r = ratio(&sol, -1.0);
    seen.push(format!("exceptional k=-1:{r:.4}"));
    worst = max_of([worst, (r - 4.0).abs()]);
    let sol = EpdSolution::new(EpdProblem::new(FnField::new(2, quartic), gi, -3.0).map_err(err)?, orders())
        .map_err(err)?;
    let r = ratio(&sol, -3.0);
    seen.push(format!("exceptional k=-3:{r:.4}"));
    worst = max_of([worst, (r - 4.0).abs()]);
    Ok((worst, format!("|residual(h)/residual(h/2) - 4|, h=1e-2 [{}]", seen.join(" "))))
}

fn item9() -> Outcome {
    let gi = mi(&G_MIXED);
    let nw = gi.weighted_dimension();
    let xi = [1.0, 1.0];
    let oracle = BesselProduct::new(&gi, &xi).map_err(err)?;
    let f0 = bessel_product(&G_MIXED, &xi, &X0);
    let times = linspace(0.25, 2.0, 8);
    let mut e = 0.0_f64;
    for (k, fractional) in [
        (nw - 1.0, false),
        (nw + 1.0, false),
        (nw + 0.3, false),
        (2.0, false),
        (1.0, false),
        (0.5, false),
        (0.5, true),
    ] {
        let opts = EpdOptions { fractional, ..orders() };
        let sol = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), k).map_err(err)?, opts)
            .map_err(err)?;
        let p = sol.at(&X0).map_err(err)?;
        for &t in &times {
            let want = f0 * j_series(0.5 * (k - 1.0), t * SQRT_2);
            e = max_of([e, (p.eval(t).map_err(err)? - want).abs()]);
        }
    }
    Ok((e, "max |u - j(x,xi) j_((k-1)/2)(t|xi|)| over mean/above/recurrence/fractional".into()))
}

fn item10() -> Outcome {
    let gi = mi(&G_MIXED);
    let xi = [1.0, 1.0];
    let oracle = BesselProduct::new(&gi, &xi).map_err(err)?;
    let f0 = bessel_product(&G_MIXED, &xi, &X0);
    let times: [f64; 4] = [0.5, 1.0, 1.5, 2.0];
    let mut e = 0.0_f64;
    // u^k = t^{1−k} u^{2−k}
    for k in [0.5, 2.5] {
        let sol = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), 2.0 - k).map_err(err)?, orders())
            .map_err(err)?;
        let cache = Cache::new(&sol);
        let w = |x: &[f64], t: f64| t.powf(1.0 - k) * cache.eval(x, t);
        for &t in &times {
            let want = t.powf(1.0 - k) * f0 * j_series(0.5 * (1.0 - k), t * SQRT_2);
            e = max_of([e, (w(&X0, t) - want).abs(), residual(&w, &G_MIXED, k, &X0, t, 4e-4)]);
        }
    }
    // u^k_t = t u^{k+2}, where u^{k+2} has data Δ_γ f/(k+1) = −|ξ|² f/(k+1)
    for k in [0.5, 1.0] {
        let lower = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), k).map_err(err)?, orders())
            .map_err(err)?;
        let scale = -2.0 / (k + 1.0);
        let o = oracle.clone();
        let data = FnField::new(2, move |x: &[f64]| scale * o.eval(x));
        let upper = EpdSolution::new(EpdProblem::new(data, gi.clone(), k + 2.0).map_err(err)?, orders())
            .map_err(err)?;
        let (pl, pu) = (lower.at(&X0).map_err(err)?, upper.at(&X0).map_err(err)?);
        let h = 1e-3;
        for &t in &times {
            let ut = (pl.eval(t + h).map_err(err)? - pl.eval(t - h).map_err(err)?) / (2.0 * h);
            e = max_of([e, (ut - t * pu.eval(t).map_err(err)?).abs()]);
        }
    }
    Ok((e, "t^(1-k)u^(2-k): closed form and EPD_k residual; u^k_t = t u^(k+2)".into()))
}

fn item11() -> Outcome {
    let mut e = 0.0_f64;
    for gamma in [&[1.0, 1.0][..], &G_MIXED] {
        let gi = mi(gamma);
        let nw = gi.weighted_dimension();
        let sol = EpdSolution::new(EpdProblem::new(RadiusSquared { dimension: 2 }, gi, -3.0).map_err(err)?, orders())
            .map_err(err)?;
        for x in [[0.0, 0.0], X0, [1.5, 0.2]] {
            let p = sol.at(&x).map_err(err)?;
            for t in linspace(0.0, 2.0, 9) {
                let want = x[0] * x[0] + x[1] * x[1] - 0.5 * nw * t * t;
                e = max_of([e, (p.eval(t).map_err(err)? - want).abs()]);
            }
        }
        let cache = Cache::new(&sol);
        e = max_of([e, residual(&|x, t| cache.eval(x, t), gamma, -3.0, &X0, 1.0, 1e-2)]);
    }
    Ok((e, "k=-3, f=|x|^2: |u - (|x|^2 - N t^2/2)| and EPD residual".into()))
}

fn item13() -> Outcome {
    let mut e = 0.0_f64;
    for gamma in [&[1.0, 1.0][..], &G_MIXED] {
        let gi = mi(gamma);
        let k = gi.weighted_dimension() + 1.0;
        let nu = 0.5 * (k - 1.0);
        let opts = orders();
        let gauss = EpdProblem::new(Gaussian { dimension: 2, rate: 0.5 }, gi.clone(), k).map_err(err)?;
        let sol = EpdSolution::new(gauss.clone(), opts.clone()).map_err(err)?;
        let p = sol.at(&X0).map_err(err)?;
        let xi = [0.6, 0.8];
        let wave = EpdProblem::new(BesselProduct::new(&gi, &xi).map_err(err)?, gi.clone(), k).map_err(err)?;
        let f0 = bessel_product(gamma, &xi, &X0);
        for t in [0.5, 1.0, 1.5, 2.0] {
            let ek = epd_above_erdelyi_kober(&gauss, &X0, t, &opts).map_err(err)?;
            e = e.max((ek - p.eval(t).map_err(err)?).abs());
            let ek = epd_above_erdelyi_kober(&wave, &X0, t, &opts).map_err(err)?;
            e = e.max((ek - f0 * j_series(nu, t)).abs());
        }
    }
    Ok((e, "k=N+1: Erdelyi-Kober form vs radial quadrature (Gaussian) and vs Bessel oracle".into()))
}

// ---------------------------------------------------------------- 12 ultrahyperbolic

fn item12() -> Outcome {
    let nested = BlockOrders { sphere: 12, shift: 16 };
    let cases: [(&[f64], &[f64], &[f64], &[f64], &[f64]); 2] = [
        (&[1.0, 1.0], &[1.0, 1.0], &[1.0, 1.0], &[1.0, 1.0], &[0.4, 0.7, 0.5, 0.2]),
        (&[3.0], &[1.0, 1.0], &[SQRT_2], &[1.0, 1.0], &[0.6, 0.3, 0.9]),
    ];
    let mut e = 0.0_f64;
    for (gx, gy, xi1, xi2, point) in cases {
        let geometry = SplitGeometry::new(mi(gx), mi(gy));
        let u = separable_solution(&geometry, xi1, xi2).map_err(err)?;
        let (x, y) = point.split_at(gx.len());
        let u0 = bessel_product(gx, xi1, x) * bessel_product(gy, xi2, y);
        let nw: f64 = gx.iter().sum::<f64>() + gx.len() as f64;
        for r in [0.5, 1.0, 2.0] {
            let (a, b) = asgeirsson_check(&u, &geometry, x, y, r, BlockOrders::default()).map_err(err)?;
            let want = u0 * j_series(0.5 * (nw - 2.0), r * SQRT_2);
            e = e.max((a - b).abs()).max((a - want).abs());
        }
        for (r, s) in [(0.5, 1.0), (1.0, 1.5)] {
            let (a, b) = commuting_means_check(&u, &geometry, x, y, r, s, nested).map_err(err)?;
            e = e.max((a - b).abs());
        }
    }
    // negative control: 1 + 1 ≠ 2 + 2 must leave a visible gap
    let geometry = SplitGeometry::new(mi(&[1.0]), mi(&[1.0, 1.0]));
    let u = separable_solution(&geometry, &[SQRT_2], &[1.0, 1.0]).map_err(err)?;
    let (a, b) = asgeirsson_check(&u, &geometry, &[0.6], &[0.3, 0.9], 1.0, BlockOrders::default()).map_err(err)?;
    let control = (a - b).abs();
    if control <= 1e-3 {
        return Ok((f64::INFINITY, format!("negative control gap {control:.3e} not > 1e-3")));
    }
    Ok((e, format!("Asgeirsson + commuting means vs Bessel oracle; control gap {control:.3e} > 1e-3")))
}

// ---------------------------------------------------------------- 14 degenerate limit

fn item14() -> Outcome {
    let x = 0.5;
    let limit = simpson(0.0, 1.0, 20_000, bump);
    let mut errors = Vec::new();
    for gamma in [0.5, 0.1, 0.02] {
        let t = AngularShift::new(gamma, 96).map_err(err)?;
        let v = weighted_inner(|y| t.apply(bump, x, y), |_| 1.0, gamma, x + 1.0);
        errors.push((v - limit).abs());
    }
    let worst = errors.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max);
    let degenerate = simpson(0.0, 1.5, 20_000, |y| shift_degenerate(bump, x, y));
    if (degenerate - limit).abs() > 1e-6 {
        return Ok((f64::INFINITY, format!("gamma=0 shift integral off by {:.3e}", (degenerate - limit).abs())));
    }
    Ok((
        worst,
        format!(
            "max successive error ratio, errors {:.3e} {:.3e} {:.3e} as gamma -> 0",
            errors[0], errors[1], errors[2]
        ),
    ))
}

// ---------------------------------------------------------------- 15 CLI

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bessel-means"))
}

fn item15() -> Outcome {
    let dir = tempfile::tempdir().map_err(err)?;
    // full verify run must pass and exit 0
    let manifest = dir.path().join("manifest.csv");
    let status = binary()
        .args(["verify", "--out"])
        .arg(&manifest)
        .stderr(std::process::Stdio::null())
        .status()
        .map_err(err)?;
    if !status.success() {
        return Ok((1.0, format!("verify exited with {status}")));
    }
    let text = std::fs::read_to_string(&manifest).map_err(err)?;
    let checks = text.lines().skip(1).count();
    if checks == 0 || text.lines().skip(1).any(|l| !l.ends_with(",PASS")) {
        return Ok((1.0, "manifest contains a non-PASS row".into()));
    }
    // a written config reproduces the same output, byte for byte
    let config = bessel_means::RunConfig::for_command(bessel_means::Command::Mean);
    let path = dir.path().join("mean.json");
    std::fs::write(&path, config.to_json()).map_err(err)?;
    let reread = bessel_means::RunConfig::load(&path).map_err(err)?;
    if reread != config {
        return Ok((1.0, "config did not round-trip".into()));
    }
    let run = |out: &str| {
        let target = dir.path().join(out);
        let ok = binary()
            .args(["mean", "--config"])
            .arg(&path)
            .arg("--out")
            .arg(&target)
            .status()
            .map(|s| s.success())
            .unwrap_or(false);
        ok.then(|| std::fs::read(&target).ok()).flatten()
    };
    let (a, b) = (run("a.csv"), run("b.csv"));
    let (Some(a), Some(b)) = (a, b) else {
        return Ok((1.0, "mean run failed".into()));
    };
    if a != b {
        return Ok((1.0, "repeated runs differ".into()));
    }
    // and its numbers are the closed form |x|² + t² at x = (1, 1)
    let text = String::from_utf8(a).map_err(err)?;
    let mut e = 0.0_f64;
    for line in text.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|c| c.parse().unwrap_or(f64::NAN)).collect();
        e = max_of([e, (v[3] - (2.0 + v[2] * v[2])).abs()]);
    }
    // invalid input exits 2
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"command":"mean","gamma":[-1.0,1.0]}"#).map_err(err)?;
    let code = binary().args(["mean", "--config"]).arg(&bad).output().map_err(err)?.status.code();
    if code != Some(2) {
        return Ok((1.0, format!("invalid config exit code {code:?}, want 2")));
    }
    Ok((e, format!("verify {checks} checks PASS, config round trip, identical bytes, exit 2 on bad input; mean error")))
}

// ---------------------------------------------------------------- driver

const ITEMS: &[Item] = &[
    Item { id: 1, title: "shift normalization and identity", tol: 1e-12, run: item1, check: at_most },
    Item { id: 2, title: "shift representations agree", tol: 1e-8, run: item2, check: at_most },
    Item { id: 3, title: "product formula", tol: 1e-8, run: item3, check: at_most },
    Item { id: 4, title: "shift self-adjointness", tol: 1e-6, run: item4, check: at_most },
    Item { id: 5, title: "weighted sphere and ball measures", tol: 1e-6, run: item5, check: at_most },
    Item { id: 6, title: "weighted spherical mean properties", tol: 1e-8, run: item6, check: at_most },
    Item { id: 7, title: "iterated-mean reduction", tol: 1e-6, run: item7, check: at_most },
    Item { id: 8, title: "EPD residual second-order convergence", tol: 0.5, run: item8, check: at_most },
    Item { id: 9, title: "EPD separation oracle", tol: 1e-5, run: item9, check: at_most },
    Item { id: 10, title: "EPD recurrence identities", tol: 1e-4, run: item10, check: at_most },
    Item { id: 11, title: "EPD exceptional case closed form", tol: 1e-8, run: item11, check: at_most },
    Item { id: 12, title: "Asgeirsson identity and commuting means", tol: 1e-6, run: item12, check: at_most },
    Item { id: 13, title: "Erdelyi-Kober representation", tol: 1e-6, run: item13, check: at_most },
    Item { id: 14, title: "degenerate limit gamma -> 0", tol: 1.0, run: item14, check: below },
    Item { id: 15, title: "CLI verify, round trip, determinism", tol: 1e-8, run: item15, check: at_most },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for item in ITEMS {
        let start = Instant::now();
        let (status, detail) = match (item.run)() {
            Ok((v, note)) if (item.check)(v, item.tol) => ("PASS", format!("{v:.3e} (tol {:e}) {note}", item.tol)),
            Ok((v, note)) => ("FAIL", format!("{v:.3e} (tol {:e}) {note}", item.tol)),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status} {}: {detail} [{:.1}s]",
            item.id,
            item.title,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria passed", ITEMS.len() - failed, ITEMS.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
