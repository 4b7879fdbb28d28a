//! The `verify` suite: every module invariant with its measured error.
//!
//! Checks carry the number of the acceptance item they cover (1–15) or none
//! for the supporting module invariants. Oracles are closed forms (Bessel
//! products, polynomials, Beta integrals) or an independent representation of
//! the same quantity; nothing is compared against stored numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use bessel_means_core::epd::{
    apply_delta_gamma, b_polyharmonic_residual, epd_above_erdelyi_kober, epd_fractional_small_k, epd_residual,
    epd_residual_of, probe_lattice, EpdOptions, EpdProblem, EpdSolution, PointSolution, Regime,
};
use bessel_means_core::fields::{BHarmonicProduct, BesselProduct, Constant, Gaussian, RadiusSquared};
use bessel_means_core::means::{
    iterated_mean_double, iterated_mean_single, multidim_shift, reduction_kernel, SphericalMean,
};
use bessel_means_core::numerics::{
    bessel_i_normalized, beta_fn, gamma_fn, gauss_2f1, gauss_jacobi_rule, ChebyshevSeries, NormalizedBessel,
};
use bessel_means_core::shift1d::{
    shift_angular, shift_degenerate, shift_power, shift_radial, weighted_halfline_inner, AngularShift,
};
use bessel_means_core::sphere::{
    ball_integral, simplex_monomial_integral, weighted_ball_volume, weighted_sphere_area, SphereGrid,
};
use bessel_means_core::ultrahyperbolic::{
    asgeirsson_check, boundary_means_check, commuting_means_check, separable_solution, ultrahyperbolic_residual,
    BlockMeans, BlockOrders, SplitGeometry,
};
use bessel_means_core::{FnField, MultiIndex, Result, ScalarField};
use rayon::prelude::*;

use crate::config::{Command, RunConfig};
use crate::table::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    /// Strictly below; used for monotone-trend ratios.
    Below(f64),
    /// Strictly above; negative controls.
    Exceeds(f64),
    Within(f64, f64),
}

impl Bound {
    fn admits(self, v: f64) -> bool {
        match self {
            Bound::AtMost(t) => v <= t,
            Bound::Below(t) => v < t,
            Bound::Exceeds(t) => v > t,
            Bound::Within(lo, hi) => (lo..=hi).contains(&v),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::AtMost(t) => write!(f, "<= {t:e}"),
            Bound::Below(t) => write!(f, "< {t:e}"),
            Bound::Exceeds(t) => write!(f, "> {t:e}"),
            Bound::Within(lo, hi) => write!(f, "in [{lo}, {hi}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub module: &'static str,
    pub criterion: Option<u8>,
    pub name: String,
    /// NaN when the computation itself failed; see `error`.
    pub measured: f64,
    pub bound: Bound,
    pub error: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.bound.admits(self.measured)
    }
}

struct Group {
    module: &'static str,
    criterion: Option<u8>,
    checks: Vec<Check>,
}

impl Group {
    fn new(module: &'static str, criterion: Option<u8>) -> Self {
        Self {
            module,
            criterion,
            checks: Vec::new(),
        }
    }

    fn add(&mut self, name: impl Into<String>, measured: f64, bound: Bound) {
        self.checks.push(Check {
            module: self.module,
            criterion: self.criterion,
            name: name.into(),
            measured,
            bound,
            error: None,
        });
    }

    fn at_most(&mut self, name: impl Into<String>, measured: f64, tol: f64) {
        self.add(name, measured, Bound::AtMost(tol));
    }

    fn finish(mut self, name: &str, outcome: Result<()>) -> Vec<Check> {
        if let Err(e) = outcome {
            self.checks.push(Check {
                module: self.module,
                criterion: self.criterion,
                name: name.to_owned(),
                measured: f64::NAN,
                bound: Bound::AtMost(0.0),
                error: Some(e.to_string()),
            });
        }
        self.checks
    }
}

type Task = fn() -> Vec<Check>;

const TASKS: &[Task] = &[
    shift_normalization,
    shift_representations,
    shift_product_formula,
    shift_self_adjoint,
    sphere_measures,
    mean_properties,
    iterated_reduction,
    epd_residual_convergence,
    epd_separation,
    epd_recurrence_identities,
    epd_exceptional_quadratic,
    asgeirsson_suite,
    erdelyi_kober_representation,
    degenerate_limit,
    numerics_invariants,
    shift_invariants,
    sphere_invariants,
    means_invariants,
    epd_invariants,
    ultrahyperbolic_invariants,
    cli_invariants,
];

/// Runs every check; independent groups run on the rayon pool, results keep suite order.
pub fn run_suite() -> Vec<Check> {
    TASKS.par_iter().map(|task| task()).collect::<Vec<_>>().into_iter().flatten().collect()
}

pub fn manifest(checks: &[Check]) -> Table {
    let mut table = Table::new(
        "verify",
        ["criterion", "module", "check", "measured", "bound", "status"]
            .into_iter()
            .map(String::from)
            .collect(),
    );
    for c in checks {
        table.push(vec![
            Cell::Text(c.criterion.map_or_else(|| "-".to_owned(), |n| n.to_string())),
            Cell::from(c.module),
            Cell::Text(c.name.clone()),
            Cell::Num(c.measured),
            Cell::Text(c.bound.to_string()),
            Cell::from(if c.passed() { "PASS" } else { "FAIL" }),
        ]);
        if let Some(e) = &c.error {
            table.note(&c.name, e.clone());
        }
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    table.note("checks", checks.len().to_string());
    table.note("failed", failed.to_string());
    table
}

// ---------------------------------------------------------------- helpers

fn mi(v: &[f64]) -> MultiIndex {
    MultiIndex::from_slice(v).expect("suite multi-indices are positive")
}

fn j(nu: f64, x: f64) -> f64 {
    NormalizedBessel::new(nu).expect("suite Bessel orders exceed -1").eval(x)
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

/// `exp(1 − 1/(1 − t²))` on `|t| < 1`: smooth, even, compactly supported, value 1 at 0.
fn bump(t: f64) -> f64 {
    let s = t * t;
    if s >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - s)).exp()
    }
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Orders used for the EPD checks, where every point needs a mean profile.
pub fn epd_orders() -> EpdOptions {
    EpdOptions {
        shift_order: 32,
        sphere_order: 24,
        horizon: 2.5,
        ..EpdOptions::default()
    }
}

const X0: [f64; 2] = [0.4, 0.7];
const G_MIXED: [f64; 2] = [0.8, 1.7];

/// Caches one [`PointSolution`] per spatial point so stencils reuse profiles.
struct PointCache<'a, F> {
    solution: &'a EpdSolution<F>,
    points: Mutex<HashMap<Vec<u64>, PointSolution<'a, F>>>,
}

impl<'a, F: ScalarField + Clone> PointCache<'a, F> {
    fn new(solution: &'a EpdSolution<F>) -> Self {
        Self {
            solution,
            points: Mutex::new(HashMap::new()),
        }
    }

    /// `u(x, t)`, NaN when the solver rejects the point so the check fails visibly.
    fn eval(&self, x: &[f64], t: f64) -> f64 {
        let key: Vec<u64> = x.iter().map(|v| v.abs().to_bits()).collect();
        let mut map = self.points.lock().expect("cache lock");
        let point = match map.get(&key) {
            Some(p) => p.clone(),
            None => match self.solution.at(x) {
                Ok(p) => {
                    map.insert(key, p.clone());
                    p
                }
                Err(_) => return f64::NAN,
            },
        };
        drop(map);
        point.eval(t).unwrap_or(f64::NAN)
    }
}

// ---------------------------------------------------------------- 1

fn shift_normalization() -> Vec<Check> {
    let mut g = Group::new("shift1d", Some(1));
    let outcome = (|| {
        let grid = linspace(0.0, 3.0, 20);
        for gamma in [0.3, 1.0, 2.0, 5.0] {
            let t = AngularShift::new(gamma, 64)?;
            let mut one = 0.0_f64;
            let mut identity = 0.0_f64;
            for &x in &grid {
                for &y in &grid {
                    one = one.max((t.apply(|_| 1.0, x, y) - 1.0).abs());
                }
                identity = identity.max((t.apply(|s| s.cos() + s * s, x, 0.0) - (x.cos() + x * x)).abs());
                identity = identity.max((t.apply(|s| s.cos() + s * s, 0.0, x) - (x.cos() + x * x)).abs());
            }
            g.at_most(format!("T^y[1] = 1, gamma={gamma}"), one, 1e-12);
            g.at_most(format!("T^0 f = f, gamma={gamma}"), identity, 1e-12);
        }
        Ok(())
    })();
    g.finish("shift normalization", outcome)
}

// ---------------------------------------------------------------- 2

fn shift_representations() -> Vec<Check> {
    let mut g = Group::new("shift1d", Some(2));
    let outcome = (|| {
        let pts = [0.2, 0.7, 1.3, 2.0];
        for alpha in [0.0, 2.0, 3.2] {
            let mut gap = 0.0_f64;
            for gamma in [0.5, 1.0, 1.4, 3.0] {
                for &x in &pts {
                    for &y in &pts {
                        if x == y {
                            continue;
                        }
                        let f = |s: f64| s.abs().powf(alpha);
                        let a = shift_angular(f, gamma, x, y, 64)?;
                        let r = shift_radial(f, gamma, x, y, 64)?;
                        let p = shift_power(alpha, gamma, x, y)?;
                        gap = gap.max((a - r).abs()).max((a - p).abs()).max((r - p).abs());
                    }
                }
            }
            g.at_most(format!("angular/radial/power agree, alpha={alpha}"), gap, 1e-8);
        }
        Ok(())
    })();
    g.finish("shift representations", outcome)
}

// ---------------------------------------------------------------- 3

fn shift_product_formula() -> Vec<Check> {
    let mut g = Group::new("shift1d", Some(3));
    let outcome = (|| {
        let grid = linspace(0.0, 4.0, 17);
        for gamma in [0.5, 1.0, 2.0, 3.7] {
            let b = NormalizedBessel::new(0.5 * (gamma - 1.0))?;
            let t = AngularShift::new(gamma, 64)?;
            let mut err = 0.0_f64;
            for &x in &grid {
                for &y in &grid {
                    err = err.max((t.apply(|s| b.eval(s), x, y) - b.eval(x) * b.eval(y)).abs());
                }
            }
            g.at_most(format!("T^y j(x) = j(x) j(y), gamma={gamma}"), err, 1e-8);
        }
        Ok(())
    })();
    g.finish("product formula", outcome)
}

// ---------------------------------------------------------------- 4

fn shift_self_adjoint() -> Vec<Check> {
    let mut g = Group::new("shift1d", Some(4));
    let outcome = (|| {
        let gamma = 1.5;
        let t = AngularShift::new(gamma, 64)?;
        let f = bump;
        let h = |s: f64| s * s * bump(s / 1.5);
        for y in [0.3, 0.8] {
            // supports: f in [0, 1], h in [0, 1.5]; shifted ones grow by y
            let radius = 1.5 + y;
            let left = weighted_halfline_inner(|x| t.apply(f, x, y), h, gamma, radius, 256)?;
            let right = weighted_halfline_inner(f, |x| t.apply(h, x, y), gamma, radius, 256)?;
            g.at_most(format!("<T^y f, g> = <f, T^y g>, y={y}"), (left - right).abs(), 1e-6);
        }
        Ok(())
    })();
    g.finish("self-adjointness", outcome)
}

// ---------------------------------------------------------------- 5

fn sphere_measures() -> Vec<Check> {
    let mut g = Group::new("sphere_geometry", Some(5));
    let outcome = (|| {
        for gamma in [&[1.0, 1.0][..], &[0.8, 1.7], &[0.3, 1.0, 2.5], &[1.5, 0.5, 0.7]] {
            let gi = mi(gamma);
            let n = gamma.len();
            let grid = SphereGrid::new(n, &gi, 48)?;
            let area = weighted_sphere_area(n, &gi)?;
            g.at_most(
                format!("grid weight sum = |S_1^+|, gamma={gamma:?}"),
                relative(grid.weight_sum(), area),
                1e-10,
            );
            // d/dr of the ball integral against the sphere integral at radius r
            let f = Gaussian { dimension: n, rate: 0.7 };
            let r = 0.9;
            let dr = 1e-2;
            let ball = |rr: f64| ball_integral(&f, |_| 1.0, rr, &gi, 48, 24);
            // fourth-order central stencil
            let derivative =
                (8.0 * (ball(r + dr)? - ball(r - dr)?) - (ball(r + 2.0 * dr)? - ball(r - 2.0 * dr)?)) / (12.0 * dr);
            let sphere_grid = SphereGrid::new(n, &gi, 24)?;
            let mut point = vec![0.0; n];
            let sphere = sphere_grid.integrate(|theta| {
                for (p, t) in point.iter_mut().zip(theta) {
                    *p = r * t;
                }
                f.eval(&point)
            });
            let nw = gi.weighted_dimension();
            g.at_most(
                format!("sphere integral = r^(1-N) d/dr ball integral, gamma={gamma:?}"),
                relative(derivative * r.powf(1.0 - nw), sphere),
                1e-6,
            );
        }
        Ok(())
    })();
    g.finish("weighted measures", outcome)
}

// ---------------------------------------------------------------- 6

fn mean_properties() -> Vec<Check> {
    let mut g = Group::new("means", Some(6));
    let outcome = (|| {
        let times = linspace(0.0, 3.0, 13);
        for gamma in [&[1.0, 1.0][..], &G_MIXED] {
            let gi = mi(gamma);
            let mean = SphericalMean::with_orders(&gi, 48, 64)?;
            let one = Constant { dimension: 2, value: 1.0 };
            let sq = RadiusSquared { dimension: 2 };
            let r2 = X0[0] * X0[0] + X0[1] * X0[1];
            let (mut e1, mut e2) = (0.0_f64, 0.0_f64);
            for &t in &times {
                e1 = e1.max((mean.mean(&one, &X0, t)? - 1.0).abs());
                e2 = e2.max((mean.mean(&sq, &X0, t)? - (r2 + t * t)).abs());
            }
            g.at_most(format!("M[1] = 1, gamma={gamma:?}"), e1, 1e-10);
            g.at_most(format!("M[|x|^2] = |x|^2 + t^2, gamma={gamma:?}"), e2, 1e-8);
            let nu = 0.5 * (gi.weighted_dimension() - 2.0);
            for xi in [[0.6, 0.8], [1.0, 1.0], [1.2, 1.6]] {
                let f = BesselProduct::new(&gi, &xi)?;
                let norm = f.frequency_norm();
                let mut e = 0.0_f64;
                for &t in &times {
                    e = e.max((mean.mean(&f, &X0, t)? - f.eval(&X0) * j(nu, t * norm)).abs());
                }
                g.at_most(format!("M[j(x,xi)] = j(x,xi) j_nu(t|xi|), |xi|={norm:.4}, gamma={gamma:?}"), e, 1e-8);
            }
        }
        // three dimensions: normalization needs no accuracy budget
        let gi = mi(&[0.3, 1.0, 2.5]);
        let mean = SphericalMean::with_orders(&gi, 12, 16)?;
        let one = Constant { dimension: 3, value: 1.0 };
        let e = times
            .iter()
            .map(|&t| mean.mean(&one, &[0.2, 0.5, 0.9], t).map(|v| (v - 1.0).abs()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        g.at_most("M[1] = 1, n=3", e, 1e-10);
        Ok(())
    })();
    g.finish("mean properties", outcome)
}

// ---------------------------------------------------------------- 7

fn iterated_reduction() -> Vec<Check> {
    let mut g = Group::new("means", Some(7));
    let outcome = (|| {
        let radii = [0.3, 0.7, 1.2];
        for gamma in [&[1.0, 1.0][..], &G_MIXED] {
            let gi = mi(gamma);
            let f = Gaussian { dimension: 2, rate: 0.5 };
            let grid = SphereGrid::new(2, &gi, 16)?;
            let mean = SphericalMean::with_orders(&gi, 48, 64)?;
            let mut gap = 0.0_f64;
            for &l in &radii {
                for &m in &radii {
                    let double = iterated_mean_double(&f, &gi, &X0, l, m, &grid, 16)?;
                    let single = iterated_mean_single(&mean, &f, &X0, l, m, 32)?;
                    gap = gap.max((double - single).abs());
                }
            }
            g.at_most(format!("double = single-integral iterated mean, gamma={gamma:?}"), gap, 1e-6);
        }
        Ok(())
    })();
    g.finish("iterated-mean reduction", outcome)
}

// ---------------------------------------------------------------- 8

fn residual_ratio<F: ScalarField + Clone>(solution: &EpdSolution<F>, t: f64) -> (f64, f64, f64) {
    let cache = PointCache::new(solution);
    let gamma = solution.problem().gamma().clone();
    let k = solution.k();
    let coarse = epd_residual_of(|x, s| cache.eval(x, s), &gamma, k, &X0, t, 1e-2).expect("residual");
    let fine = epd_residual_of(|x, s| cache.eval(x, s), &gamma, k, &X0, t, 5e-3).expect("residual");
    (coarse, fine, coarse / fine)
}

/// `x_1⁴ − (3+γ_1)/(1+γ_2) x_1² x_2²`: `Δ_γ² f = 0` but `Δ_γ f ≠ 0`.
pub fn biharmonic_quartic(gamma: &[f64]) -> impl Fn(&[f64]) -> f64 + Clone {
    let b = (3.0 + gamma[0]) / (1.0 + gamma[1]);
    move |x: &[f64]| {
        let (a, c) = (x[0] * x[0], x[1] * x[1]);
        a * a - b * a * c
    }
}

fn epd_residual_convergence() -> Vec<Check> {
    let mut g = Group::new("epd", Some(8));
    let outcome = (|| {
        let gi = mi(&G_MIXED);
        let nw = gi.weighted_dimension();
        let opts = epd_orders();
        let oracle = BesselProduct::new(&gi, &[1.0, 1.0])?;
        let t = 1.0;
        for (label, k) in [
            ("mean", nw - 1.0),
            ("above", nw + 1.0),
            ("recurrence", 1.0),
            ("recurrence", 0.5),
        ] {
            let sol = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), k)?, opts.clone())?;
            let (coarse, fine, ratio) = residual_ratio(&sol, t);
            g.add(
                format!("{label} k={k}: residual ratio h=1e-2/5e-3 ({coarse:.3e}/{fine:.3e})"),
                ratio,
                Bound::Within(3.5, 4.5),
            );
        }
        let harmonic = BHarmonicProduct::new(&gi, 1.0)?;
        let sol = EpdSolution::new(EpdProblem::new(harmonic, gi.clone(), -1.0)?, opts.clone())?;
        let (coarse, fine, ratio) = residual_ratio(&sol, t);
        g.add(
            format!("exceptional k=-1: residual ratio ({coarse:.3e}/{fine:.3e})"),
            ratio,
            Bound::Within(3.5, 4.5),
        );
        let quartic = FnField::new(2, biharmonic_quartic(&G_MIXED));
        let sol = EpdSolution::new(EpdProblem::new(quartic, gi.clone(), -3.0)?, opts)?;
        let (coarse, fine, ratio) = residual_ratio(&sol, t);
        g.add(
            format!("exceptional k=-3: residual ratio ({coarse:.3e}/{fine:.3e})"),
            ratio,
            Bound::Within(3.5, 4.5),
        );
        Ok(())
    })();
    g.finish("EPD residual convergence", outcome)
}

// ---------------------------------------------------------------- 9

fn epd_separation() -> Vec<Check> {
    let mut g = Group::new("epd", Some(9));
    let outcome = (|| {
        let gi = mi(&G_MIXED);
        let nw = gi.weighted_dimension();
        let oracle = BesselProduct::new(&gi, &[1.0, 1.0])?;
        let norm = oracle.frequency_norm();
        let f0 = oracle.eval(&X0);
        let times = linspace(0.25, 2.0, 8);
        for (k, fractional) in [
            (nw - 1.0, false),
            (nw + 1.0, false),
            (nw + 0.3, false),
            (2.0, false),
            (1.0, false),
            (0.5, false),
            (0.5, true),
        ] {
            let opts = EpdOptions {
                fractional,
                ..epd_orders()
            };
            let sol = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), k)?, opts)?;
            let point = sol.at(&X0)?;
            let mut e = 0.0_f64;
            for &t in &times {
                e = e.max((point.eval(t)? - f0 * j(0.5 * (k - 1.0), t * norm)).abs());
            }
            g.at_most(format!("{} k={k}: u = j(x,xi) j_((k-1)/2)(t|xi|)", sol.regime()), e, 1e-5);
        }
        Ok(())
    })();
    g.finish("separation oracle", outcome)
}

// ---------------------------------------------------------------- 10

fn epd_recurrence_identities() -> Vec<Check> {
    let mut g = Group::new("epd", Some(10));
    let outcome = (|| {
        let gi = mi(&G_MIXED);
        let opts = epd_orders();
        let oracle = BesselProduct::new(&gi, &[1.0, 1.0])?;
        let norm = oracle.frequency_norm();
        let f0 = oracle.eval(&X0);
        let times: [f64; 4] = [0.5, 1.0, 1.5, 2.0];
        // u^k = t^{1−k} u^{2−k}: the right side solves the k-equation and equals the separated form
        for k in [0.5, 2.5] {
            let sol = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), 2.0 - k)?, opts.clone())?;
            let cache = PointCache::new(&sol);
            let w = |x: &[f64], t: f64| t.powf(1.0 - k) * cache.eval(x, t);
            let (mut closed, mut residual) = (0.0_f64, 0.0_f64);
            for &t in &times {
                let want = t.powf(1.0 - k) * f0 * j(0.5 * (1.0 - k), t * norm);
                closed = closed.max((w(&X0, t) - want).abs());
                residual = residual.max(epd_residual_of(w, &gi, k, &X0, t, 4e-4)?);
            }
            g.at_most(format!("t^(1-k) u^(2-k) separated form, k={k}"), closed, 1e-5);
            g.at_most(format!("t^(1-k) u^(2-k) solves EPD_k (h=4e-4), k={k}"), residual, 1e-5);
        }
        // u^k_t = t u^{k+2}, with u^{k+2} carrying the data Δ_γ f/(k+1)
        for k in [0.5, 1.0] {
            let lower = EpdSolution::new(EpdProblem::new(oracle.clone(), gi.clone(), k)?, opts.clone())?;
            let scale = -norm * norm / (k + 1.0);
            let data = FnField::new(2, {
                let o = oracle.clone();
                move |x: &[f64]| scale * o.eval(x)
            });
            let upper = EpdSolution::new(EpdProblem::new(data, gi.clone(), k + 2.0)?, opts.clone())?;
            let (pl, pu) = (lower.at(&X0)?, upper.at(&X0)?);
            let mut e = 0.0_f64;
            let h = 1e-3;
            for &t in &times {
                let ut = (pl.eval(t + h)? - pl.eval(t - h)?) / (2.0 * h);
                e = e.max((ut - t * pu.eval(t)?).abs());
            }
            g.at_most(format!("u^k_t = t u^(k+2), k={k}"), e, 1e-4);
        }
        Ok(())
    })();
    g.finish("recurrence identities", outcome)
}

// ---------------------------------------------------------------- 11

fn epd_exceptional_quadratic() -> Vec<Check> {
    let mut g = Group::new("epd", Some(11));
    let outcome = (|| {
        for gamma in [&[1.0, 1.0][..], &G_MIXED] {
            let gi = mi(gamma);
            let nw = gi.weighted_dimension();
            let sol = EpdSolution::new(
                EpdProblem::new(RadiusSquared { dimension: 2 }, gi.clone(), -3.0)?,
                epd_orders(),
            )?;
            let mut e = 0.0_f64;
            for x in [[0.0, 0.0], X0, [1.5, 0.2]] {
                let point = sol.at(&x)?;
                for t in linspace(0.0, 2.0, 9) {
                    let want = x[0] * x[0] + x[1] * x[1] - 0.5 * nw * t * t;
                    e = e.max((point.eval(t)? - want).abs());
                }
            }
            g.at_most(format!("k=-3, f=|x|^2: u = |x|^2 - N t^2/2, gamma={gamma:?}"), e, 1e-12);
            g.at_most(
                format!("k=-3, f=|x|^2: EPD residual, gamma={gamma:?}"),
                epd_residual(&sol, &X0, 1.0, 1e-2)?,
                1e-8,
            );
        }
        Ok(())
    })();
    g.finish("exceptional case", outcome)
}

// ---------------------------------------------------------------- 12

fn asgeirsson_suite() -> Vec<Check> {
    let mut g = Group::new("ultrahyperbolic", Some(12));
    let outcome = (|| {
        let orders = BlockOrders::default();
        let nested = BlockOrders { sphere: 12, shift: 16 };
        let sqrt2 = std::f64::consts::SQRT_2;
        let cases: [(&str, &[f64], &[f64], &[f64], &[f64], &[f64]); 2] = [
            ("equal blocks", &[1.0, 1.0], &[1.0, 1.0], &[1.0, 1.0], &[1.0, 1.0], &[0.4, 0.7, 0.5, 0.2]),
            ("mixed blocks", &[3.0], &[1.0, 1.0], &[sqrt2], &[1.0, 1.0], &[0.6, 0.3, 0.9]),
        ];
        for (label, gx, gy, xi1, xi2, point) in cases {
            let geometry = SplitGeometry::new(mi(gx), mi(gy));
            let u = separable_solution(&geometry, xi1, xi2)?;
            let (x, y) = point.split_at(gx.len());
            let mut identity = 0.0_f64;
            for r in [0.5, 1.0, 2.0] {
                let (a, b) = asgeirsson_check(&u, &geometry, x, y, r, orders)?;
                identity = identity.max((a - b).abs());
            }
            g.at_most(format!("Asgeirsson identity, {label}"), identity, 1e-6);
            let mut commuting = 0.0_f64;
            for (r, s) in [(0.5, 1.0), (1.0, 1.5)] {
                let (a, b) = commuting_means_check(&u, &geometry, x, y, r, s, nested)?;
                commuting = commuting.max((a - b).abs());
            }
            g.at_most(format!("commuting block means, {label}"), commuting, 1e-6);
        }
        // 1 + 1 ≠ 2 + 2: same construction, balance condition violated
        let geometry = SplitGeometry::new(mi(&[1.0]), mi(&[1.0, 1.0]));
        let u = separable_solution(&geometry, &[sqrt2], &[1.0, 1.0])?;
        let (a, b) = asgeirsson_check(&u, &geometry, &[0.6], &[0.3, 0.9], 1.0, orders)?;
        g.add("inadmissible geometry gap (negative control)", (a - b).abs(), Bound::Exceeds(1e-3));
        Ok(())
    })();
    g.finish("Asgeirsson suite", outcome)
}

// ---------------------------------------------------------------- 13

fn erdelyi_kober_representation() -> Vec<Check> {
    let mut g = Group::new("epd", Some(13));
    let outcome = (|| {
        for gamma in [&[1.0, 1.0][..], &G_MIXED] {
            let gi = mi(gamma);
            let k = gi.weighted_dimension() + 1.0;
            let opts = epd_orders();
            let problem = EpdProblem::new(Gaussian { dimension: 2, rate: 0.5 }, gi.clone(), k)?;
            let sol = EpdSolution::new(problem.clone(), opts.clone())?;
            let point = sol.at(&X0)?;
            let mut e = 0.0_f64;
            for t in [0.5, 1.0, 1.5, 2.0] {
                e = e.max((epd_above_erdelyi_kober(&problem, &X0, t, &opts)? - point.eval(t)?).abs());
            }
            g.at_most(format!("Erdelyi-Kober form = radial quadrature, k=N+1, gamma={gamma:?}"), e, 1e-6);
        }
        Ok(())
    })();
    g.finish("Erdelyi-Kober representation", outcome)
}

// ---------------------------------------------------------------- 14

/// `∫_0^∞ T^y_x f(x) y^γ dy` for the bump `f` at `x = 0.5`.
pub fn degenerate_integral(gamma: f64) -> Result<f64> {
    let x = 0.5;
    let t = AngularShift::new(gamma, 96)?;
    // T^y f(x) vanishes once |x − y| ≥ 1
    weighted_halfline_inner(|y| t.apply(bump, x, y), |_| 1.0, gamma, x + 1.0, 256)
}

fn degenerate_limit() -> Vec<Check> {
    let mut g = Group::new("shift1d", Some(14));
    let outcome = (|| {
        // ∫_0^1 bump by Gauss–Legendre on the smooth integrand
        let rule = gauss_jacobi_rule(200, 0.0, 0.0)?;
        let limit = rule.integrate_on(0.0, 1.0, bump);
        let errors = [0.5, 0.1, 0.02]
            .iter()
            .map(|&gamma| degenerate_integral(gamma).map(|v| (v - limit).abs()))
            .collect::<Result<Vec<_>>>()?;
        let worst = errors.windows(2).map(|w| w[1] / w[0]).fold(0.0, f64::max);
        g.add(
            format!(
                "gamma -> 0 limit error decreases ({:.3e}, {:.3e}, {:.3e})",
                errors[0], errors[1], errors[2]
            ),
            worst,
            Bound::Below(1.0),
        );
        // the γ = 0 operator itself reproduces the limit
        let degenerate = rule.integrate_on(0.0, 1.5, |y| shift_degenerate(bump, 0.5, y));
        g.at_most("degenerate shift integrates to the limit", (degenerate - limit).abs(), 1e-6);
        Ok(())
    })();
    g.finish("degenerate limit", outcome)
}

// ---------------------------------------------------------------- module invariants

fn numerics_invariants() -> Vec<Check> {
    let mut g = Group::new("numerics", None);
    let outcome = (|| {
        let pi = std::f64::consts::PI;
        g.at_most("Gamma(1/2) = sqrt(pi)", (gamma_fn(0.5)? - pi.sqrt()).abs(), 1e-14);
        g.at_most("Gamma(5) = 24", (gamma_fn(5.0)? - 24.0).abs(), 1e-12);
        g.at_most(
            "Gamma(x) Gamma(1-x) = pi / sin(pi x), x=0.3",
            relative(gamma_fn(0.3)? * gamma_fn(0.7)?, pi / (0.3 * pi).sin()),
            1e-14,
        );
        let (a, b) = (0.3, -0.6);
        let rule = gauss_jacobi_rule(5, a, b)?;
        let total: f64 = rule.weights().iter().sum();
        let exact = 2f64.powf(a + b + 1.0) * beta_fn(a + 1.0, b + 1.0)?;
        g.at_most("Gauss-Jacobi weight sum", relative(total, exact), 1e-13);
        // degree 7 < 2·5 is integrated exactly: ∫(1+u)^7 w = 2^{a+b+8} B(a+1, b+8)
        let moment = rule.integrate(|u| (1.0 + u).powi(7));
        let exact = 2f64.powf(a + b + 8.0) * beta_fn(a + 1.0, b + 8.0)?;
        g.at_most("Gauss-Jacobi exact on degree 2n-1", relative(moment, exact), 1e-13);
        let mut e = 0.0_f64;
        for x in [0.5, 5.0, 20.0] {
            e = e.max((j(0.5, x) - x.sin() / x).abs());
        }
        g.at_most("j_(1/2)(x) = sin x / x", e, 1e-14);
        g.at_most(
            "i_(-1/2)(x) = cosh x",
            relative(bessel_i_normalized(-0.5, 3.0)?, 3f64.cosh()),
            1e-14,
        );
        let mut e = 0.0_f64;
        for z in [-0.5, -3.0, -40.0] {
            e = e.max(relative(gauss_2f1(1.0, 1.0, 2.0, z)?, (1.0 - z).ln() / -z));
        }
        g.at_most("2F1(1,1;2;z) = -ln(1-z)/z", e, 1e-13);
        let cheb = ChebyshevSeries::from_fn(0.0, 2.0, 24, f64::exp)?;
        let d = cheb.derivative();
        g.at_most(
            "Chebyshev interpolant and derivative of exp",
            (cheb.eval(1.3) - 1.3f64.exp()).abs().max((d.eval(0.7) - 0.7f64.exp()).abs()),
            1e-12,
        );
        Ok(())
    })();
    g.finish("numerics", outcome)
}

fn shift_invariants() -> Vec<Check> {
    let mut g = Group::new("shift1d", None);
    let outcome = (|| {
        let grid = linspace(0.0, 3.0, 13);
        let mut negative = 0.0_f64;
        let mut excess = 0.0_f64;
        let mut leak = 0.0_f64;
        for gamma in [0.3, 1.0, 2.5] {
            let t = AngularShift::new(gamma, 64)?;
            let f = |s: f64| (s - 1.0).powi(2) * bump(s / 2.0);
            for &x in &grid {
                for &y in &grid {
                    let v = t.apply(f, x, y);
                    negative = negative.max(-v);
                    let (lo, hi) = ((x - y).abs(), x + y);
                    let bound = linspace(lo, hi, 400).into_iter().map(f).fold(0.0, f64::max);
                    excess = excess.max(v.abs() - bound);
                    if (x - y).abs() >= 1.0 {
                        leak = leak.max(t.apply(bump, x, y).abs());
                    }
                }
            }
        }
        g.at_most("positivity: T^y f >= 0 for f >= 0", negative, 1e-12);
        g.at_most("boundedness: |T^y f| <= max |f| on [|x-y|, x+y]", excess, 1e-6);
        g.at_most("support: T^y f = 0 when |x-y| >= a", leak, 0.0);
        let mut comm = 0.0_f64;
        for gamma in [1.0, 2.5] {
            let t = AngularShift::new(gamma, 64)?;
            let f = |s: f64| bump(s / 2.0);
            for (x, y, z) in [(0.4, 0.3, 0.8), (1.1, 0.5, 0.2)] {
                // T^y T^z f and T^z T^y f, both at x
                let a = t.apply(|s| t.apply(f, s, z), x, y);
                let b = t.apply(|s| t.apply(f, s, y), x, z);
                comm = comm.max((a - b).abs());
            }
        }
        g.at_most("commutation: T^y T^z f = T^z T^y f", comm, 1e-6);
        // (B_γ)_x T − (B_γ)_y T, second order in h
        let gamma = 1.4;
        let t = AngularShift::new(gamma, 64)?;
        let f = |s: f64| (-0.5 * s * s).exp() * (1.0 + s * s).cos();
        let residual = |h: f64| {
            let (x, y) = (0.9, 0.6);
            let bx = |xx: f64| t.apply(f, xx, y);
            let by = |yy: f64| t.apply(f, x, yy);
            let op = |u: &dyn Fn(f64) -> f64, s: f64| {
                (u(s + h) - 2.0 * u(s) + u(s - h)) / (h * h) + gamma / s * (u(s + h) - u(s - h)) / (2.0 * h)
            };
            (op(&bx, x) - op(&by, y)).abs()
        };
        g.add(
            "shift PDE residual ratio h=1e-2/5e-3",
            residual(1e-2) / residual(5e-3),
            Bound::Within(3.5, 4.5),
        );
        let m = shift_degenerate(|s| s * s, 1.0, 2.0);
        g.at_most("degenerate shift of t^2 = x^2 + y^2", (m - 5.0).abs(), 0.0);
        Ok(())
    })();
    g.finish("shift invariants", outcome)
}

fn sphere_invariants() -> Vec<Check> {
    let mut g = Group::new("sphere_geometry", None);
    let outcome = (|| {
        for gamma in [&[1.0, 1.0][..], &[0.3, 1.0, 2.5]] {
            let gi = mi(gamma);
            let n = gamma.len();
            let area = weighted_sphere_area(n, &gi)?;
            let volume = weighted_ball_volume(n, &gi)?;
            g.at_most(
                format!("area = N volume, gamma={gamma:?}"),
                relative(gi.weighted_dimension() * volume, area),
                1e-12,
            );
            let grid = SphereGrid::new(n, &gi, 24)?;
            let mut unit = 0.0_f64;
            for i in 0..grid.len() {
                let norm: f64 = grid.node(i).iter().map(|v| v * v).sum();
                unit = unit.max((norm - 1.0).abs());
            }
            g.at_most(format!("grid nodes on the unit sphere, gamma={gamma:?}"), unit, 1e-14);
            let f = Gaussian { dimension: n, rate: 0.8 };
            let r = 1.7;
            let scaled = FnField::new(n, |x: &[f64]| f.eval(&x.iter().map(|v| r * v).collect::<Vec<_>>()));
            let big = ball_integral(&f, |_| 1.0, r, &gi, 48, 24)?;
            let unit_ball = ball_integral(&scaled, |_| 1.0, 1.0, &gi, 48, 24)?;
            g.at_most(
                format!("ball scaling law, gamma={gamma:?}"),
                relative(big, r.powf(gi.weighted_dimension()) * unit_ball),
                1e-9,
            );
        }
        let gi = mi(&[1.0, 1.0]);
        let f = FnField::new(2, |x: &[f64]| x[0] * x[0] * x[1] * x[1]);
        // y_i = x_i² turns the ball integral into a simplex monomial integral
        let want = simplex_monomial_integral(&[1.0, 1.0])? / 4.0;
        g.at_most(
            "ball integral of x1^2 x2^2 = 1/96",
            (ball_integral(&f, |_| 1.0, 1.0, &gi, 16, 16)? - want).abs().max((want - 1.0 / 96.0).abs()),
            1e-14,
        );
        Ok(())
    })();
    g.finish("sphere invariants", outcome)
}

fn means_invariants() -> Vec<Check> {
    let mut g = Group::new("means", None);
    let outcome = (|| {
        let gi = mi(&G_MIXED);
        let mean = SphericalMean::with_orders(&gi, 24, 32)?;
        let f = Gaussian { dimension: 2, rate: 0.5 };
        let h = BesselProduct::new(&gi, &[1.0, 0.5])?;
        let sum = FnField::new(2, |x: &[f64]| 2.0 * f.eval(x) - 3.0 * h.eval(x));
        let mut lin = 0.0_f64;
        for t in [0.3, 1.1, 2.4] {
            let want = 2.0 * mean.mean(&f, &X0, t)? - 3.0 * mean.mean(&h, &X0, t)?;
            lin = lin.max((mean.mean(&sum, &X0, t)? - want).abs());
        }
        g.at_most("linearity of the mean", lin, 1e-12);
        let shifted = multidim_shift(&RadiusSquared { dimension: 2 }, &gi, &[1.0, 1.0], &[0.5, 0.5], 16)?;
        g.at_most("multidim shift of |x|^2", (shifted - 2.5).abs(), 1e-13);
        let grid = SphereGrid::new(2, &gi, 12)?;
        let a = iterated_mean_double(&f, &gi, &X0, 0.4, 0.9, &grid, 12)?;
        let b = iterated_mean_double(&f, &gi, &X0, 0.9, 0.4, &grid, 12)?;
        g.at_most("iterated mean symmetric in (lambda, mu)", (a - b).abs(), 1e-8);
        let nw = gi.weighted_dimension();
        let ends = reduction_kernel(nw, 0.9, 0.4, 0.5).abs() + reduction_kernel(nw, 0.9, 0.4, 1.3).abs();
        g.at_most("reduction kernel vanishes at |l-m| and l+m", ends, 1e-14);
        let one = Constant { dimension: 2, value: 1.0 };
        g.at_most(
            "reduced iterated mean of 1",
            (iterated_mean_single(&mean, &one, &X0, 0.9, 0.4, 32)? - 1.0).abs(),
            1e-12,
        );
        Ok(())
    })();
    g.finish("means invariants", outcome)
}

fn epd_invariants() -> Vec<Check> {
    let mut g = Group::new("epd", None);
    let outcome = (|| {
        let gi = mi(&G_MIXED);
        let nw = gi.weighted_dimension();
        let opts = epd_orders();
        let f = Gaussian { dimension: 2, rate: 1.0 };
        let f0 = f.eval(&X0);
        let mut initial = 0.0_f64;
        let mut constant = 0.0_f64;
        for k in [nw - 1.0, nw + 1.0, 1.0, 0.5, -1.0, -3.0] {
            let sol = EpdSolution::new(EpdProblem::new(f, gi.clone(), k)?, opts.clone())?;
            initial = initial.max((sol.evaluate(&X0, 0.0)? - f0).abs());
            let one = EpdSolution::new(EpdProblem::new(Constant { dimension: 2, value: 1.0 }, gi.clone(), k)?, opts.clone())?;
            let p = one.at(&X0)?;
            for t in [0.5, 1.5] {
                constant = constant.max((p.eval(t)? - 1.0).abs());
            }
        }
        g.at_most("u(x, 0) = f(x) in every regime", initial, 1e-8);
        g.at_most("f = 1 gives u = 1 in every regime", constant, 1e-10);
        let seam = nw - 1.0;
        let above = EpdSolution::new(EpdProblem::new(f, gi.clone(), seam + 1e-3)?, opts.clone())?;
        let mean = EpdSolution::new(EpdProblem::new(f, gi.clone(), seam)?, opts.clone())?;
        let (pa, pm) = (above.at(&X0)?, mean.at(&X0)?);
        let mut e = 0.0_f64;
        for t in [0.5, 1.0, 2.0] {
            e = e.max((pa.eval(t)? - pm.eval(t)?).abs());
        }
        g.at_most("seam: k = N - 1 + 1e-3 approaches the mean", e, 1e-4);
        let mut e = 0.0_f64;
        for t in [0.5, 1.0] {
            let problem = EpdProblem::new(f, gi.clone(), 0.5)?;
            let r = epd_fractional_small_k(problem, &X0, t, &opts, 1e-4)?;
            e = e.max((r.value - r.recurrence).abs());
        }
        g.at_most("fractional formula = recurrence, k=0.5, gauss", e, 1e-4);
        let probes = probe_lattice(2, &[0.3, 0.9]);
        let one = Constant { dimension: 2, value: 1.0 };
        g.at_most(
            "Delta^1 of 1 vanishes",
            b_polyharmonic_residual(&one, &gi, 1, &probes, 1e-2)?,
            1e-12,
        );
        let sq = RadiusSquared { dimension: 2 };
        g.at_most(
            "Delta^2 of |x|^2 vanishes",
            b_polyharmonic_residual(&sq, &gi, 2, &probes, 1e-2)?,
            1e-6,
        );
        g.at_most(
            "Delta |x|^2 = 2N",
            (apply_delta_gamma(&sq, &gi, &X0, 1e-3)? - 2.0 * nw).abs(),
            1e-6,
        );
        let x1 = FnField::new(2, |x: &[f64]| x[0] * x[0]);
        let g11 = mi(&[1.0, 1.0]);
        g.at_most(
            "Delta x1^2 = 4 for gamma=(1,1) (not B-harmonic)",
            (b_polyharmonic_residual(&x1, &g11, 1, &probes, 1e-2)? - 4.0).abs(),
            1e-9,
        );
        let flagged = EpdSolution::new(EpdProblem::new(f, gi.clone(), -3.0)?, opts.clone())?;
        g.add(
            "non-polyharmonic data flagged in the exceptional regime",
            flagged.diagnostics().len() as f64,
            Bound::Exceeds(0.5),
        );
        // negative control: f(x) cos t solves nothing here
        let wrong = |x: &[f64], t: f64| f.eval(x) * t.cos();
        g.add(
            "residual detects a non-solution",
            epd_residual_of(wrong, &gi, 1.0, &X0, 1.0, 1e-3)?,
            Bound::Exceeds(1e-2),
        );
        let regimes = [
            (seam, Regime::Mean),
            (seam + 2.0, Regime::Above),
            (0.5, Regime::Recurrence),
            (-3.0, Regime::Exceptional),
        ];
        let mismatched = regimes
            .iter()
            .filter(|(k, r)| EpdProblem::new(one, gi.clone(), *k).map(|p| p.regime(false) != *r).unwrap_or(true))
            .count();
        g.at_most("regime dispatch", mismatched as f64, 0.0);
        Ok(())
    })();
    g.finish("EPD invariants", outcome)
}

fn ultrahyperbolic_invariants() -> Vec<Check> {
    let mut g = Group::new("ultrahyperbolic", None);
    let outcome = (|| {
        let orders = BlockOrders::default();
        let sqrt2 = std::f64::consts::SQRT_2;
        let geometry = SplitGeometry::new(mi(&[3.0]), mi(&[1.0, 1.0]));
        let u = separable_solution(&geometry, &[sqrt2], &[1.0, 1.0])?;
        let (x, y) = ([0.6], [0.3, 0.9]);
        let r1 = ultrahyperbolic_residual(&u, &geometry, &x, &y, 1e-2)?;
        let r2 = ultrahyperbolic_residual(&u, &geometry, &x, &y, 5e-3)?;
        g.at_most("separable solution: ultrahyperbolic residual (h=5e-3)", r2, 1e-4);
        g.add("ultrahyperbolic residual ratio h=1e-2/5e-3", r1 / r2, Bound::Within(3.5, 4.5));
        let nu = 0.5 * (geometry.gamma_x().weighted_dimension() - 2.0);
        let mut e = 0.0_f64;
        for r in [0.5, 1.0, 2.0] {
            let (a, b) = boundary_means_check(&u, &geometry, r, orders)?;
            let want = j(nu, r * sqrt2);
            e = e.max((a - want).abs()).max((b - want).abs());
        }
        g.at_most("boundary means equal j_nu(r|xi|) at the origin", e, 1e-6);
        let means = BlockMeans::new(&geometry, BlockOrders { sphere: 12, shift: 16 })?;
        let collapse = (means.iterated(&u, &x, &y, 0.7, 0.0)? - means.mean_x(&u, &x, &y, 0.7)?).abs();
        g.at_most("U(x, r; y, 0) = M'(x, r; y)", collapse, 0.0);
        // converse smoke test: |ξ'| ≠ |ξ''| breaks both the equation and the identity
        let gx = mi(&[3.0]);
        let gy = mi(&[1.0, 1.0]);
        let bx = BesselProduct::new(&gx, &[1.0])?;
        let by = BesselProduct::new(&gy, &[1.0, 1.0])?;
        let not_solution = FnField::new(3, |p: &[f64]| bx.eval(&p[..1]) * by.eval(&p[1..]));
        let (a, b) = asgeirsson_check(&not_solution, &geometry, &x, &y, 1.0, orders)?;
        g.add("non-solution violates the identity", (a - b).abs(), Bound::Exceeds(1e-3));
        g.add(
            "non-solution has a residual",
            ultrahyperbolic_residual(&not_solution, &geometry, &x, &y, 1e-3)?,
            Bound::Exceeds(1e-2),
        );
        let mut lattice = 0.0_f64;
        for (xv, yv) in [([0.2], [0.1, 0.4]), ([0.9], [0.6, 0.2])] {
            for r in [0.3, 1.2] {
                let (a, b) = asgeirsson_check(&u, &geometry, &xv, &yv, r, orders)?;
                lattice = lattice.max((a - b).abs());
            }
        }
        g.at_most("solution satisfies the identity on a lattice", lattice, 1e-7);
        Ok(())
    })();
    g.finish("ultrahyperbolic invariants", outcome)
}

fn cli_invariants() -> Vec<Check> {
    let mut g = Group::new("cli", Some(15));
    let outcome = (|| {
        let commands = [
            Command::Shift,
            Command::Mean,
            Command::IteratedMean,
            Command::EpdSolve,
            Command::AsgeirssonCheck,
            Command::Verify,
        ];
        let broken = commands
            .iter()
            .map(|&c| RunConfig::for_command(c))
            .filter(|c| RunConfig::from_json(&c.to_json()).ok().as_ref() != Some(c))
            .count();
        g.at_most("config JSON round trip", broken as f64, 0.0);
        let mut config = RunConfig::for_command(Command::Mean);
        config.times = linspace(0.0, 2.0, 9);
        let render = |c: &RunConfig| -> Option<Vec<u8>> {
            let table = crate::commands::run(c).ok()?;
            let mut buf = Vec::new();
            table.write_csv(&mut buf).ok()?;
            Some(buf)
        };
        let first = render(&config);
        let same = first.is_some() && first == render(&config);
        g.at_most("byte-identical CSV for identical config", if same { 0.0 } else { 1.0 }, 0.0);
        let table = crate::commands::run(&config).map_err(|_| bessel_means_core::Error::Invalid("mean command failed"))?;
        let (ts, vs) = (table.column("t").unwrap_or_default(), table.column("value").unwrap_or_default());
        let e = ts
            .iter()
            .zip(&vs)
            .map(|(t, v)| {
                let t = t.as_f64().unwrap_or(f64::NAN);
                (v.as_f64().unwrap_or(f64::NAN) - (2.0 + t * t)).abs()
            })
            .fold(if ts.is_empty() { f64::NAN } else { 0.0 }, f64::max);
        g.at_most("mean of radius-squared at (1,1) = 2 + t^2", e, 1e-8);
        let mut config = RunConfig::for_command(Command::EpdSolve);
        config.field = "gauss".into();
        let table = crate::commands::run(&config).map_err(|_| bessel_means_core::Error::Invalid("epd-solve failed"))?;
        let f0 = (-2.0_f64).exp();
        let e = table
            .column("u")
            .unwrap_or_default()
            .iter()
            .map(|v| (v.as_f64().unwrap_or(f64::NAN) - f0).abs())
            .fold(0.0, f64::max);
        g.at_most("epd-solve k=-1 returns f(x) at every t", e, 0.0);
        Ok(())
    })();
    g.finish("cli invariants", outcome)
}
