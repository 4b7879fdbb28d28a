//! The Cauchy problem for the general Euler–Poisson–Darboux equation
//!
//! ```text
//!     Δ_γ u(x, t) = u_tt + (k/t) u_t,    u(x, 0) = f(x),  u_t(x, 0) = 0.
//! ```
//!
//! With `N = n + |γ|` the solver dispatches on `k`:
//!
//! - `k = N − 1`: the weighted spherical mean `M_f^γ(x; t)` itself;
//! - `k > N − 1`: an average of the mean against `(1 − s²)^{(k−N−1)/2} s^{N−1}`;
//! - `k < N − 1`, `k ≠ −1, −3, …`: the recurrence
//!   `u^k = t^{1−k} (∂/(t∂t))^m (t^{k+2m−1} u^{k+2m})`;
//! - `k = −1, −3, …`: the finite series in powers of `Δ_γ` (exact for B-polyharmonic `f`);
//! - optionally for `0 < k < 1`: a Riemann–Liouville derivative of the mean.
//!
//! Regimes built on the mean sample `P(ρ) = M_f^γ(x; √ρ)` once per point `x`
//! (see [`MeanProfile`]) and differentiate it in `ρ` where the formulas need it.

mod fractional;
mod residual;

use alloc::vec::Vec;
use core::fmt;

use crate::field::check_field_dimension;
use crate::math;
use crate::means::{MeanProfile, SphericalMean};
use crate::numerics::{gamma, gauss_jacobi_rule};
use crate::shift1d::DEFAULT_SHIFT_ORDER;
use crate::sphere::{weighted_sphere_area, DEFAULT_SPHERE_ORDER};
use crate::{Error, MultiIndex, Result, ScalarField};

pub use fractional::{
    erdelyi_kober, riemann_liouville_derivative, riemann_liouville_derivative_power,
    riemann_liouville_integral_power, FRACTIONAL_ORDER,
};
pub use residual::{
    apply_delta_gamma, apply_delta_gamma_extrapolated, b_polyharmonic_residual, epd_residual,
    epd_residual_of, probe_lattice,
};

/// `|k − (N − 1)|` below which the mean regime is used.
pub const MEAN_REGIME_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Mean,
    Above,
    Recurrence,
    Exceptional,
    Fractional,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Mean => "mean",
            Regime::Above => "above",
            Regime::Recurrence => "recurrence",
            Regime::Exceptional => "exceptional",
            Regime::Fractional => "fractional",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the constant in front of the `k > N − 1` integral is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// Fixed by `u(x, 0) = f(x)`.
    #[default]
    Constraint,
    /// `C(n,γ,k) = Π Γ((γ_i+1)/2) Γ((k−N+1)/2) / (2^n Γ(k/2))` as printed in the
    /// literature; it does not reproduce the initial data and is kept for comparison.
    AsPrinted,
}

/// Readings of `u = Γ((k+1)/2)/Γ(N/2) · t^{1−k} D^α (r^{(N−2)/2} M_{√r} f)(s)` for `0 < k < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FractionalReading {
    /// `α = (N − 1 − k)/2`, `s = t²`: the continuation of the Erdélyi–Kober form
    /// to negative order. Reproduces constants and agrees with the recurrence.
    #[default]
    ErdelyiKoberOrder,
    /// `α = (N − 1)/2`, `s = t`.
    PrintedAtT,
    /// `α = (N − 1)/2`, `s = t²`.
    PrintedAtTSquared,
}

impl FractionalReading {
    pub fn name(self) -> &'static str {
        match self {
            FractionalReading::ErdelyiKoberOrder => "ek",
            FractionalReading::PrintedAtT => "t",
            FractionalReading::PrintedAtTSquared => "t2",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EpdOptions {
    pub shift_order: usize,
    pub sphere_order: usize,
    /// Order of the Jacobi rules in the radial variable.
    pub radial_order: usize,
    /// Lobatto nodes of the mean profile in `ρ = r²`.
    pub profile_nodes: usize,
    /// Largest `t` the profile-based regimes accept.
    pub horizon: f64,
    pub normalization: Normalization,
    /// Use the fractional-derivative formula instead of the recurrence for `0 < k < 1`.
    pub fractional: bool,
    pub fractional_reading: FractionalReading,
    /// Depth `m` of the recurrence; `None` picks the smallest admissible value.
    pub recurrence_depth: Option<usize>,
    /// Step of the nested `Δ_γ` stencils in the exceptional regime.
    pub delta_step: f64,
    /// Relative tolerance of the B-polyharmonicity check in the exceptional regime.
    pub polyharmonic_tolerance: f64,
}

impl Default for EpdOptions {
    fn default() -> Self {
        Self {
            shift_order: DEFAULT_SHIFT_ORDER,
            sphere_order: DEFAULT_SPHERE_ORDER,
            radial_order: 64,
            profile_nodes: 33,
            horizon: 3.0,
            normalization: Normalization::Constraint,
            fractional: false,
            fractional_reading: FractionalReading::ErdelyiKoberOrder,
            recurrence_depth: None,
            delta_step: 1.0 / 16.0,
            polyharmonic_tolerance: 1e-5,
        }
    }
}

/// Initial data `f`, multi-index `γ` and EPD parameter `k`.
#[derive(Debug, Clone)]
pub struct EpdProblem<F> {
    f: F,
    gamma: MultiIndex,
    k: f64,
}

impl<F: ScalarField> EpdProblem<F> {
    pub fn new(f: F, gamma: MultiIndex, k: f64) -> Result<Self> {
        check_field_dimension(&f, gamma.len())?;
        if !k.is_finite() {
            return Err(Error::domain("EPD parameter k", k));
        }
        Ok(Self { f, gamma, k })
    }

    pub fn field(&self) -> &F {
        &self.f
    }

    pub fn gamma(&self) -> &MultiIndex {
        &self.gamma
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn dimension(&self) -> usize {
        self.gamma.len()
    }

    /// `N = n + |γ|`.
    pub fn weighted_dimension(&self) -> f64 {
        self.gamma.weighted_dimension()
    }

    pub fn regime(&self, fractional: bool) -> Regime {
        classify(self.k, self.weighted_dimension(), fractional)
    }
}

fn is_negative_odd(k: f64) -> bool {
    k < 0.0 && math::is_integer(k) && (k as i64) % 2 != 0
}

/// Regime for parameter `k` when `n + |γ| = weighted_dimension`.
pub fn classify(k: f64, weighted_dimension: f64, fractional: bool) -> Regime {
    let seam = weighted_dimension - 1.0;
    if (k - seam).abs() <= MEAN_REGIME_TOLERANCE {
        Regime::Mean
    } else if k > seam {
        Regime::Above
    } else if is_negative_odd(k) {
        Regime::Exceptional
    } else if fractional && k > 0.0 && k < 1.0 {
        Regime::Fractional
    } else {
        Regime::Recurrence
    }
}

fn regime_admits(regime: Regime, k: f64, weighted_dimension: f64) -> bool {
    let seam = weighted_dimension - 1.0;
    match regime {
        Regime::Mean => (k - seam).abs() <= MEAN_REGIME_TOLERANCE,
        Regime::Above => k > seam + MEAN_REGIME_TOLERANCE,
        Regime::Recurrence => k < seam - MEAN_REGIME_TOLERANCE && !is_negative_odd(k),
        Regime::Exceptional => is_negative_odd(k),
        Regime::Fractional => k > 0.0 && k < 1.0 && k < seam,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DiagnosticKind {
    /// `Δ_γ^m f ≠ 0` at a probe although the exceptional series needs it.
    NotPolyharmonic { order: usize },
    /// The fractional formula and the recurrence disagree.
    FractionalMismatch { reading: FractionalReading },
}

/// A measured quantity that exceeded its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub measured: f64,
    pub tolerance: f64,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DiagnosticKind::NotPolyharmonic { order } => write!(
                f,
                "initial data is not B-polyharmonic of order {order}: |Δ^{order} f| = {:.3e} > {:.3e}",
                self.measured, self.tolerance
            ),
            DiagnosticKind::FractionalMismatch { reading } => write!(
                f,
                "fractional formula (reading {}) differs from the recurrence by {:.3e} > {:.3e}",
                reading.name(),
                self.measured,
                self.tolerance
            ),
        }
    }
}

// Jacobi nodes on [0, 1] for the weight (1−v)^β v^{N/2−1}, normalized.
#[derive(Debug, Clone)]
struct Level {
    v: Vec<f64>,
    w: Vec<f64>,
    scale: f64,
}

impl Level {
    fn new(k_level: f64, weighted_dimension: f64, gamma_index: &MultiIndex, options: &EpdOptions) -> Result<Self> {
        let n = weighted_dimension;
        let beta = 0.5 * (k_level - n - 1.0);
        let rule = gauss_jacobi_rule(options.radial_order, beta, 0.5 * n - 1.0)?;
        let total: f64 = rule.weights().iter().sum();
        let scale = match options.normalization {
            Normalization::Constraint => 1.0,
            Normalization::AsPrinted => {
                printed_constant(gamma_index, k_level)?
                    * weighted_sphere_area(gamma_index.len(), gamma_index)?
                    * 0.5
                    * gamma(beta + 1.0)
                    * gamma(0.5 * n)
                    / gamma(beta + 1.0 + 0.5 * n)
            }
        };
        Ok(Self {
            v: rule.nodes().iter().map(|u| 0.5 * (1.0 + u)).collect(),
            w: rule.weights().iter().map(|w| w / total).collect(),
            scale,
        })
    }

    // d^j/ds^j Σ W_i P(s v_i)
    fn derivative(&self, profile: &MeanProfile, j: usize, s: f64) -> f64 {
        let sum: f64 = self
            .v
            .iter()
            .zip(&self.w)
            .map(|(&v, &w)| w * math::powi(v, j as i32) * profile.derivative_rho(j, s * v))
            .sum();
        self.scale * sum
    }
}

/// `C(n, γ, k) = Π Γ((γ_i+1)/2) Γ((k−n−|γ|+1)/2) / (2^n Γ(k/2))` as printed.
pub fn printed_constant(gamma_index: &MultiIndex, k: f64) -> Result<f64> {
    let n = gamma_index.len();
    let num: f64 = gamma_index.components().iter().map(|g| gamma(0.5 * (g + 1.0))).product();
    let beta1 = 0.5 * (k - gamma_index.weighted_dimension() + 1.0);
    if !(beta1 > 0.0) || !(k > 0.0) {
        return Err(Error::Regime { regime: "above", k });
    }
    Ok(num * gamma(beta1) / (math::powi(2.0, n as i32) * gamma(0.5 * k)))
}

/// The constant making `u^k = D · I^{(k−N+1)/2}_{0+;2,N/2−1} M_f^γ(x; ·)(t)` reproduce
/// `f` at `t = 0`: `D = Γ((k+1)/2) / Γ(N/2)`.
pub fn erdelyi_kober_constant(weighted_dimension: f64, k: f64) -> f64 {
    gamma(0.5 * (k + 1.0)) / gamma(0.5 * weighted_dimension)
}

#[derive(Debug, Clone)]
enum Base {
    Mean,
    Above(Level),
}

#[derive(Debug, Clone)]
enum Plan {
    Mean,
    Above(Level),
    Recurrence {
        m: usize,
        // (k + 2m − 1)/2
        p: f64,
        // (k+1)(k+3)…(k+2m−1)
        product: f64,
        base: Base,
    },
    Exceptional {
        terms: usize,
    },
    Fractional {
        alpha: f64,
        m: usize,
        beta: f64,
        c: f64,
        prefactor: f64,
        // Jacobi (β−1, c) nodes on [0, 1] with 2^{−(β+c)}/Γ(β) folded in; empty when β = 0
        v: Vec<f64>,
        w: Vec<f64>,
    },
}

/// A regime-tagged solution `u(x, t)`.
#[derive(Debug, Clone)]
pub struct EpdSolution<F> {
    problem: EpdProblem<F>,
    options: EpdOptions,
    regime: Regime,
    depth: usize,
    mean: SphericalMean,
    plan: Plan,
    diagnostics: Vec<Diagnostic>,
}

impl<F: ScalarField> EpdSolution<F> {
    /// Solves with the regime chosen from `k`.
    pub fn new(problem: EpdProblem<F>, options: EpdOptions) -> Result<Self> {
        let regime = problem.regime(options.fractional);
        Self::with_regime(problem, regime, options)
    }

    /// Solves with an explicitly requested regime; fails if `k` does not belong to it.
    pub fn with_regime(problem: EpdProblem<F>, regime: Regime, options: EpdOptions) -> Result<Self> {
        let k = problem.k();
        let nw = problem.weighted_dimension();
        if !regime_admits(regime, k, nw) {
            return Err(Error::Regime {
                regime: regime.name(),
                k,
            });
        }
        if !(options.horizon > 0.0 && options.horizon.is_finite()) {
            return Err(Error::domain("solution horizon", options.horizon));
        }
        let mean = SphericalMean::with_orders(problem.gamma(), options.sphere_order, options.shift_order)?;
        let mut depth = 0;
        let mut diagnostics = Vec::new();
        let plan = match regime {
            Regime::Mean => Plan::Mean,
            Regime::Above => Plan::Above(Level::new(k, nw, problem.gamma(), &options)?),
            Regime::Recurrence => {
                let minimal = math::ceil(0.5 * (nw - 1.0 - k) - 1e-12).max(1.0) as usize;
                let m = match options.recurrence_depth {
                    Some(m) if m >= minimal => m,
                    Some(_) => {
                        return Err(Error::Invalid(
                            "recurrence depth must satisfy k + 2m >= n + |gamma| - 1",
                        ))
                    }
                    None => minimal,
                };
                depth = m;
                let top = k + 2.0 * m as f64;
                let product = (1..=m).map(|l| k + 2.0 * l as f64 - 1.0).product();
                let base = if (top - (nw - 1.0)).abs() <= MEAN_REGIME_TOLERANCE {
                    Base::Mean
                } else {
                    Base::Above(Level::new(top, nw, problem.gamma(), &options)?)
                };
                Plan::Recurrence {
                    m,
                    p: 0.5 * (top - 1.0),
                    product,
                    base,
                }
            }
            Regime::Exceptional => {
                let terms = (-(k + 1.0) / 2.0) as usize;
                let order = terms + 1;
                let probes = probe_lattice(problem.dimension(), &[0.3, 0.9, 1.5]);
                let scale = probes
                    .iter()
                    .map(|p| problem.field().eval(p).abs())
                    .fold(1.0, f64::max);
                let f = |y: &[f64]| problem.field().eval(y);
                let measured = probes
                    .iter()
                    .map(|p| {
                        residual::delta_power(&f, problem.gamma().components(), p, order, options.delta_step, true)
                            .abs()
                    })
                    .fold(0.0, f64::max);
                let tolerance = options.polyharmonic_tolerance * scale;
                if measured > tolerance {
                    diagnostics.push(Diagnostic {
                        kind: DiagnosticKind::NotPolyharmonic { order },
                        measured,
                        tolerance,
                    });
                }
                Plan::Exceptional { terms }
            }
            Regime::Fractional => {
                let alpha = match options.fractional_reading {
                    FractionalReading::ErdelyiKoberOrder => 0.5 * (nw - 1.0 - k),
                    _ => 0.5 * (nw - 1.0),
                };
                let m_f = math::ceil(alpha);
                let beta = m_f - alpha;
                let c = 0.5 * (nw - 2.0);
                let (v, w) = if beta > 0.0 {
                    let rule = gauss_jacobi_rule(options.radial_order, beta - 1.0, c)?;
                    let scale = math::powf(2.0, -(beta + c)) / gamma(beta);
                    (
                        rule.nodes().iter().map(|u| 0.5 * (1.0 + u)).collect(),
                        rule.weights().iter().map(|w| w * scale).collect(),
                    )
                } else {
                    (Vec::new(), Vec::new())
                };
                depth = m_f as usize;
                Plan::Fractional {
                    alpha,
                    m: m_f as usize,
                    beta,
                    c,
                    prefactor: gamma(0.5 * (k + 1.0)) / gamma(0.5 * nw),
                    v,
                    w,
                }
            }
        };
        Ok(Self {
            problem,
            options,
            regime,
            depth,
            mean,
            plan,
            diagnostics,
        })
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn k(&self) -> f64 {
        self.problem.k()
    }

    /// Recurrence depth `m` (the derivative order for the fractional regime), 0 otherwise.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn problem(&self) -> &EpdProblem<F> {
        &self.problem
    }

    pub fn options(&self) -> &EpdOptions {
        &self.options
    }

    pub fn mean(&self) -> &SphericalMean {
        &self.mean
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    /// Precomputes everything that depends on `x` only.
    pub fn at(&self, x: &[f64]) -> Result<PointSolution<'_, F>> {
        self.problem.gamma().check_point(x)?;
        let f = self.problem.field();
        let profile_with = |derivatives: usize, horizon: f64| {
            MeanProfile::build(&self.mean, f, x, horizon, self.options.profile_nodes, derivatives)
        };
        let mut coefficients = Vec::new();
        let profile = match &self.plan {
            Plan::Mean => None,
            Plan::Above(_) => Some(profile_with(0, self.options.horizon)?),
            Plan::Recurrence { m, .. } => Some(profile_with(*m, self.options.horizon)?),
            Plan::Fractional { m, .. } => {
                let horizon = match self.options.fractional_reading {
                    FractionalReading::PrintedAtT => self.options.horizon.max(math::sqrt(self.options.horizon)),
                    _ => self.options.horizon,
                };
                Some(profile_with(*m, horizon)?)
            }
            Plan::Exceptional { terms } => {
                let k = self.k();
                let g = self.problem.gamma().components();
                let eval = |y: &[f64]| f.eval(y);
                let mut denom = 1.0;
                for h in 1..=*terms {
                    denom *= (k + 2.0 * h as f64 - 1.0) * (2.0 * h as f64);
                    let lap = residual::delta_power(&eval, g, x, h, self.options.delta_step, true);
                    coefficients.push(lap / denom);
                }
                None
            }
        };
        Ok(PointSolution {
            solution: self,
            x: x.to_vec(),
            value: f.eval(x),
            profile,
            coefficients,
        })
    }

    /// `u(x, t)`; builds the per-point data on every call, see [`EpdSolution::at`].
    pub fn evaluate(&self, x: &[f64], t: f64) -> Result<f64> {
        self.at(x)?.eval(t)
    }
}

/// `t ↦ u(x, t)` at a fixed `x`.
#[derive(Debug, Clone)]
pub struct PointSolution<'a, F> {
    solution: &'a EpdSolution<F>,
    x: Vec<f64>,
    value: f64,
    profile: Option<MeanProfile>,
    coefficients: Vec<f64>,
}

impl<F: ScalarField> PointSolution<'_, F> {
    pub fn point(&self) -> &[f64] {
        &self.x
    }

    /// `u(x, t)`; negative `t` uses the even extension.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::domain("EPD time", t));
        }
        let t = t.abs();
        let sol = self.solution;
        let horizon = sol.options.horizon;
        if self.profile.is_some() && t > horizon * (1.0 + 1e-12) {
            return Err(Error::Horizon { t, horizon });
        }
        let s = t * t;
        Ok(match &sol.plan {
            Plan::Mean => sol.mean.eval(sol.problem.field(), &self.x, t),
            Plan::Above(level) => level.derivative(self.profile(), 0, s),
            Plan::Recurrence { m, p, product, base } => {
                let profile = self.profile();
                let mut sum = 0.0;
                let mut binom = 1.0;
                for j in 0..=*m {
                    if j > 0 {
                        binom *= (m - j + 1) as f64 / j as f64;
                    }
                    let u_j = match base {
                        Base::Mean => profile.derivative_rho(j, s),
                        Base::Above(level) => level.derivative(profile, j, s),
                    };
                    sum += binom * falling(*p, m - j) * math::powi(s, j as i32) * u_j;
                }
                math::powi(2.0, *m as i32) * sum / product
            }
            Plan::Exceptional { .. } => {
                let mut u = self.value;
                let mut power = 1.0;
                for a in &self.coefficients {
                    power *= s;
                    u += a * power;
                }
                u
            }
            Plan::Fractional {
                alpha,
                m,
                beta,
                c,
                prefactor,
                v,
                w,
            } => {
                let reading = sol.options.fractional_reading;
                if t == 0.0 {
                    if reading == FractionalReading::ErdelyiKoberOrder {
                        return Ok(self.value);
                    }
                    return Err(Error::domain("fractional formula evaluated at", t));
                }
                let arg = match reading {
                    FractionalReading::PrintedAtT => t,
                    _ => s,
                };
                let _ = alpha;
                let profile = self.profile();
                let a = beta + c;
                let mut sum = 0.0;
                let mut binom = 1.0;
                for j in 0..=*m {
                    if j > 0 {
                        binom *= (m - j + 1) as f64 / j as f64;
                    }
                    let g_j = if v.is_empty() {
                        profile.derivative_rho(j, arg)
                    } else {
                        v.iter()
                            .zip(w)
                            .map(|(&vi, &wi)| wi * math::powi(vi, j as i32) * profile.derivative_rho(j, arg * vi))
                            .sum()
                    };
                    sum += binom * falling(a, m - j) * math::powf(arg, a - (m - j) as f64) * g_j;
                }
                prefactor * math::powf(t, 1.0 - sol.k()) * sum
            }
        })
    }

    fn profile(&self) -> &MeanProfile {
        self.profile.as_ref().expect("profile regimes build a profile")
    }

    /// The mean profile, for regimes that sample one.
    pub fn mean_profile(&self) -> Option<&MeanProfile> {
        self.profile.as_ref()
    }
}

// p (p−1) ⋯ (p−r+1)
fn falling(p: f64, r: usize) -> f64 {
    (0..r).map(|i| p - i as f64).product()
}

/// Solves the Cauchy problem with the regime chosen from `k`.
pub fn solve_epd<F: ScalarField>(problem: EpdProblem<F>, options: EpdOptions) -> Result<EpdSolution<F>> {
    EpdSolution::new(problem, options)
}

fn case<F: ScalarField>(problem: EpdProblem<F>, regime: Regime, options: &EpdOptions, x: &[f64], t: f64) -> Result<f64> {
    EpdSolution::with_regime(problem, regime, options.clone())?.evaluate(x, t)
}

/// `u(x, t) = M_f^γ(x; t)` for `k = n + |γ| − 1`.
pub fn epd_case_mean<F: ScalarField>(problem: EpdProblem<F>, x: &[f64], t: f64, options: &EpdOptions) -> Result<f64> {
    case(problem, Regime::Mean, options, x, t)
}

/// `k > n + |γ| − 1`: `u = c ∫_0^1 (1 − s²)^{(k−N−1)/2} s^{N−1} M_f^γ(x; ts) ds`.
pub fn epd_case_above<F: ScalarField>(problem: EpdProblem<F>, x: &[f64], t: f64, options: &EpdOptions) -> Result<f64> {
    case(problem, Regime::Above, options, x, t)
}

/// `k < n + |γ| − 1`, `k ≠ −1, −3, …`, through the recurrence of depth `m`.
pub fn epd_case_recurrence<F: ScalarField>(
    problem: EpdProblem<F>,
    x: &[f64],
    t: f64,
    options: &EpdOptions,
) -> Result<f64> {
    case(problem, Regime::Recurrence, options, x, t)
}

/// `k = −1, −3, …`: `u = f + Σ_h Δ_γ^h f / ((k+1)⋯(k+2h−1)) · t^{2h} / (2·4⋯2h)`.
pub fn epd_case_exceptional<F: ScalarField>(
    problem: EpdProblem<F>,
    x: &[f64],
    t: f64,
    options: &EpdOptions,
) -> Result<f64> {
    case(problem, Regime::Exceptional, options, x, t)
}

/// `u^k = D · I^{(k−N+1)/2}_{0+;2,N/2−1} [r ↦ M_f^γ(x; r)](t)` for `k > N − 1`,
/// the Erdélyi–Kober form of the `k > N − 1` solution.
pub fn epd_above_erdelyi_kober<F: ScalarField>(
    problem: &EpdProblem<F>,
    x: &[f64],
    t: f64,
    options: &EpdOptions,
) -> Result<f64> {
    let k = problem.k();
    let nw = problem.weighted_dimension();
    if !regime_admits(Regime::Above, k, nw) {
        return Err(Error::Regime { regime: "above", k });
    }
    problem.gamma().check_point(x)?;
    if t == 0.0 {
        return Ok(problem.field().eval(x));
    }
    let mean = SphericalMean::with_orders(problem.gamma(), options.sphere_order, options.shift_order)?;
    let alpha = 0.5 * (k - nw + 1.0);
    let d = match options.normalization {
        Normalization::Constraint => erdelyi_kober_constant(nw, k),
        Normalization::AsPrinted => {
            0.5 * printed_constant(problem.gamma(), k)?
                * weighted_sphere_area(problem.dimension(), problem.gamma())?
                * gamma(alpha)
        }
    };
    let f = problem.field();
    let integral = erdelyi_kober(|r| mean.eval(f, x, r), alpha, 2.0, 0.5 * nw - 1.0, t.abs(), options.radial_order)?;
    Ok(d * integral)
}

/// Value of the fractional-derivative formula together with the recurrence value it is checked against.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalEvaluation {
    pub value: f64,
    pub recurrence: f64,
    /// Present when `|value − recurrence|` exceeds the tolerance.
    pub diagnostic: Option<Diagnostic>,
}

/// `0 < k < 1` through `Γ((k+1)/2)/Γ(N/2) · t^{1−k} D^α (r^{(N−2)/2} M_{√r} f)(s)`,
/// cross-checked against the recurrence at the same point.
pub fn epd_fractional_small_k<F: ScalarField + Clone>(
    problem: EpdProblem<F>,
    x: &[f64],
    t: f64,
    options: &EpdOptions,
    tolerance: f64,
) -> Result<FractionalEvaluation> {
    let mut opts = options.clone();
    opts.fractional = true;
    let fractional = EpdSolution::with_regime(problem.clone(), Regime::Fractional, opts.clone())?;
    opts.fractional = false;
    let recurrence = EpdSolution::with_regime(problem, Regime::Recurrence, opts)?;
    let value = fractional.evaluate(x, t)?;
    let reference = recurrence.evaluate(x, t)?;
    let gap = (value - reference).abs();
    let diagnostic = (!(gap <= tolerance)).then(|| Diagnostic {
        kind: DiagnosticKind::FractionalMismatch {
            reading: options.fractional_reading,
        },
        measured: gap,
        tolerance,
    });
    Ok(FractionalEvaluation {
        value,
        recurrence: reference,
        diagnostic,
    })
}
