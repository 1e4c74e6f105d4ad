//! Dirichlet eta, lambda, beta and zeta on the whole complex plane.
//!
//! * `eta`, `beta`: alternating series with convergence acceleration for
//!   `Re s >= 0.5`, functional equation (argument `1 - s`) below that.
//! * `lambda`: odd-denominator series for `Re s > 1`, otherwise the rational
//!   relation to `eta`.
//! * `zeta`: `eta(s) / (1 - 2^(1-s))`.
//!
//! The functional-equation path only ever evaluates Gamma at `Re >= 0.5`,
//! so Gamma poles never meet the trigonometric zeros numerically.

use std::f64::consts::{FRAC_PI_2, LN_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmath;
use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};
use crate::gamma;

/// Below this magnitude a prefactor denominator is treated as zero.
pub const SAFE_DIV_THRESHOLD: f64 = 1e-12;

/// Real part at which evaluation switches from the series to the functional equation.
pub const SWITCHOVER_RE: f64 = 0.5;

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Convergence rate of the alternating-series acceleration: 3 + sqrt(8).
const CVZ_RATE: f64 = 5.828_427_124_746_19;

/// `(3 + sqrt 8)^n` overflows past this.
const CVZ_MAX_TERMS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Acceleration {
    None,
    AlternatingAcceleration,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSettings {
    /// Absolute tolerance.
    pub target_eps: f64,
    pub max_terms: usize,
    pub acceleration: Acceleration,
}

impl Default for SeriesSettings {
    fn default() -> Self {
        Self {
            target_eps: 1e-13,
            max_terms: 10_000,
            acceleration: Acceleration::AlternatingAcceleration,
        }
    }
}

impl SeriesSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_eps > 0.0 && self.target_eps.is_finite()) {
            return Err(Error::InvalidSettings(format!(
                "target_eps must be positive and finite, got {}",
                self.target_eps
            )));
        }
        if self.max_terms < 1 {
            return Err(Error::InvalidSettings(
                "max_terms must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionId {
    Eta,
    Lambda,
    Beta,
    Zeta,
}

impl FunctionId {
    pub const ALL: [FunctionId; 4] = [
        FunctionId::Eta,
        FunctionId::Lambda,
        FunctionId::Beta,
        FunctionId::Zeta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionId::Eta => "eta",
            FunctionId::Lambda => "lambda",
            FunctionId::Beta => "beta",
            FunctionId::Zeta => "zeta",
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidSettings(format!("unknown function {s:?}")))
    }
}

/// Dispatches to the function named by `id`.
pub fn evaluate(id: FunctionId, s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    match id {
        FunctionId::Eta => eta(s, cfg),
        FunctionId::Lambda => lambda(s, cfg),
        FunctionId::Beta => beta(s, cfg),
        FunctionId::Zeta => zeta(s, cfg),
    }
}

// ---------------------------------------------------------------------------
// alternating series

/// Terms of `sum_{k>=0} (-1)^k (m k + 1)^(-s)`; m = 1 gives eta, m = 2 beta.
#[derive(Clone, Copy)]
struct AlternatingTerms {
    s: Complex64,
    stride: f64,
}

impl AlternatingTerms {
    fn term(&self, k: usize) -> Complex64 {
        let base = self.stride * k as f64 + 1.0;
        if k == 0 {
            return Complex64::new(1.0, 0.0);
        }
        (-self.s * base.ln()).exp()
    }
}

/// Cohen-Villegas-Zagier acceleration with `n` terms, for `sum (-1)^k a_k`.
fn cvz_sum(n: usize, a: impl Fn(usize) -> Complex64) -> Complex64 {
    let mut d = CVZ_RATE.powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let nf = n as f64;
    let mut b = -1.0;
    let mut c = -d;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        sum += a(k) * c;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

/// Total variation `Gamma(sigma) / |Gamma(s)|` of the measure behind
/// `(m k + 1)^(-s)`, which scales the acceleration error bound.
fn moment_variation(s: Complex64) -> Result<f64> {
    if s.im == 0.0 {
        return Ok(1.0);
    }
    let lg_sigma = gamma::ln_gamma_pos(s.re)?;
    let lg_s = gamma::log_gamma(s)?;
    Ok((lg_sigma - lg_s.re).exp())
}

fn accelerated(terms: AlternatingTerms, cfg: &SeriesSettings) -> Result<EvalResult> {
    let variation = moment_variation(terms.s)?;
    let needed = ((2.0 * variation / cfg.target_eps).ln() / CVZ_RATE.ln()).ceil();
    let n = needed.max(1.0) as usize;
    let limit = cfg.max_terms.min(CVZ_MAX_TERMS);
    if n > limit {
        let achieved = 2.0 * variation / CVZ_RATE.powi(limit as i32);
        return Err(Error::Convergence {
            achieved,
            target: cfg.target_eps,
            work: limit,
        });
    }
    let value = cvz_sum(n, |k| terms.term(k));
    let truncation = 2.0 * variation / CVZ_RATE.powi(n as i32);
    let rounding = 4.0 * n as f64 * f64::EPSILON;
    Ok(EvalResult::new(
        value,
        truncation + rounding,
        Method::AcceleratedSeries,
        n,
    ))
}

fn direct_alternating(terms: AlternatingTerms, cfg: &SeriesSettings) -> Result<EvalResult> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for k in 0..cfg.max_terms {
        let a = terms.term(k);
        if a.norm() <= cfg.target_eps {
            // first omitted term bounds the tail of an alternating series
            return Ok(EvalResult::new(sum, a.norm(), Method::DirectSeries, k));
        }
        sum += a * sign;
        sign = -sign;
    }
    Err(Error::Convergence {
        achieved: terms.term(cfg.max_terms).norm(),
        target: cfg.target_eps,
        work: cfg.max_terms,
    })
}

fn alternating_series(terms: AlternatingTerms, cfg: &SeriesSettings) -> Result<EvalResult> {
    cfg.validate()?;
    if terms.s.re.is_nan() || terms.s.re <= 0.0 {
        return Err(Error::Domain(format!(
            "alternating series needs Re s > 0, got {}",
            terms.s
        )));
    }
    match cfg.acceleration {
        Acceleration::AlternatingAcceleration => accelerated(terms, cfg),
        Acceleration::None => direct_alternating(terms, cfg),
    }
}

/// Eta from its alternating series; valid for `Re s > 0`.
pub fn eta_series(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    alternating_series(AlternatingTerms { s, stride: 1.0 }, cfg)
}

/// Beta from its alternating series; valid for `Re s > 0`.
pub fn beta_series(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    alternating_series(AlternatingTerms { s, stride: 2.0 }, cfg)
}

// ---------------------------------------------------------------------------
// functional equations

/// `cos(pi t / 2) / (1 - 2^(t-1))` written in `h = t - 1` so the removable
/// singularity at `t = 1` cancels analytically.
fn eta_trig_ratio(t: Complex64) -> Result<Complex64> {
    let h = t - 1.0;
    if h == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(FRAC_PI_2 / LN_2, 0.0));
    }
    // cos(pi (1+h)/2) = -sin(pi h/2),  1 - 2^h = -expm1(h ln 2)
    let den = cmath::expm1(h * LN_2);
    if den.norm() < SAFE_DIV_THRESHOLD && h.norm() > 1e-6 {
        return Err(Error::NearPole { location: t });
    }
    Ok(gamma::sin_half_pi(h) / den)
}

/// The literal eta prefactor `((2^s-1)/(1-2^(s-1))) pi^(-s) cos(pi s/2) Gamma(s)`.
pub fn eta_fe_prefactor(s: Complex64) -> Result<Complex64> {
    let num = cmath::pow_m1_from_ln(LN_2, s);
    let den = 1.0 - cmath::pow_from_ln(LN_2, s - 1.0);
    if den.norm() < SAFE_DIV_THRESHOLD {
        return Err(Error::NearPole { location: s });
    }
    let g = gamma::gamma(s)?;
    Ok(num / den * cmath::pow_from_ln(-LN_PI, s) * gamma::cos_half_pi(s) * g)
}

/// The beta prefactor `(2/pi)^s sin(pi s/2) Gamma(s)`.
pub fn beta_fe_prefactor(s: Complex64) -> Result<Complex64> {
    let g = gamma::gamma(s)?;
    Ok(cmath::pow_from_ln(LN_2 - LN_PI, s) * gamma::sin_half_pi(s) * g)
}

fn rounding_slack(value: Complex64) -> f64 {
    16.0 * f64::EPSILON * value.norm()
}

fn eta_reflected(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    let t = 1.0 - s;
    let ratio = eta_trig_ratio(t)?;
    let g = gamma::gamma(t)?;
    let factor = cmath::pow_m1_from_ln(LN_2, t) * cmath::pow_from_ln(-LN_PI, t) * g * ratio;
    let inner = eta_series(t, cfg)?;
    let value = factor * inner.value;
    let err = factor.norm() * inner.err_estimate + rounding_slack(value);
    Ok(EvalResult::new(
        value,
        err,
        Method::FunctionalEquation,
        inner.work,
    ))
}

fn beta_reflected(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    let t = 1.0 - s;
    let factor = beta_fe_prefactor(t)?;
    let inner = beta_series(t, cfg)?;
    let value = factor * inner.value;
    let err = factor.norm() * inner.err_estimate + rounding_slack(value);
    Ok(EvalResult::new(
        value,
        err,
        Method::FunctionalEquation,
        inner.work,
    ))
}

/// Dirichlet eta, `sum_{n>=1} (-1)^(n+1) n^(-s)`, entire.
pub fn eta(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    cfg.validate()?;
    if s.re >= SWITCHOVER_RE {
        eta_series(s, cfg)
    } else {
        eta_reflected(s, cfg)
    }
}

/// Dirichlet beta, `sum_{n>=0} (-1)^n (2n+1)^(-s)`, entire.
pub fn beta(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    cfg.validate()?;
    if s.re >= SWITCHOVER_RE {
        beta_series(s, cfg)
    } else {
        beta_reflected(s, cfg)
    }
}

// ---------------------------------------------------------------------------
// lambda and zeta

const EM_HEAD_MIN: usize = 16;
const EM_CORRECTIONS: usize = 8;

/// B_{2j} / (2j)!, j = 1..=9.
const BERNOULLI_OVER_FACTORIAL: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43867.0 / 5_109_094_217_170_944_000.0,
];

/// `sum_{n>=0} (2n+1)^(-s)` for `Re s > 1`: explicit head plus an
/// Euler-Maclaurin tail. The error estimate is the first omitted correction.
fn lambda_direct(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    let head = EM_HEAD_MIN.max(s.norm().ceil() as usize + 8);
    if head > cfg.max_terms {
        return Err(Error::Convergence {
            achieved: f64::INFINITY,
            target: cfg.target_eps,
            work: cfg.max_terms,
        });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for n in (0..head).rev() {
        sum += (-s * ((2 * n + 1) as f64).ln()).exp();
    }

    let u = (2 * head + 1) as f64;
    let ln_u = u.ln();
    let f_head = (-s * ln_u).exp();
    let integral = f_head * u / (2.0 * (s - 1.0));
    let mut tail = integral + 0.5 * f_head;

    // derivative of order m at x = head: f_head * prod_{i<m} (-(s+i)) * 2/u
    let mut deriv = f_head;
    let mut omitted = 0.0;
    for m in 1..=(2 * EM_CORRECTIONS + 1) {
        deriv = deriv * (-(s + (m - 1) as f64)) * (2.0 / u);
        if m % 2 == 1 {
            let j = m.div_ceil(2);
            let term = deriv * BERNOULLI_OVER_FACTORIAL[j - 1];
            if j <= EM_CORRECTIONS {
                tail -= term;
            } else {
                omitted = term.norm();
            }
        }
    }
    let value = sum + tail;
    let err = omitted + head as f64 * f64::EPSILON * value.norm();
    Ok(EvalResult::new(
        value,
        err,
        Method::DirectSeries,
        head + EM_CORRECTIONS,
    ))
}

fn is_one(s: Complex64) -> bool {
    s == Complex64::new(1.0, 0.0)
}

/// `lambda(s) = ((2^s - 1)/(2^s - 2)) eta(s)`.
///
/// At `s = 0` the prefactor vanishes and the result is exactly zero, which
/// agrees with `lambda(s) = (1 - 2^-s) zeta(s)`.
pub fn lambda_from_eta(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    cfg.validate()?;
    if is_one(s) {
        return Err(Error::zeta_pole(s));
    }
    // 2^s - 2 = 2 expm1((s-1) ln 2)
    let den = cmath::expm1((s - 1.0) * LN_2) * 2.0;
    if den.norm() < SAFE_DIV_THRESHOLD {
        return Err(if (s - 1.0).norm() < 1e-6 {
            Error::zeta_pole(s)
        } else {
            Error::NearPole { location: s }
        });
    }
    let factor = cmath::pow_m1_from_ln(LN_2, s) / den;
    let inner = eta(s, cfg)?;
    let value = factor * inner.value;
    let err = factor.norm() * inner.err_estimate + rounding_slack(value);
    Ok(EvalResult::new(
        value,
        err,
        Method::ClosedRelation,
        inner.work,
    ))
}

/// Dirichlet lambda, `sum_{n>=0} (2n+1)^(-s)`, with a pole at `s = 1`.
pub fn lambda(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    cfg.validate()?;
    if is_one(s) {
        return Err(Error::zeta_pole(s));
    }
    if s.re > 1.0 {
        lambda_direct(s, cfg)
    } else {
        lambda_from_eta(s, cfg)
    }
}

/// Riemann zeta through `eta(s) / (1 - 2^(1-s))`.
///
/// The removable points `1 + 2 pi i k / ln 2`, `k != 0`, return
/// [`Error::NearPole`].
pub fn zeta(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    cfg.validate()?;
    if is_one(s) {
        return Err(Error::zeta_pole(s));
    }
    let den = -cmath::expm1((1.0 - s) * LN_2);
    if den.norm() < SAFE_DIV_THRESHOLD {
        return Err(if (s - 1.0).norm() < 1e-6 {
            Error::zeta_pole(s)
        } else {
            Error::NearPole { location: s }
        });
    }
    let inner = eta(s, cfg)?;
    let value = inner.value / den;
    let err = inner.err_estimate / den.norm() + rounding_slack(value);
    Ok(EvalResult::new(
        value,
        err,
        Method::ClosedRelation,
        inner.work,
    ))
}
