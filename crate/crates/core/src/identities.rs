//! Both sides of every identity, evaluated independently and compared.
//!
//! Integral sides go through [`crate::quadrature`]; closed forms through
//! [`crate::gamma`] and [`crate::series`]. A check never reuses one side to
//! produce the other.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};
use crate::gamma;
use crate::quadrature::{self, QuadratureSettings, Transform, UnitPoint};
use crate::report::{self, VerificationReport};
use crate::series::{self, SeriesSettings};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Formula30,
    LimitIdentity,
    GammaIntegralPower,
    GammaIntegralLog,
    EtaFe,
    BetaFe,
    LambdaEta,
    Vardi,
    Kummer,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Formula30,
        IdentityId::LimitIdentity,
        IdentityId::GammaIntegralPower,
        IdentityId::GammaIntegralLog,
        IdentityId::EtaFe,
        IdentityId::BetaFe,
        IdentityId::LambdaEta,
        IdentityId::Vardi,
        IdentityId::Kummer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Formula30 => "formula30",
            IdentityId::LimitIdentity => "limit_identity",
            IdentityId::GammaIntegralPower => "gamma_integral_power",
            IdentityId::GammaIntegralLog => "gamma_integral_log",
            IdentityId::EtaFe => "eta_fe",
            IdentityId::BetaFe => "beta_fe",
            IdentityId::LambdaEta => "lambda_eta",
            IdentityId::Vardi => "vardi",
            IdentityId::Kummer => "kummer",
        }
    }

    /// Pass threshold applied to both the absolute and the relative residual.
    pub fn default_tolerance(self) -> f64 {
        match self {
            IdentityId::Formula30 | IdentityId::LimitIdentity => 1e-8,
            IdentityId::Kummer => 1e-9,
            IdentityId::GammaIntegralPower
            | IdentityId::GammaIntegralLog
            | IdentityId::Vardi
            | IdentityId::EtaFe
            | IdentityId::BetaFe => 1e-10,
            IdentityId::LambdaEta => 1e-12,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidSettings(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Integer(u64),
    Real(f64),
    Complex(#[serde(with = "report::complex_repr")] Complex64),
    Tag(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: ParamValue,
}

impl Param {
    fn real(name: &str, v: f64) -> Self {
        Self {
            name: name.into(),
            value: ParamValue::Real(v),
        }
    }

    fn complex(name: &str, v: Complex64) -> Self {
        Self {
            name: name.into(),
            value: ParamValue::Complex(v),
        }
    }

    fn integer(name: &str, v: u64) -> Self {
        Self {
            name: name.into(),
            value: ParamValue::Integer(v),
        }
    }

    fn tag(name: &str, m: Method) -> Self {
        Self {
            name: name.into(),
            value: ParamValue::Tag(m.as_str().into()),
        }
    }
}

/// One evaluated identity at one parameter tuple.
///
/// `lhs`, `rhs`, `abs_err` and `rel_err` are `None` when evaluation failed;
/// `error` then carries the message. Rows that failed on a pole or removable
/// prefactor singularity are marked `excluded`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity_id: IdentityId,
    pub params: Vec<Param>,
    #[serde(with = "report::opt_complex_repr")]
    pub lhs: Option<Complex64>,
    #[serde(with = "report::opt_complex_repr")]
    pub rhs: Option<Complex64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub pass: bool,
    pub tolerance: f64,
    pub excluded: bool,
    pub error: Option<String>,
}

impl IdentityCheck {
    pub fn from_sides(
        identity_id: IdentityId,
        params: Vec<Param>,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        let rel_err = abs_err / lhs.norm().max(rhs.norm()).max(1e-300);
        let pass = abs_err <= tolerance || rel_err <= tolerance;
        Self {
            identity_id,
            params,
            lhs: Some(lhs),
            rhs: Some(rhs),
            abs_err: Some(abs_err),
            rel_err: Some(rel_err),
            pass,
            tolerance,
            excluded: false,
            error: None,
        }
    }

    pub fn failed(identity_id: IdentityId, params: Vec<Param>, err: &Error) -> Self {
        Self {
            identity_id,
            params,
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            pass: false,
            tolerance: identity_id.default_tolerance(),
            excluded: matches!(err, Error::Pole(_) | Error::NearPole { .. }),
            error: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CheckSettings {
    pub quadrature: QuadratureSettings,
    pub series: SeriesSettings,
}

impl CheckSettings {
    fn unit(&self) -> QuadratureSettings {
        self.quadrature.with_transform(Transform::TanhSinh01)
    }

    fn half_line(&self) -> QuadratureSettings {
        self.quadrature.with_transform(Transform::ExpSinh0Inf)
    }
}

// ---------------------------------------------------------------------------
// domains

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn require_strip_a(a: f64) -> Result<()> {
    if a > 0.0 && a < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("a must lie in (0, pi), got {a}")))
    }
}

fn require_strip_s(s: Complex64) -> Result<()> {
    if s.re > 0.0 && s.re < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("Re s must lie in (0, 1), got {s}")))
    }
}

// ---------------------------------------------------------------------------
// bare integrals

/// `(ln(1/y))^(s-1)` as `exp((s-1) ln ln(1/y))`.
#[inline]
fn log_power(p: UnitPoint, s: Complex64) -> Complex64 {
    ((s - 1.0) * p.ln_inv().ln()).exp()
}

/// `1 + 2 y cos a + y^2` as `(1-y)^2 + 4 y cos^2(a/2)`, positive for `a < pi`.
#[inline]
fn kummer_denominator(p: UnitPoint, a: f64) -> f64 {
    let h = (0.5 * a).cos();
    p.one_minus_y * p.one_minus_y + 4.0 * p.y * h * h
}

/// `∫_0^∞ (e^{au} - e^{-au}) / (e^{πu} - e^{-πu}) u^{-s} du`.
pub fn formula30_lhs_integral(a: f64, s: Complex64, cfg: &CheckSettings) -> Result<EvalResult> {
    require_strip_a(a)?;
    require_strip_s(s)?;
    quadrature::integrate_0inf(
        |u| {
            // e^{-(π-a)u} (1 - e^{-2au}) / (1 - e^{-2πu}), finite for all u > 0
            let ratio = (-2.0 * a * u).exp_m1() / (-2.0 * PI * u).exp_m1();
            (-s * u.ln() - (PI - a) * u).exp() * ratio
        },
        &cfg.half_line(),
    )
}

/// `∫_0^1 ln^{s-1}(1/y) / (1 + 2y cos a + y^2) dy`.
pub fn formula30_rhs_integral(a: f64, s: Complex64, cfg: &CheckSettings) -> Result<EvalResult> {
    require_strip_a(a)?;
    require_strip_s(s)?;
    quadrature::integrate_01(|p| log_power(p, s) / kummer_denominator(p, a), &cfg.unit())
}

/// `∫_0^∞ u^{1-s} / (e^{πu} - e^{-πu}) du`.
pub fn limit_lhs_integral(s: Complex64, cfg: &CheckSettings) -> Result<EvalResult> {
    require_strip_s(s)?;
    quadrature::integrate_0inf(
        |u| ((1.0 - s) * u.ln() - PI * u).exp() / -(-2.0 * PI * u).exp_m1(),
        &cfg.half_line(),
    )
}

/// `∫_0^1 ln^{s-1}(1/y) / (1 + y)^2 dy`.
pub fn limit_rhs_integral(s: Complex64, cfg: &CheckSettings) -> Result<EvalResult> {
    require_strip_s(s)?;
    quadrature::integrate_01(
        |p| log_power(p, s) / ((1.0 + p.y) * (1.0 + p.y)),
        &cfg.unit(),
    )
}

/// `∫_0^∞ e^{-y} y^{1-s} dy`, which equals `Gamma(2 - s)` for `Re s < 2`.
pub fn gamma_power_integral(s: Complex64, cfg: &CheckSettings) -> Result<EvalResult> {
    if s.re.is_nan() || s.re >= 2.0 {
        return Err(Error::Domain(format!("Re s must be below 2, got {s}")));
    }
    quadrature::integrate_0inf(|y| ((1.0 - s) * y.ln() - y).exp(), &cfg.half_line())
}

/// `∫_0^1 ln^{s-1}(1/y) y^{n-1} dy`, which equals `Gamma(s) / n^s` for `Re s > 0`.
pub fn gamma_log_integral(n: u64, s: Complex64, cfg: &CheckSettings) -> Result<EvalResult> {
    if n < 1 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if s.re.is_nan() || s.re <= 0.0 {
        return Err(Error::Domain(format!("Re s must be positive, got {s}")));
    }
    let m = (n - 1) as f64;
    quadrature::integrate_01(
        |p| {
            let l = p.ln_inv();
            ((s - 1.0) * l.ln() - m * l).exp()
        },
        &cfg.unit(),
    )
}

/// `∫_0^1 ln ln(1/x) / (1 + x^2) dx`.
pub fn vardi_integral(cfg: &CheckSettings) -> Result<EvalResult> {
    quadrature::integrate_01(|p| c(p.ln_inv().ln() / (1.0 + p.y * p.y)), &cfg.unit())
}

/// `∫_0^1 ln ln(1/y) / (1 + 2y cos a + y^2) dy`.
pub fn kummer_integral(a: f64, cfg: &CheckSettings) -> Result<EvalResult> {
    require_strip_a(a)?;
    quadrature::integrate_01(
        |p| c(p.ln_inv().ln() / kummer_denominator(p, a)),
        &cfg.unit(),
    )
}

// ---------------------------------------------------------------------------
// sides and closed forms

/// Right side of the `formula30` identity: `sin a / (Gamma(s) cos(pi s/2))` times the `(0,1)` integral.
pub fn formula30_rhs(a: f64, s: Complex64, cfg: &CheckSettings) -> Result<Complex64> {
    let integral = formula30_rhs_integral(a, s, cfg)?;
    let scale = a.sin() / (gamma::gamma(s)? * gamma::cos_half_pi(s));
    Ok(scale * integral.value)
}

/// `2 cos(pi s/2) ∫_0^∞ u^{1-s} / (e^{πu} - e^{-πu}) du`.
pub fn limit_identity_lhs(s: Complex64, cfg: &CheckSettings) -> Result<Complex64> {
    let integral = limit_lhs_integral(s, cfg)?;
    Ok(2.0 * gamma::cos_half_pi(s) * integral.value)
}

/// `(1/Gamma(s)) ∫_0^1 ln^{s-1}(1/y) / (1 + y)^2 dy`.
pub fn limit_identity_rhs(s: Complex64, cfg: &CheckSettings) -> Result<Complex64> {
    let integral = limit_rhs_integral(s, cfg)?;
    Ok(integral.value / gamma::gamma(s)?)
}

/// `(pi/2) ln(Gamma(3/4) / Gamma(1/4) sqrt(2 pi))`.
pub fn vardi_closed_form() -> Result<f64> {
    let lg34 = gamma::ln_gamma_pos(0.75)?;
    let lg14 = gamma::ln_gamma_pos(0.25)?;
    Ok(FRAC_PI_2 * (lg34 - lg14 + 0.5 * (2.0 * PI).ln()))
}

/// `(pi / (2 sin a)) ln((2 pi)^(a/pi) Gamma(1/2 + a/(2pi)) / Gamma(1/2 - a/(2pi)))`.
pub fn kummer_closed_form(a: f64) -> Result<f64> {
    require_strip_a(a)?;
    let x = a / (2.0 * PI);
    let lg_plus = gamma::ln_gamma_pos(0.5 + x)?;
    let lg_minus = gamma::ln_gamma_pos(0.5 - x)?;
    Ok(PI / (2.0 * a.sin()) * ((a / PI) * (2.0 * PI).ln() + lg_plus - lg_minus))
}

// ---------------------------------------------------------------------------
// checks

pub fn formula30_check(a: f64, s: Complex64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = formula30_lhs_integral(a, s, cfg)?.value;
    let rhs = formula30_rhs(a, s, cfg)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::Formula30,
        vec![Param::real("a", a), Param::complex("s", s)],
        lhs,
        rhs,
        IdentityId::Formula30.default_tolerance(),
    ))
}

pub fn limit_identity_check(s: Complex64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = limit_identity_lhs(s, cfg)?;
    let rhs = limit_identity_rhs(s, cfg)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::LimitIdentity,
        vec![Param::complex("s", s)],
        lhs,
        rhs,
        IdentityId::LimitIdentity.default_tolerance(),
    ))
}

pub fn gamma_integral_power_check(s: Complex64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = gamma_power_integral(s, cfg)?.value;
    let rhs = gamma::gamma(2.0 - s)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::GammaIntegralPower,
        vec![Param::complex("s", s)],
        lhs,
        rhs,
        IdentityId::GammaIntegralPower.default_tolerance(),
    ))
}

pub fn gamma_integral_log_check(
    n: u64,
    s: Complex64,
    cfg: &CheckSettings,
) -> Result<IdentityCheck> {
    let lhs = gamma_log_integral(n, s, cfg)?.value;
    let rhs = gamma::gamma(s)? * (-s * (n as f64).ln()).exp();
    Ok(IdentityCheck::from_sides(
        IdentityId::GammaIntegralLog,
        vec![Param::integer("n", n), Param::complex("s", s)],
        lhs,
        rhs,
        IdentityId::GammaIntegralLog.default_tolerance(),
    ))
}

/// Series path whenever `Re s > 0`, functional equation otherwise.
fn eta_preferring_series(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    if s.re > 0.0 {
        series::eta_series(s, cfg)
    } else {
        series::eta(s, cfg)
    }
}

fn beta_preferring_series(s: Complex64, cfg: &SeriesSettings) -> Result<EvalResult> {
    if s.re > 0.0 {
        series::beta_series(s, cfg)
    } else {
        series::beta(s, cfg)
    }
}

/// `eta(1-s)` against `((2^s-1)/(1-2^(s-1))) pi^(-s) cos(pi s/2) Gamma(s) eta(s)`.
pub fn eta_fe_check(s: Complex64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = eta_preferring_series(1.0 - s, &cfg.series)?;
    let prefactor = series::eta_fe_prefactor(s)?;
    let inner = eta_preferring_series(s, &cfg.series)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::EtaFe,
        vec![
            Param::complex("s", s),
            Param::tag("lhs_method", lhs.method),
            Param::tag("rhs_method", inner.method),
        ],
        lhs.value,
        prefactor * inner.value,
        IdentityId::EtaFe.default_tolerance(),
    ))
}

/// `beta(1-s)` against `(2/pi)^s sin(pi s/2) Gamma(s) beta(s)`.
pub fn beta_fe_check(s: Complex64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = beta_preferring_series(1.0 - s, &cfg.series)?;
    let prefactor = series::beta_fe_prefactor(s)?;
    let inner = beta_preferring_series(s, &cfg.series)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::BetaFe,
        vec![
            Param::complex("s", s),
            Param::tag("lhs_method", lhs.method),
            Param::tag("rhs_method", inner.method),
        ],
        lhs.value,
        prefactor * inner.value,
        IdentityId::BetaFe.default_tolerance(),
    ))
}

/// `lambda(s)` against `((2^s-1)/(2^s-2)) eta(s)`.
pub fn lambda_eta_check(s: Complex64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = series::lambda(s, &cfg.series)?;
    let rhs = series::lambda_from_eta(s, &cfg.series)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::LambdaEta,
        vec![
            Param::complex("s", s),
            Param::tag("lhs_method", lhs.method),
            Param::tag("rhs_method", rhs.method),
        ],
        lhs.value,
        rhs.value,
        IdentityId::LambdaEta.default_tolerance(),
    ))
}

pub fn vardi_check(cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = vardi_integral(cfg)?.value;
    let rhs = vardi_closed_form()?;
    Ok(IdentityCheck::from_sides(
        IdentityId::Vardi,
        Vec::new(),
        lhs,
        c(rhs),
        IdentityId::Vardi.default_tolerance(),
    ))
}

pub fn kummer_check(a: f64, cfg: &CheckSettings) -> Result<IdentityCheck> {
    let lhs = kummer_integral(a, cfg)?.value;
    let rhs = kummer_closed_form(a)?;
    Ok(IdentityCheck::from_sides(
        IdentityId::Kummer,
        vec![Param::real("a", a)],
        lhs,
        c(rhs),
        IdentityId::Kummer.default_tolerance(),
    ))
}

// ---------------------------------------------------------------------------
// grids

/// Parameter values swept by [`run_grid`].
///
/// `s_values` feed the strip identities and both Gamma integrals,
/// `fe_s_values` the functional equations and (restricted to `Re s > 1`)
/// the lambda-eta relation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamGrid {
    pub a_values: Vec<f64>,
    #[serde(with = "report::complex_vec_repr")]
    pub s_values: Vec<Complex64>,
    #[serde(with = "report::complex_vec_repr")]
    pub fe_s_values: Vec<Complex64>,
    pub n_values: Vec<u64>,
}

/// `-3.5, -3.0, ..., 4.5` without the points where a Gamma pole or the
/// `1 - 2^(s-1)` zero makes a functional-equation prefactor singular.
fn default_fe_grid() -> Vec<Complex64> {
    let mut out: Vec<Complex64> = (0..=16)
        .map(|k| -3.5 + 0.5 * k as f64)
        .filter(|&s| !(s.fract() == 0.0 && s <= 1.0))
        .map(c)
        .collect();
    out.extend([
        Complex64::new(0.5, 0.7),
        Complex64::new(0.5, -0.7),
        Complex64::new(2.0, 1.0),
        Complex64::new(2.0, -1.0),
    ]);
    out
}

impl Default for ParamGrid {
    fn default() -> Self {
        Self {
            a_values: vec![0.3, PI / 3.0, FRAC_PI_2, 2.0, 2.8],
            s_values: [0.1, 0.25, 0.5, 0.75, 0.9].into_iter().map(c).collect(),
            fe_s_values: default_fe_grid(),
            n_values: vec![1, 2, 3, 5, 10],
        }
    }
}

impl ParamGrid {
    /// Checks that every list used by `ids` is non-empty and inside the
    /// corresponding identity's domain.
    pub fn validate_for(&self, ids: &[IdentityId]) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidSettings(msg));
        let uses = |set: &[IdentityId]| ids.iter().any(|id| set.contains(id));

        if uses(&[IdentityId::Formula30, IdentityId::Kummer]) {
            if self.a_values.is_empty() {
                return invalid("a grid is empty".into());
            }
            if let Some(a) = self.a_values.iter().find(|&&a| !(a > 0.0 && a < PI)) {
                return invalid(format!("a = {a} is outside (0, pi)"));
            }
        }
        let strip = [IdentityId::Formula30, IdentityId::LimitIdentity];
        let gamma_ids = [IdentityId::GammaIntegralPower, IdentityId::GammaIntegralLog];
        if uses(&strip) || uses(&gamma_ids) {
            if self.s_values.is_empty() {
                return invalid("s grid is empty".into());
            }
            if uses(&strip) {
                if let Some(s) = self.s_values.iter().find(|s| !(s.re > 0.0 && s.re < 1.0)) {
                    return invalid(format!("s = {s} is outside the strip 0 < Re s < 1"));
                }
            }
            if ids.contains(&IdentityId::GammaIntegralPower) {
                if let Some(s) = self.s_values.iter().find(|s| s.re.is_nan() || s.re >= 2.0) {
                    return invalid(format!("s = {s} needs Re s < 2"));
                }
            }
            if ids.contains(&IdentityId::GammaIntegralLog) {
                if let Some(s) = self.s_values.iter().find(|s| s.re.is_nan() || s.re <= 0.0) {
                    return invalid(format!("s = {s} needs Re s > 0"));
                }
            }
        }
        if ids.contains(&IdentityId::GammaIntegralLog) {
            if self.n_values.is_empty() {
                return invalid("n grid is empty".into());
            }
            if self.n_values.contains(&0) {
                return invalid("n must be at least 1".into());
            }
        }
        if uses(&[IdentityId::EtaFe, IdentityId::BetaFe, IdentityId::LambdaEta])
            && self.fe_s_values.is_empty()
        {
            return invalid("functional-equation s grid is empty".into());
        }
        if self
            .s_values
            .iter()
            .chain(&self.fe_s_values)
            .any(|s| !(s.re.is_finite() && s.im.is_finite()))
            || self.a_values.iter().any(|a| !a.is_finite())
        {
            return invalid("grid values must be finite".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
enum Job {
    Formula30(f64, Complex64),
    Limit(Complex64),
    GammaPower(Complex64),
    GammaLog(u64, Complex64),
    EtaFe(Complex64),
    BetaFe(Complex64),
    LambdaEta(Complex64),
    Vardi,
    Kummer(f64),
}

impl Job {
    fn id(&self) -> IdentityId {
        match self {
            Job::Formula30(..) => IdentityId::Formula30,
            Job::Limit(_) => IdentityId::LimitIdentity,
            Job::GammaPower(_) => IdentityId::GammaIntegralPower,
            Job::GammaLog(..) => IdentityId::GammaIntegralLog,
            Job::EtaFe(_) => IdentityId::EtaFe,
            Job::BetaFe(_) => IdentityId::BetaFe,
            Job::LambdaEta(_) => IdentityId::LambdaEta,
            Job::Vardi => IdentityId::Vardi,
            Job::Kummer(_) => IdentityId::Kummer,
        }
    }

    fn key(&self) -> Vec<f64> {
        match *self {
            Job::Formula30(a, s) => vec![a, s.re, s.im],
            Job::GammaLog(n, s) => vec![n as f64, s.re, s.im],
            Job::Limit(s)
            | Job::GammaPower(s)
            | Job::EtaFe(s)
            | Job::BetaFe(s)
            | Job::LambdaEta(s) => vec![s.re, s.im],
            Job::Kummer(a) => vec![a],
            Job::Vardi => Vec::new(),
        }
    }

    fn params(&self) -> Vec<Param> {
        match *self {
            Job::Formula30(a, s) => vec![Param::real("a", a), Param::complex("s", s)],
            Job::GammaLog(n, s) => vec![Param::integer("n", n), Param::complex("s", s)],
            Job::Limit(s)
            | Job::GammaPower(s)
            | Job::EtaFe(s)
            | Job::BetaFe(s)
            | Job::LambdaEta(s) => vec![Param::complex("s", s)],
            Job::Kummer(a) => vec![Param::real("a", a)],
            Job::Vardi => Vec::new(),
        }
    }

    fn run(&self, cfg: &CheckSettings) -> IdentityCheck {
        let outcome = match *self {
            Job::Formula30(a, s) => formula30_check(a, s, cfg),
            Job::Limit(s) => limit_identity_check(s, cfg),
            Job::GammaPower(s) => gamma_integral_power_check(s, cfg),
            Job::GammaLog(n, s) => gamma_integral_log_check(n, s, cfg),
            Job::EtaFe(s) => eta_fe_check(s, cfg),
            Job::BetaFe(s) => beta_fe_check(s, cfg),
            Job::LambdaEta(s) => lambda_eta_check(s, cfg),
            Job::Vardi => vardi_check(cfg),
            Job::Kummer(a) => kummer_check(a, cfg),
        };
        outcome.unwrap_or_else(|e| IdentityCheck::failed(self.id(), self.params(), &e))
    }
}

fn jobs_for(id: IdentityId, grid: &ParamGrid) -> Vec<Job> {
    let s = &grid.s_values;
    match id {
        IdentityId::Formula30 => grid
            .a_values
            .iter()
            .flat_map(|&a| s.iter().map(move |&s| Job::Formula30(a, s)))
            .collect(),
        IdentityId::LimitIdentity => s.iter().map(|&s| Job::Limit(s)).collect(),
        IdentityId::GammaIntegralPower => s.iter().map(|&s| Job::GammaPower(s)).collect(),
        IdentityId::GammaIntegralLog => grid
            .n_values
            .iter()
            .flat_map(|&n| s.iter().map(move |&s| Job::GammaLog(n, s)))
            .collect(),
        IdentityId::EtaFe => grid.fe_s_values.iter().map(|&s| Job::EtaFe(s)).collect(),
        IdentityId::BetaFe => grid.fe_s_values.iter().map(|&s| Job::BetaFe(s)).collect(),
        IdentityId::LambdaEta => grid
            .fe_s_values
            .iter()
            .filter(|s| s.re > 1.0)
            .map(|&s| Job::LambdaEta(s))
            .collect(),
        IdentityId::Vardi => vec![Job::Vardi],
        IdentityId::Kummer => grid.a_values.iter().map(|&a| Job::Kummer(a)).collect(),
    }
}

fn cmp_keys(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// Evaluates every `(identity, parameter tuple)` of `grid` for `ids`.
///
/// Rows are computed in parallel and returned ordered by identity, then by
/// parameter values. A failing row records its error and never aborts the
/// sweep.
pub fn run_grid(
    grid: &ParamGrid,
    ids: &[IdentityId],
    cfg: &CheckSettings,
) -> Result<VerificationReport> {
    grid.validate_for(ids)?;
    cfg.quadrature.validate()?;
    cfg.series.validate()?;

    let mut wanted: Vec<IdentityId> = ids.to_vec();
    wanted.sort();
    wanted.dedup();

    let mut jobs: Vec<Job> = wanted.iter().flat_map(|&id| jobs_for(id, grid)).collect();
    jobs.sort_by(|x, y| {
        x.id()
            .cmp(&y.id())
            .then_with(|| cmp_keys(&x.key(), &y.key()))
    });

    let rows: Vec<IdentityCheck> = jobs.par_iter().map(|job| job.run(cfg)).collect();
    Ok(VerificationReport::new(grid.clone(), rows))
}
