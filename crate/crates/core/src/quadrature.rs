//! Double-exponential quadrature on `(0, 1)` (tanh-sinh) and `(0, inf)`
//! (exp-sinh).
//!
//! Level `k` is the trapezoid rule with step `2^-k` in the transformed
//! variable; each level only adds the odd nodes, so node tables are built
//! once per level and shared by every call. The reported error estimate is
//! the last inter-level difference, floored by the accumulated rounding.
//!
//! On `(0, 1)` the integrand receives both `y` and `1 - y`, each computed
//! from the transform, so functions of `ln(1/y)` keep full precision near
//! `y = 1`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eval::{EvalResult, Method};

pub const MAX_LEVEL: usize = 12;

/// Transformed-variable half range for tanh-sinh; `1 - y` stays above 1e-270.
const T_MAX_UNIT: f64 = 6.0;

/// Half range for exp-sinh; abscissae span about `e^-680 .. e^680`.
const T_MAX_HALF_LINE: f64 = 6.75;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    TanhSinh01,
    ExpSinh0Inf,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    /// Convergence threshold on the inter-level difference, relative to
    /// `max(1, |estimate|)`.
    pub target_eps: f64,
    /// Number of step halvings, `1..=12`.
    pub max_level: usize,
    pub transform: Transform,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            target_eps: 1e-12,
            max_level: MAX_LEVEL,
            transform: Transform::TanhSinh01,
        }
    }
}

impl QuadratureSettings {
    pub fn with_transform(self, transform: Transform) -> Self {
        Self { transform, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_eps > 0.0 && self.target_eps.is_finite()) {
            return Err(Error::InvalidSettings(format!(
                "target_eps must be positive and finite, got {}",
                self.target_eps
            )));
        }
        if !(1..=MAX_LEVEL).contains(&self.max_level) {
            return Err(Error::InvalidSettings(format!(
                "max_level must be in 1..={MAX_LEVEL}, got {}",
                self.max_level
            )));
        }
        Ok(())
    }

    fn expect(&self, transform: Transform) -> Result<()> {
        self.validate()?;
        if self.transform != transform {
            return Err(Error::InvalidSettings(format!(
                "transform {:?} does not match the integration interval ({:?} required)",
                self.transform, transform
            )));
        }
        Ok(())
    }
}

/// Abscissa in `(0, 1)` with its complement computed independently.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPoint {
    pub y: f64,
    pub one_minus_y: f64,
}

impl UnitPoint {
    /// `ln(1/y)`, accurate at both ends of the interval.
    #[inline]
    pub fn ln_inv(&self) -> f64 {
        if self.y < 0.5 {
            -self.y.ln()
        } else {
            -(-self.one_minus_y).ln_1p()
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    x: f64,
    complement: f64,
    weight: f64,
}

fn tanh_sinh_node(t: f64) -> Node {
    let u = FRAC_PI_2 * t.sinh();
    let x = 1.0 / (1.0 + (-2.0 * u).exp());
    let complement = 1.0 / (1.0 + (2.0 * u).exp());
    Node {
        x,
        complement,
        weight: PI * t.cosh() * x * complement,
    }
}

fn exp_sinh_node(t: f64) -> Node {
    let x = (FRAC_PI_2 * t.sinh()).exp();
    Node {
        x,
        complement: f64::NAN,
        weight: x * FRAC_PI_2 * t.cosh(),
    }
}

/// Nodes first used at `level`: all integers at level 0, odd multiples of
/// `2^-level` afterwards.
fn build_level(level: usize, t_max: f64, node: fn(f64) -> Node) -> Vec<Node> {
    let h = 0.5f64.powi(level as i32);
    let (first, stride) = if level == 0 { (0i64, 1i64) } else { (1, 2) };
    let mut out = Vec::new();
    let mut j = first;
    loop {
        let t = j as f64 * h;
        if t > t_max {
            break;
        }
        for tt in if t == 0.0 { vec![0.0] } else { vec![-t, t] } {
            let n = node(tt);
            let interior = n.x > 0.0 && (n.complement.is_nan() || n.complement > 0.0);
            if interior && n.weight > 0.0 && n.weight.is_finite() {
                out.push(n);
            }
        }
        j += stride;
    }
    out
}

type Table = [OnceLock<Vec<Node>>; MAX_LEVEL + 1];

static UNIT_TABLE: Table = [const { OnceLock::new() }; MAX_LEVEL + 1];
static HALF_LINE_TABLE: Table = [const { OnceLock::new() }; MAX_LEVEL + 1];

fn nodes(transform: Transform, level: usize) -> &'static [Node] {
    match transform {
        Transform::TanhSinh01 => {
            UNIT_TABLE[level].get_or_init(|| build_level(level, T_MAX_UNIT, tanh_sinh_node))
        }
        Transform::ExpSinh0Inf => HALF_LINE_TABLE[level]
            .get_or_init(|| build_level(level, T_MAX_HALF_LINE, exp_sinh_node)),
    }
}

struct LevelSum {
    sum: Complex64,
    magnitude: f64,
    count: usize,
}

fn level_sum(
    transform: Transform,
    level: usize,
    f: &dyn Fn(&Node) -> Complex64,
) -> Result<LevelSum> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let table = nodes(transform, level);
    for n in table {
        let v = f(n);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite { abscissa: n.x });
        }
        let term = v * n.weight;
        magnitude += term.norm();
        sum += term;
    }
    Ok(LevelSum {
        sum,
        magnitude,
        count: table.len(),
    })
}

/// Runs levels `0..=max_level`, calling `visit(level, estimate, magnitude)`
/// after each; stops early when `visit` returns `true`.
fn drive(
    transform: Transform,
    max_level: usize,
    f: &dyn Fn(&Node) -> Complex64,
    mut visit: impl FnMut(usize, Complex64, f64, usize) -> bool,
) -> Result<()> {
    let mut estimate = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut work = 0;
    for level in 0..=max_level {
        let h = 0.5f64.powi(level as i32);
        let part = level_sum(transform, level, f)?;
        work += part.count;
        if level == 0 {
            estimate = part.sum * h;
            magnitude = part.magnitude * h;
        } else {
            estimate = estimate * 0.5 + part.sum * h;
            magnitude = magnitude * 0.5 + part.magnitude * h;
        }
        if visit(level, estimate, magnitude, work) {
            break;
        }
    }
    Ok(())
}

fn integrate(
    transform: Transform,
    cfg: &QuadratureSettings,
    f: &dyn Fn(&Node) -> Complex64,
) -> Result<EvalResult> {
    cfg.expect(transform)?;
    let method = match transform {
        Transform::TanhSinh01 => Method::TanhSinh,
        Transform::ExpSinh0Inf => Method::ExpSinh,
    };
    let first_check = cfg.max_level.min(3);
    let mut prev = Complex64::new(0.0, 0.0);
    let mut outcome: Option<EvalResult> = None;
    let mut last = (f64::INFINITY, 0usize);
    drive(
        transform,
        cfg.max_level,
        f,
        |level, estimate, magnitude, work| {
            if level > 0 {
                let diff = (estimate - prev).norm();
                let rounding = 4.0 * f64::EPSILON * magnitude;
                last = (diff, work);
                if level >= first_check && diff <= cfg.target_eps * estimate.norm().max(1.0) {
                    outcome = Some(EvalResult::new(estimate, diff.max(rounding), method, work));
                    return true;
                }
            }
            prev = estimate;
            false
        },
    )?;
    outcome.ok_or(Error::Convergence {
        achieved: last.0,
        target: cfg.target_eps,
        work: last.1,
    })
}

/// Integrates `f` over `(0, 1)` with the tanh-sinh transform.
pub fn integrate_01(
    f: impl Fn(UnitPoint) -> Complex64,
    cfg: &QuadratureSettings,
) -> Result<EvalResult> {
    integrate(Transform::TanhSinh01, cfg, &|n: &Node| {
        f(UnitPoint {
            y: n.x,
            one_minus_y: n.complement,
        })
    })
}

/// Integrates `f` over `(0, inf)` with the exp-sinh transform.
pub fn integrate_0inf(
    f: impl Fn(f64) -> Complex64,
    cfg: &QuadratureSettings,
) -> Result<EvalResult> {
    integrate(Transform::ExpSinh0Inf, cfg, &|n: &Node| f(n.x))
}

/// Estimates at every level `0..=max_level` for `(0, 1)`, without early exit.
pub fn level_estimates_01(
    f: impl Fn(UnitPoint) -> Complex64,
    max_level: usize,
) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    let g = |n: &Node| {
        f(UnitPoint {
            y: n.x,
            one_minus_y: n.complement,
        })
    };
    drive(
        Transform::TanhSinh01,
        max_level.min(MAX_LEVEL),
        &g,
        |_, e, _, _| {
            out.push(e);
            false
        },
    )?;
    Ok(out)
}

/// Estimates at every level `0..=max_level` for `(0, inf)`, without early exit.
pub fn level_estimates_0inf(
    f: impl Fn(f64) -> Complex64,
    max_level: usize,
) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    drive(
        Transform::ExpSinh0Inf,
        max_level.min(MAX_LEVEL),
        &|n: &Node| f(n.x),
        |_, e, _, _| {
            out.push(e);
            false
        },
    )?;
    Ok(out)
}
