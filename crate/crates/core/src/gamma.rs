//! Complex Gamma and log-Gamma, plus half-period trigonometric factors with
//! exact zeros at integer arguments.
//!
//! `log_gamma` is the principal branch: analytic on the plane cut along the
//! non-positive real axis and real on the positive real axis. Arguments with
//! `Re z >= 0.5` are shifted up and fed to a Stirling series; the rest go
//! through the reflection formula with a branch-tracked `log sin(pi z)`.
//! Points on the negative real axis take the limit from the upper half plane.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::cmath;
use crate::error::{Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

/// Largest `x` with `exp(x)` finite.
const LN_F64_MAX: f64 = 709.782_712_893_384;

/// Stirling shifts until `Re z` reaches this value.
const STIRLING_MIN_RE: f64 = 15.0;

/// B_{2k} / (2k (2k-1)), k = 1..=8. Truncation error at |z| >= 15 is below 1e-19.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// n! for n = 0..=20.
const FACTORIAL: [f64; 21] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362_880.0,
    3_628_800.0,
    39_916_800.0,
    479_001_600.0,
    6_227_020_800.0,
    87_178_291_200.0,
    1_307_674_368_000.0,
    20_922_789_888_000.0,
    355_687_428_096_000.0,
    6_402_373_705_728_000.0,
    121_645_100_408_832_000.0,
    2_432_902_008_176_640_000.0,
];

fn is_gamma_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Returns `n` when `z` is a positive integer small enough for the factorial table.
fn small_positive_integer(z: Complex64) -> Option<usize> {
    (z.im == 0.0 && z.re >= 1.0 && z.re <= 21.0 && z.re.fract() == 0.0).then_some(z.re as usize)
}

/// `(sin(pi x), cos(pi x))` with the reduction modulo 2 done exactly.
///
/// Exact zeros and unit values at integers and half-integers.
pub fn sin_cos_pi(x: f64) -> (f64, f64) {
    if !x.is_finite() {
        return (f64::NAN, f64::NAN);
    }
    let r = x - 2.0 * (0.5 * x).round();
    let q = (2.0 * r).round();
    let t = r - 0.5 * q;
    let (s, c) = (PI * t).sin_cos();
    match (q as i32).rem_euclid(4) {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `sin(pi z)` for complex `z`.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi(z.re);
    if z.im == 0.0 {
        return Complex64::new(s, 0.0);
    }
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `cos(pi z)` for complex `z`.
pub fn cos_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi(z.re);
    if z.im == 0.0 {
        return Complex64::new(c, 0.0);
    }
    let y = PI * z.im;
    Complex64::new(c * y.cosh(), -s * y.sinh())
}

/// `cos(pi s / 2)`; exactly zero at odd real integers.
pub fn cos_half_pi(s: Complex64) -> Complex64 {
    cos_pi(s * 0.5)
}

/// `sin(pi s / 2)`; exactly zero at even real integers.
pub fn sin_half_pi(s: Complex64) -> Complex64 {
    sin_pi(s * 0.5)
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    for &c in STIRLING_COEFFS.iter().rev() {
        series = series * inv2 + c;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series * inv
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < STIRLING_MIN_RE {
        shift += z.ln();
        z += 1.0;
    }
    stirling(z) - shift
}

/// Branch of `log(sin(pi z))` for `Im z >= 0` that is analytic in the upper
/// half plane and real on `Re z = 1/2`.
fn log_sin_pi_upper(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
    let w = (i * 2.0 * PI * z).exp();
    let tracked = -i * PI * z + cmath::ln_1p(-w) - LN_2 + i * (0.5 * PI);
    if z.im > 3.0 {
        // |w| < 7e-9: the tracked form is already cancellation free
        return tracked;
    }
    let principal = sin_pi(z).ln();
    let k = ((tracked.im - principal.im) / (2.0 * PI)).round();
    principal + i * (2.0 * PI * k)
}

/// Principal log-Gamma.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if z.re.is_nan() || z.im.is_nan() {
        return Ok(Complex64::new(f64::NAN, f64::NAN));
    }
    if is_gamma_pole(z) {
        return Err(Error::gamma_pole(z));
    }
    if let Some(n) = small_positive_integer(z) {
        return Ok(Complex64::new(FACTORIAL[n - 1].ln(), 0.0));
    }
    if z.im == 0.0 && (0.5..=DIRECT_MAX).contains(&z.re) {
        return Ok(Complex64::new(gamma_pos_direct(z.re).ln(), 0.0));
    }
    if z.re >= 0.5 {
        return Ok(log_gamma_right(z));
    }
    if z.im < 0.0 {
        return log_gamma(z.conj()).map(|v| v.conj());
    }
    let reflected = log_gamma_right(1.0 - z);
    Ok(LN_PI - log_sin_pi_upper(z) - reflected)
}

/// `Gamma(x)` for `0.5 <= x <= 140` without going through a logarithm:
/// shift up by a product, then Stirling with `pow`.
fn gamma_pos_direct(x: f64) -> f64 {
    let mut y = x;
    let mut prod = 1.0;
    while y < STIRLING_MIN_RE {
        prod *= y;
        y += 1.0;
    }
    let inv = y.recip();
    let inv2 = inv * inv;
    let series = STIRLING_COEFFS
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * inv2 + c)
        * inv;
    // y^(y - 1/2) split in two so that y up to ~140 stays finite
    let half = y.powf(0.5 * y - 0.25);
    (2.0 * PI).sqrt() * half * ((-y).exp() * half) * series.exp() / prod
}

const DIRECT_MAX: f64 = 140.0;

fn real_gamma(x: f64) -> Result<f64> {
    if let Some(n) = small_positive_integer(Complex64::new(x, 0.0)) {
        return Ok(FACTORIAL[n - 1]);
    }
    if (0.5..=DIRECT_MAX).contains(&x) {
        return Ok(gamma_pos_direct(x));
    }
    if x < 0.5 && 1.0 - x <= DIRECT_MAX {
        let (s, _) = sin_cos_pi(x);
        return Ok(PI / (s * gamma_pos_direct(1.0 - x)));
    }
    let (sign, log_abs) = if x >= 0.5 {
        (1.0, log_gamma_right(Complex64::new(x, 0.0)).re)
    } else {
        let (s, _) = sin_cos_pi(x);
        let log_abs = LN_PI - s.abs().ln() - log_gamma_right(Complex64::new(1.0 - x, 0.0)).re;
        (s.signum(), log_abs)
    };
    if log_abs > LN_F64_MAX {
        return Err(Error::Overflow {
            log_magnitude: log_abs,
        });
    }
    Ok(sign * log_abs.exp())
}

/// Gamma function, `exp(log_gamma(z))`.
///
/// Real arguments return a value with an exactly zero imaginary part.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_gamma_pole(z) {
        return Err(Error::gamma_pole(z));
    }
    if z.im == 0.0 {
        return real_gamma(z.re).map(|v| Complex64::new(v, 0.0));
    }
    let lg = log_gamma(z)?;
    if lg.re > LN_F64_MAX {
        return Err(Error::Overflow {
            log_magnitude: lg.re,
        });
    }
    Ok(lg.exp())
}

/// Real convenience wrapper around [`log_gamma`] for `x > 0`.
pub fn ln_gamma_pos(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma_pos needs x > 0, got {x}")));
    }
    log_gamma(Complex64::new(x, 0.0)).map(|v| v.re)
}
