//! Oracles shared by the integration tests. None of them call into the
//! library's series or quadrature code.
#![allow(dead_code)]

use num_complex::Complex64;

/// Trapezoid rule for `∫_R g(v) dv` on `[lo, hi]` with step `h`.
///
/// Meant for integrands that were pushed onto the real line by `u = e^v`
/// and decay at both ends, where the plain trapezoid rule converges
/// geometrically in `1/h`.
pub fn line_trapezoid(g: impl Fn(f64) -> Complex64, lo: f64, hi: f64, h: f64) -> Complex64 {
    let n = ((hi - lo) / h).ceil() as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let w = if k == 0 || k == n { 0.5 } else { 1.0 };
        let term = g(lo + k as f64 * h) * w - comp;
        let t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    acc * h
}

/// `∫_0^∞ f(u) du` through `u = e^v`.
pub fn half_line(f: impl Fn(f64) -> Complex64, lo: f64, hi: f64, h: f64) -> Complex64 {
    line_trapezoid(|v| f(v.exp()) * v.exp(), lo, hi, h)
}

/// `∫_0^1 F(ln(1/y), y) dy` through `y = exp(-e^v)`; the callback receives
/// `(v, y)` with `ln(1/y) = e^v`.
pub fn unit_interval_loglog(
    f: impl Fn(f64, f64) -> Complex64,
    lo: f64,
    hi: f64,
    h: f64,
) -> Complex64 {
    line_trapezoid(
        |v| {
            let t = v.exp();
            let y = (-t).exp();
            f(v, y) * (t * y)
        },
        lo,
        hi,
        h,
    )
}

/// Euler-style repeated averaging of partial sums of `Σ_{k<n} term(k)`.
pub fn averaged_partial_sums(term: impl Fn(usize) -> Complex64, n: usize) -> Complex64 {
    let mut sums = Vec::with_capacity(n);
    let mut s = Complex64::new(0.0, 0.0);
    for k in 0..n {
        s += term(k);
        sums.push(s);
    }
    while sums.len() > 1 {
        sums = sums.windows(2).map(|w| (w[0] + w[1]) * 0.5).collect();
    }
    sums[0]
}

/// Abel sum `lim_{x→1-} Σ_{n≥1} (-1)^{n+1} n^p x^n` for integer `p ≥ 0`,
/// by polynomial extrapolation in `h = 1 - x`.
pub fn abel_eta_at_negative_integer(p: i32) -> f64 {
    let hs = [0.008, 0.004, 0.002, 0.001, 0.0005];
    let values: Vec<f64> = hs
        .iter()
        .map(|&h| {
            let x: f64 = 1.0 - h;
            let mut acc = 0.0;
            let mut xn = 1.0;
            let mut n = 1u32;
            loop {
                xn *= x;
                let t = f64::from(n).powi(p) * xn;
                if n > 100 && t < 1e-20 {
                    break;
                }
                acc += if n % 2 == 1 { t } else { -t };
                n += 1;
            }
            acc
        })
        .collect();
    neville_at_zero(&hs, &values)
}

/// Value at 0 of the interpolating polynomial through `(xs[i], ys[i])`.
pub fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = xs.len();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i]);
        }
    }
    p[0]
}

/// Neumaier-compensated sum.
pub fn compensated_sum(terms: impl Iterator<Item = f64>) -> f64 {
    let (mut s, mut c) = (0.0f64, 0.0f64);
    for x in terms {
        let t = s + x;
        if s.abs() >= x.abs() {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }
    s + c
}

/// `Σ_{n≥1} n^{-s}` for real `s > 1`: `N-1` explicit terms plus the
/// midpoint-rule tail `∫_{N-1/2}^∞ x^{-s} dx`.
pub fn zeta_direct(s: f64, n: usize) -> f64 {
    let head = compensated_sum((1..n).rev().map(|k| (k as f64).powf(-s)));
    head + (n as f64 - 0.5).powf(1.0 - s) / (s - 1.0)
}

/// `Σ_{n≥0} (2n+1)^{-s}` for real `s > 1`, same tail treatment.
pub fn lambda_direct(s: f64, n: usize) -> f64 {
    let head = compensated_sum((0..n).rev().map(|k| (2.0 * k as f64 + 1.0).powf(-s)));
    head + (2.0 * n as f64).powf(1.0 - s) / (2.0 * (s - 1.0))
}

/// Partial sum `Σ_{n=1}^{N} (-1)^{n+1} n^{-s}` with its alternating tail bound.
pub fn eta_partial(s: f64, n: usize) -> (f64, f64) {
    let sum = compensated_sum((1..=n).rev().map(|k| {
        let t = (k as f64).powf(-s);
        if k % 2 == 1 {
            t
        } else {
            -t
        }
    }));
    (sum, (n as f64 + 1.0).powf(-s))
}

/// `Gamma(z)` for `Re z > 0` from `∫_R exp(z v - e^v) dv`.
pub fn gamma_integral(z: Complex64) -> Complex64 {
    let lo = -(40.0 / z.re).max(40.0);
    line_trapezoid(|v| (z * v - v.exp()).exp(), lo, 6.0, 1.0 / 64.0)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn r(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
