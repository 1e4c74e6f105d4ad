//! Cancellation-safe complex elementary functions that `num-complex` does not
//! provide.

use num_complex::Complex64;

/// `exp(z) - 1` without cancellation for small `|z|`.
pub fn expm1(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    if y == 0.0 {
        return Complex64::new(x.exp_m1(), 0.0);
    }
    // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    let half_sin = (0.5 * y).sin();
    let re = x.exp_m1() * y.cos() - 2.0 * half_sin * half_sin;
    let im = x.exp() * y.sin();
    Complex64::new(re, im)
}

/// Principal `ln(1 + u)`, accurate for small `|u|`.
pub fn ln_1p(u: Complex64) -> Complex64 {
    // |1+u|^2 = 1 + (2 Re u + |u|^2)
    let re = 0.5 * (2.0 * u.re + u.norm_sqr()).ln_1p();
    let im = u.im.atan2(1.0 + u.re);
    Complex64::new(re, im)
}

/// `base^s` for a positive real base given through its natural logarithm.
#[inline]
pub fn pow_from_ln(ln_base: f64, s: Complex64) -> Complex64 {
    (s * ln_base).exp()
}

/// `base^s - 1` for a positive real base, accurate when `s * ln_base` is small.
#[inline]
pub fn pow_m1_from_ln(ln_base: f64, s: Complex64) -> Complex64 {
    expm1(s * ln_base)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm1_small_arguments() {
        let z = Complex64::new(1e-10, 2e-10);
        let e = expm1(z);
        // exp(z) - 1 = z + z^2/2 + ...
        let series = z + z * z / 2.0;
        assert!((e - series).norm() < 1e-25);
    }

    #[test]
    fn expm1_matches_exp_for_large_arguments() {
        let z = Complex64::new(1.3, -2.1);
        let e = expm1(z);
        let direct = z.exp() - 1.0;
        assert!((e - direct).norm() < 1e-14);
    }

    #[test]
    fn ln_1p_small_and_large() {
        let u = Complex64::new(-3e-12, 1e-12);
        let l = ln_1p(u);
        assert!((l - (u - u * u / 2.0)).norm() < 1e-26);
        let u = Complex64::new(0.7, -1.9);
        assert!((ln_1p(u) - (u + 1.0).ln()).norm() < 1e-15);
    }
}
