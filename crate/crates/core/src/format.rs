//! Text conversion for complex arguments and results.
//!
//! Complex numbers use the shell-safe syntax `RE`, `RE+IMi` or `RE-IMi`
//! with no embedded spaces.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parses `"RE"`, `"RE+IMi"`, `"RE-IMi"` or a pure imaginary `"IMi"`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t = text.trim();
    let bad = || Error::InvalidSettings(format!("cannot parse complex number {text:?}"));
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        let re: f64 = t.parse().map_err(|_| bad())?;
        return Ok(Complex64::new(re, 0.0));
    };

    // split at the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));

    let parse_im = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse().map_err(|_| bad()),
        }
    };
    match split {
        Some(i) => {
            let re: f64 = body[..i].parse().map_err(|_| bad())?;
            let im = parse_im(&body[i..])?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, parse_im(body)?)),
    }
}

/// Formats `x` with `digits` significant digits, using positional notation for
/// moderate exponents and scientific notation otherwise.
pub fn real(x: f64, digits: usize) -> String {
    let digits = digits.clamp(1, 17);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..16).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{:.*e}", digits - 1, x);
        match s.split_once('e') {
            Some((mantissa, e)) => format!("{}e{}", trim_zeros(mantissa.to_string()), e),
            None => s,
        }
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}

/// Formats a complex value as `RE`, `RE+IMi` or `RE-IMi`.
pub fn complex(z: Complex64, digits: usize) -> String {
    if z.im == 0.0 {
        return real(z.re + 0.0, digits);
    }
    let re = real(z.re + 0.0, digits);
    let im = real(z.im.abs(), digits);
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_supported_forms() {
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("-3.5").unwrap(), Complex64::new(-3.5, 0.0));
        assert_eq!(parse_complex("0.5+0.7i").unwrap(), Complex64::new(0.5, 0.7));
        assert_eq!(parse_complex("2-1i").unwrap(), Complex64::new(2.0, -1.0));
        assert_eq!(parse_complex("-1-1i").unwrap(), Complex64::new(-1.0, -1.0));
        assert_eq!(
            parse_complex("1e-3+2.5e1i").unwrap(),
            Complex64::new(1e-3, 25.0)
        );
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("1+i").unwrap(), Complex64::new(1.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn rejects_garbage() {
        for t in ["", "abc", "1 + 2i", "1+2j", "1++2i", "--1"] {
            assert!(parse_complex(t).is_err(), "{t}");
        }
    }

    #[test]
    fn significant_digits() {
        assert_eq!(real(std::f64::consts::LN_2, 15), "0.693147180559945");
        assert_eq!(real(0.25, 15), "0.25");
        assert_eq!(real(-24.0, 15), "-24");
        assert_eq!(real(1.5e-9, 3), "1.5e-9");
        assert_eq!(real(-0.0, 15), "0");
        assert_eq!(complex(Complex64::new(1.0, -0.5), 15), "1-0.5i");
    }
}
