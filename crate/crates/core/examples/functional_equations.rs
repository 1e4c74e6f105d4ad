//! Residuals of the eta and beta functional equations along the real line,
//! plus the trivial zeros the trig prefactors force.

use malmsten::identities::{beta_fe_check, eta_fe_check, CheckSettings};
use malmsten::series;
use malmsten::ComplexValue;

fn main() {
    let cfg = CheckSettings::default();
    println!(
        "{:>6}  {:>12}  {:>12}",
        "s", "eta residual", "beta residual"
    );
    for k in -8..=9 {
        let s = ComplexValue::new(0.5 * f64::from(k), 0.0);
        let eta = eta_fe_check(s, &cfg);
        let beta = beta_fe_check(s, &cfg);
        let show = |r: malmsten::Result<malmsten::IdentityCheck>| match r {
            Ok(row) => format!("{:>12.2e}", row.abs_err.unwrap_or(f64::NAN)),
            Err(e) if e.is_domain_error() => format!("{:>12}", "singular"),
            Err(e) => format!("{e}"),
        };
        println!("{:>6}  {}  {}", s.re, show(eta), show(beta));
    }

    let s = series::SeriesSettings::default();
    for n in 1..=4 {
        let x = -2.0 * f64::from(n);
        let eta = series::eta(ComplexValue::new(x, 0.0), &s).unwrap().value;
        let beta = series::beta(ComplexValue::new(x + 1.0, 0.0), &s)
            .unwrap()
            .value;
        println!("eta({x}) = {}   beta({}) = {}", eta.re, x + 1.0, beta.re);
    }
}
