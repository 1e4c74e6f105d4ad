//! The log-log integrals with log-Gamma closed forms.

use malmsten::identities::{self, CheckSettings};
use std::f64::consts::PI;

fn main() {
    let cfg = CheckSettings::default();
    let q = identities::vardi_integral(&cfg).unwrap();
    let closed = identities::vardi_closed_form().unwrap();
    println!("∫_0^1 ln ln(1/x)/(1+x²) dx");
    println!("  quadrature  {:.17}  ({} nodes)", q.value.re, q.work);
    println!("  closed form {closed:.17}");

    println!("\n∫_0^1 ln ln(1/y)/(1+2y cos a+y²) dy");
    for k in 1..=9 {
        let a = PI * f64::from(k) / 10.0;
        let q = identities::kummer_integral(a, &cfg).unwrap().value.re;
        let c = identities::kummer_closed_form(a).unwrap();
        println!(
            "  a = {:.4}: {q:>20.16}  {c:>20.16}  {:.1e}",
            a,
            (q - c).abs()
        );
    }
}
