//! Double-exponential quadrature on integrands with endpoint singularities.
//! Prints the estimate at every refinement level.

use malmsten::quadrature::{integrate_01, integrate_0inf, level_estimates_01};
use malmsten::{ComplexValue, QuadratureSettings, Transform, UnitPoint};

fn re(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

type Case = (&'static str, fn(UnitPoint) -> ComplexValue, f64);

fn main() {
    let unit = QuadratureSettings::default();
    let half_line = unit.with_transform(Transform::ExpSinh0Inf);

    let cases: [Case; 3] = [
        ("ln(1/y)", |p| re(p.ln_inv()), 1.0),
        (
            "ln(1/y)^(-1/2)",
            |p| re(p.ln_inv().powf(-0.5)),
            std::f64::consts::PI.sqrt(),
        ),
        (
            "ln ln(1/y)",
            |p| re(p.ln_inv().ln()),
            -0.577_215_664_901_532_9,
        ),
    ];
    for (name, f, exact) in cases {
        let r = integrate_01(f, &unit).unwrap();
        println!(
            "∫_0^1 {name:<15} = {:.16}  err {:.1e} (est {:.1e}), {} nodes",
            r.value.re,
            (r.value.re - exact).abs(),
            r.err_estimate,
            r.work
        );
        let levels = level_estimates_01(f, 6).unwrap();
        let diffs: Vec<String> = levels
            .windows(2)
            .map(|w| format!("{:.1e}", (w[1] - w[0]).norm()))
            .collect();
        println!("    level differences: {}", diffs.join(" "));
    }

    let r = integrate_0inf(|u| re(u.powf(-0.75) * (-u).exp()), &half_line).unwrap();
    println!(
        "∫_0^∞ u^(-3/4) e^(-u) du = {:.16} ({} nodes)",
        r.value.re, r.work
    );
}
