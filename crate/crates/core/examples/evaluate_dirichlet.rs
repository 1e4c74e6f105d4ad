//! Evaluate eta, lambda, beta and zeta at a handful of points and show which
//! path each value took.

use malmsten::series::{self, FunctionId};
use malmsten::{format, ComplexValue, SeriesSettings};

fn main() {
    let cfg = SeriesSettings::default();
    let points = [
        ComplexValue::new(2.0, 0.0),
        ComplexValue::new(0.5, 14.134_725),
        ComplexValue::new(-1.5, 0.0),
        ComplexValue::new(-3.0, 2.0),
    ];
    println!(
        "{:<7} {:<22} {:<44} {:<20} {:>5}",
        "f", "s", "value", "method", "work"
    );
    for id in FunctionId::ALL {
        for &s in &points {
            match series::evaluate(id, s, &cfg) {
                Ok(r) => println!(
                    "{:<7} {:<22} {:<44} {:<20} {:>5}",
                    id,
                    format::complex(s, 8),
                    format::complex(r.value, 15),
                    r.method,
                    r.work
                ),
                Err(e) => println!("{id:<7} {:<22} error: {e}", format::complex(s, 8)),
            }
        }
    }

    // zeta at its pole, and at a point where 1 - 2^(1-s) vanishes
    let removable = ComplexValue::new(1.0, 2.0 * std::f64::consts::PI / std::f64::consts::LN_2);
    for s in [ComplexValue::new(1.0, 0.0), removable] {
        println!(
            "zeta({}) -> {}",
            format::complex(s, 6),
            series::zeta(s, &cfg).unwrap_err()
        );
    }
}
