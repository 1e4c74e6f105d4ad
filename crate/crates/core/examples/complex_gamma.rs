//! Principal log-Gamma across the plane: continuity through the left half
//! plane, reflection, and overflow reporting.

use malmsten::gamma::{gamma, log_gamma};
use malmsten::{format, ComplexValue};

fn main() {
    for z in [
        ComplexValue::new(0.5, 0.0),
        ComplexValue::new(2.0, 1.0),
        ComplexValue::new(-2.5, 0.3),
        ComplexValue::new(0.7, 45.0),
        ComplexValue::new(-0.5, 0.0),
    ] {
        let lg = log_gamma(z).unwrap();
        println!(
            "lnGamma({}) = {}",
            format::complex(z, 6),
            format::complex(lg, 15)
        );
    }

    // Im lnGamma decreases smoothly through the reflection region instead of
    // jumping by 2 pi
    let track: Vec<String> = (0..=8)
        .map(|k| {
            let z = ComplexValue::new(-4.0 + f64::from(k), 0.1);
            format!("{:.3}", log_gamma(z).unwrap().im)
        })
        .collect();
    println!("Im lnGamma(x + 0.1i), x = -4..4: {}", track.join(" "));

    println!(
        "Gamma(170.5) = {:e}",
        gamma(ComplexValue::new(170.5, 0.0)).unwrap().re
    );
    println!(
        "Gamma(200)   -> {}",
        gamma(ComplexValue::new(200.0, 0.0)).unwrap_err()
    );
    println!(
        "Gamma(-3)    -> {}",
        gamma(ComplexValue::new(-3.0, 0.0)).unwrap_err()
    );
}
