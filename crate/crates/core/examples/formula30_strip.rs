//! Both sides of the `formula30` identity over the strip 0 < a < pi, 0 < s < 1, and the
//! limit a -> 0 that leads to the second identity.

use malmsten::identities::{self, CheckSettings};
use malmsten::ComplexValue;

fn main() {
    let cfg = CheckSettings::default();
    println!(
        "{:>5} {:>5} {:>22} {:>22} {:>9}",
        "a", "s", "lhs", "rhs", "abs_err"
    );
    for a in [0.3, 1.0, 2.0, 3.0] {
        for s in [0.2, 0.5, 0.8] {
            let row = identities::formula30_check(a, ComplexValue::new(s, 0.0), &cfg).unwrap();
            println!(
                "{a:>5} {s:>5} {:>22.16} {:>22.16} {:>9.1e}",
                row.lhs.unwrap().re,
                row.rhs.unwrap().re,
                row.abs_err.unwrap()
            );
        }
    }

    // complex s inside the strip
    let s = ComplexValue::new(0.4, 1.5);
    let row = identities::formula30_check(1.2, s, &cfg).unwrap();
    println!(
        "a = 1.2, s = 0.4+1.5i: |lhs - rhs| = {:.1e}",
        row.abs_err.unwrap()
    );

    for s in [0.25, 0.5, 0.75] {
        let row = identities::limit_identity_check(ComplexValue::new(s, 0.0), &cfg).unwrap();
        println!(
            "limit identity s = {s}: {:.16} vs {:.16}",
            row.lhs.unwrap().re,
            row.rhs.unwrap().re
        );
    }
}
