use malmsten::gamma::{cos_half_pi, gamma, log_gamma, sin_half_pi};
use malmsten::identities::{IdentityCheck, IdentityId};
use malmsten::quadrature::integrate_01;
use malmsten::series::{self, FunctionId};
use malmsten::{format, ParamGrid, QuadratureSettings, SeriesSettings, VerificationReport};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::{LN_2, PI};

fn cz(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gamma_recurrence(re in 0.5f64..10.0, im in -10.0f64..10.0) {
        let z = cz(re, im);
        let g1 = gamma(z + 1.0).unwrap();
        let rel = (g1 - z * gamma(z).unwrap()).norm() / g1.norm();
        prop_assert!(rel <= 1e-12, "z={z} rel={rel:e}");
    }

    #[test]
    fn gamma_reflection(x in -5.0f64..0.5) {
        prop_assume!((x - x.round()).abs() > 1e-6);
        let (s, _) = malmsten::gamma::sin_cos_pi(x);
        let prod = gamma(cz(x, 0.0)).unwrap() * gamma(cz(1.0 - x, 0.0)).unwrap() * s;
        prop_assert!((prod - PI).norm() / PI <= 1e-10, "x={x}");
    }

    #[test]
    fn log_gamma_conjugate_symmetry(re in 1e-3f64..40.0, im in -40.0f64..40.0) {
        let z = cz(re, im);
        let a = log_gamma(z.conj()).unwrap();
        let b = log_gamma(z).unwrap().conj();
        prop_assert!((a.re - b.re).abs() <= 1e-13 && (a.im - b.im).abs() <= 1e-13, "z={z}");
    }

    #[test]
    fn half_period_pythagoras_near_axis(re in -20.0f64..20.0, im in -1.0f64..1.0) {
        let s = cz(re, im);
        let (c, sn) = (cos_half_pi(s), sin_half_pi(s));
        prop_assert!((c * c + sn * sn - 1.0).norm() <= 1e-13, "s={s}");
    }

    #[test]
    fn half_period_pythagoras_scaled(re in -20.0f64..20.0, im in -5.0f64..5.0) {
        // |cos|^2 + |sin|^2 grows like cosh(pi Im s), and so does the
        // rounding in c^2 + s^2
        let s = cz(re, im);
        let (c, sn) = (cos_half_pi(s), sin_half_pi(s));
        let scale = c.norm_sqr() + sn.norm_sqr();
        prop_assert!((c * c + sn * sn - 1.0).norm() <= 1e-13 * scale, "s={s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn lambda_eta_relation(re in 1.2f64..6.0, im in -10.0f64..10.0) {
        let cfg = SeriesSettings::default();
        let s = cz(re, im);
        let direct = series::lambda(s, &cfg).unwrap().value;
        let relation = series::lambda_from_eta(s, &cfg).unwrap().value;
        prop_assert!((direct - relation).norm() <= 1e-12 * direct.norm().max(1.0), "s={s}");
    }

    #[test]
    fn conjugate_symmetry(re in -4.0f64..5.0, im in 0.01f64..8.0, which in 0usize..4) {
        let s = cz(re, im);
        // keep away from s = 1 and the removable line Re s = 1
        prop_assume!((s.re - 1.0).abs() > 0.05);
        let id = FunctionId::ALL[which];
        let cfg = SeriesSettings::default();
        let up = series::evaluate(id, s, &cfg).unwrap().value;
        let down = series::evaluate(id, s.conj(), &cfg).unwrap().value;
        prop_assert!((down - up.conj()).norm() <= 1e-12 * up.norm().max(1.0), "{id} s={s}");
    }

    #[test]
    fn quadrature_is_linear(
        c0 in -2.0f64..2.0, c1 in -2.0f64..2.0, k in 0.5f64..6.0,
        alpha in -3.0f64..3.0, beta in -3.0f64..3.0,
    ) {
        let cfg = QuadratureSettings::default();
        let f = |y: f64| c0 + c1 * y * y;
        let g = |y: f64| (k * y).cos() + y.sqrt();
        let i_f = integrate_01(|p| cz(f(p.y), 0.0), &cfg).unwrap();
        let i_g = integrate_01(|p| cz(g(p.y), 0.0), &cfg).unwrap();
        let i_h = integrate_01(|p| cz(alpha * f(p.y) + beta * g(p.y), 0.0), &cfg).unwrap();
        let combined = alpha * i_f.value + beta * i_g.value;
        let budget = alpha.abs() * i_f.err_estimate + beta.abs() * i_g.err_estimate + i_h.err_estimate;
        prop_assert!((i_h.value - combined).norm() <= budget);
    }
}

proptest! {
    #[test]
    fn residual_bookkeeping(
        lr in -1e3f64..1e3, li in -1e3f64..1e3, dr in -1e-6f64..1e-6, di in -1e-6f64..1e-6,
        tol in 1e-12f64..1e-6,
    ) {
        let lhs = cz(lr, li);
        let rhs = lhs + cz(dr, di);
        let row = IdentityCheck::from_sides(IdentityId::Vardi, Vec::new(), lhs, rhs, tol);
        let abs = (lhs - rhs).norm();
        let rel = abs / lhs.norm().max(rhs.norm()).max(1e-300);
        prop_assert_eq!(row.abs_err, Some(abs));
        prop_assert_eq!(row.rel_err, Some(rel));
        prop_assert_eq!(row.pass, abs <= tol || rel <= tol);
    }

    #[test]
    fn report_json_round_trips_bit_for_bit(
        values in proptest::collection::vec(
            (any::<f64>(), any::<f64>(), any::<f64>(), any::<f64>()), 1..8),
    ) {
        let finite = |x: f64| if x.is_finite() { x } else { 0.5 };
        let rows: Vec<_> = values
            .iter()
            .map(|&(a, b, c, d)| {
                IdentityCheck::from_sides(
                    IdentityId::Kummer,
                    Vec::new(),
                    cz(finite(a), finite(b)),
                    cz(finite(c), finite(d)),
                    1e-9,
                )
            })
            .filter(|r| r.abs_err.is_some_and(f64::is_finite))
            .collect();
        let report = VerificationReport::new(ParamGrid::default(), rows);
        let back = VerificationReport::from_json(&report.to_json()).unwrap();
        for (x, y) in report.rows.iter().zip(&back.rows) {
            let (xl, yl) = (x.lhs.unwrap(), y.lhs.unwrap());
            prop_assert_eq!(xl.re.to_bits(), yl.re.to_bits());
            prop_assert_eq!(xl.im.to_bits(), yl.im.to_bits());
            prop_assert_eq!(x.rel_err.unwrap().to_bits(), y.rel_err.unwrap().to_bits());
        }
        prop_assert_eq!(back, report);
    }

    #[test]
    fn complex_text_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
        let z = cz(re, im);
        let text = format::complex(z, 17);
        prop_assert_eq!(format::parse_complex(&text).unwrap(), z, "{}", text);
    }
}

#[test]
fn eta_prefactor_fixed_point() {
    let p = series::eta_fe_prefactor(cz(0.5, 0.0)).unwrap();
    assert!((p - 1.0).norm() <= 1e-13);
    // the removable zeta points stay explicit errors
    assert!(series::zeta(cz(1.0, -2.0 * PI / LN_2), &SeriesSettings::default()).is_err());
}
