//! Acceptance suite: one line per criterion, non-zero exit if any fails.

#![allow(clippy::excessive_precision)]

mod common;

use std::process::{Command, ExitCode};

use common::{
    abel_eta_at_negative_integer, averaged_partial_sums, eta_partial, r, unit_interval_loglog,
};
use malmsten::identities::{self as id, CheckSettings, IdentityId, ParamGrid};
use malmsten::series;
use malmsten::{SeriesSettings, VerificationReport};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const VARDI_TOL: f64 = 1e-10;
const FE_TOL: f64 = 1e-10;
const FE_SPECIAL_TOL: f64 = 1e-11;
const ABEL_ORACLE_TOL: f64 = 1e-9;
const FORMULA30_TOL: f64 = 1e-8;
const LIMIT_TOL: f64 = 1e-8;
const GAMMA_INTEGRAL_TOL: f64 = 1e-10;
const LAMBDA_ETA_TOL: f64 = 1e-12;
const KUMMER_TOL: f64 = 1e-9;
const KUMMER_VARDI_TOL: f64 = 1e-10;
const FIXED_POINT_TOL: f64 = 1e-13;
/// Allowance for rounding in a compensated 1e6-term sum on top of the tail bound.
const DIRECT_SUM_ROUNDING: f64 = 1e-15;

const CATALAN: f64 = 0.915_965_594_177;
const CATALAN_TOL: f64 = 1e-11;
const DIRECT_TERMS: usize = 1_000_000;
const SEED: u64 = 0x6d61_6c6d;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn cfg() -> CheckSettings {
    CheckSettings::default()
}

fn grid_rows(ids: &[IdentityId]) -> VerificationReport {
    id::run_grid(&ParamGrid::default(), ids, &cfg()).expect("default grid is valid")
}

/// Every row present, none excluded, each `abs_err` within `tol`.
fn all_rows_within(report: &VerificationReport, tol: f64) -> (bool, f64, usize) {
    let worst = report
        .rows
        .iter()
        .map(|r| r.abs_err.unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    let ok = !report.rows.is_empty() && report.rows.iter().all(|r| !r.excluded) && worst <= tol;
    (ok, worst, report.rows.len())
}

fn vardi() -> Outcome {
    let oracle = unit_interval_loglog(|v, y| r(v / (1.0 + y * y)), -40.0, 4.5, 1.0 / 64.0).re;
    let row = id::vardi_check(&cfg()).unwrap();
    let abs = row.abs_err.unwrap();
    let vs_oracle = (row.lhs.unwrap().re - oracle).abs();
    outcome(
        abs <= VARDI_TOL && vs_oracle <= VARDI_TOL,
        format!("abs_err {abs:.2e}, |quadrature - oracle| {vs_oracle:.2e}"),
    )
}

fn eta_fe() -> Outcome {
    let report = grid_rows(&[IdentityId::EtaFe]);
    let (ok, worst, n) = all_rows_within(&report, FE_TOL);
    let s = SeriesSettings::default();
    let m1 = series::eta(r(-1.0), &s).unwrap().value;
    let m2 = series::eta(r(-2.0), &s).unwrap().value;
    let abel = abel_eta_at_negative_integer(1);
    let special = (m1 - 0.25).norm() <= FE_SPECIAL_TOL
        && (m1.re - abel).abs() <= ABEL_ORACLE_TOL
        && m2 == r(0.0);
    outcome(
        ok && special,
        format!(
            "{n} rows, worst {worst:.2e}; eta(-1) = {}, eta(-2) = {}",
            m1.re, m2.re
        ),
    )
}

fn beta_fe() -> Outcome {
    let report = grid_rows(&[IdentityId::BetaFe]);
    let (ok, worst, n) = all_rows_within(&report, FE_TOL);
    let s = SeriesSettings::default();
    let b0 = series::beta(r(0.0), &s).unwrap().value;
    let b2 = series::beta(r(2.0), &s).unwrap().value;
    let oracle = averaged_partial_sums(
        |k| r(if k % 2 == 0 { 1.0 } else { -1.0 } / (2.0 * k as f64 + 1.0).powi(2)),
        60,
    );
    let special = (b0 - 0.5).norm() <= FE_SPECIAL_TOL
        && (b2 - oracle).norm() <= CATALAN_TOL
        && (b2.re - CATALAN).abs() <= CATALAN_TOL;
    outcome(
        ok && special,
        format!(
            "{n} rows, worst {worst:.2e}; beta(0) = {}, beta(2) = {}",
            b0.re, b2.re
        ),
    )
}

fn rows_outcome(ids: &[IdentityId], tol: f64, expected: usize) -> Outcome {
    let report = grid_rows(ids);
    let (ok, worst, n) = all_rows_within(&report, tol);
    outcome(
        ok && n == expected,
        format!("{n} rows, worst abs_err {worst:.2e}"),
    )
}

fn lambda_eta() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let s_cfg = SeriesSettings::default();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let s = Complex64::new(rng.gen_range(1.2..6.0), rng.gen_range(-10.0..10.0));
        let direct = series::lambda(s, &s_cfg).unwrap().value;
        let relation = series::lambda_from_eta(s, &s_cfg).unwrap().value;
        worst = worst.max((direct - relation).norm());
    }
    outcome(
        worst <= LAMBDA_ETA_TOL,
        format!("50 points, worst residual {worst:.2e}"),
    )
}

fn kummer() -> Outcome {
    let report = grid_rows(&[IdentityId::Kummer]);
    let (ok, worst, n) = all_rows_within(&report, KUMMER_TOL);
    let vardi = id::vardi_check(&cfg()).unwrap().lhs.unwrap();
    let half = id::kummer_check(std::f64::consts::FRAC_PI_2, &cfg())
        .unwrap()
        .lhs
        .unwrap();
    let gap = (vardi - half).norm();
    outcome(
        ok && n == 5 && gap <= KUMMER_VARDI_TOL,
        format!("{n} rows, worst {worst:.2e}; |kummer(pi/2) - vardi| {gap:.2e}"),
    )
}

fn fixed_point() -> Outcome {
    let p = series::eta_fe_prefactor(r(0.5)).unwrap();
    let dev = (p - 1.0).norm();
    outcome(
        dev <= FIXED_POINT_TOL,
        format!("|prefactor(1/2) - 1| = {dev:.2e}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let s_cfg = SeriesSettings::default();
    let mut all = true;
    let mut worst_ratio = 0.0f64;
    for _ in 0..20 {
        let s: f64 = rng.gen_range(1.5..8.0);
        let acc = series::eta(r(s), &s_cfg).unwrap();
        let (partial, tail) = eta_partial(s, DIRECT_TERMS);
        let bound = tail + acc.err_estimate + DIRECT_SUM_ROUNDING;
        let gap = (acc.value.re - partial).abs();
        all &= acc.value.im == 0.0 && gap <= bound;
        worst_ratio = worst_ratio.max(gap / bound);
    }
    outcome(all, format!("20 points, worst gap/bound {worst_ratio:.2}"))
}

fn cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_malmsten");
    let verify = Command::new(bin).args(["verify", "all"]).output().unwrap();
    let text = String::from_utf8(verify.stdout).unwrap_or_default();
    let round_trip = VerificationReport::from_json(&text)
        .map(|rep| {
            let again = format!("{}\n", rep.to_json());
            let reparsed = VerificationReport::from_json(&again).unwrap();
            again == text && reparsed == rep && bit_equal(&rep, &reparsed)
        })
        .unwrap_or(false);
    let pole = Command::new(bin)
        .args(["eval", "zeta", "1"])
        .output()
        .unwrap();
    outcome(
        verify.status.code() == Some(0) && round_trip && pole.status.code() == Some(2),
        format!(
            "verify all exit {:?}, round trip {round_trip}; eval zeta 1 exit {:?}",
            verify.status.code(),
            pole.status.code()
        ),
    )
}

fn bit_equal(a: &VerificationReport, b: &VerificationReport) -> bool {
    let bits = |z: Option<Complex64>| z.map(|z| (z.re.to_bits(), z.im.to_bits()));
    a.rows.iter().zip(&b.rows).all(|(x, y)| {
        bits(x.lhs) == bits(y.lhs)
            && bits(x.rhs) == bits(y.rhs)
            && x.abs_err.map(f64::to_bits) == y.abs_err.map(f64::to_bits)
            && x.rel_err.map(f64::to_bits) == y.rel_err.map(f64::to_bits)
    })
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let default = ParamGrid::default();
    let strip = default.a_values.len() * default.s_values.len();
    let gamma_rows = default.s_values.len() * (1 + default.n_values.len());
    let criteria: Vec<Criterion> = vec![
        ("1 vardi integral", Box::new(vardi)),
        ("2 eta functional equation", Box::new(eta_fe)),
        ("3 beta functional equation", Box::new(beta_fe)),
        (
            "4 formula30 strip grid",
            Box::new(move || rows_outcome(&[IdentityId::Formula30], FORMULA30_TOL, strip)),
        ),
        (
            "5 limit identity",
            Box::new(|| rows_outcome(&[IdentityId::LimitIdentity], LIMIT_TOL, 5)),
        ),
        (
            "6 gamma integrals",
            Box::new(move || {
                rows_outcome(
                    &[IdentityId::GammaIntegralPower, IdentityId::GammaIntegralLog],
                    GAMMA_INTEGRAL_TOL,
                    gamma_rows,
                )
            }),
        ),
        ("7 lambda-eta relation", Box::new(lambda_eta)),
        ("8 kummer integral", Box::new(kummer)),
        ("9 prefactor fixed point", Box::new(fixed_point)),
        ("10 oracle equivalence", Box::new(oracle_equivalence)),
        ("11 cli contract", Box::new(cli)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {}", o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
