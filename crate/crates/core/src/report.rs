//! Verification reports and their JSON, CSV and table renderings.
//!
//! JSON layout: `{version, grid, rows[], overall_pass}`; complex numbers are
//! `{re, im}` objects. Floats are written in shortest round-trip form, so a
//! parsed report reproduces every number bit for bit.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::identities::{IdentityCheck, ParamGrid, ParamValue};

pub const TOOL_VERSION: &str = concat!("malmsten ", env!("CARGO_PKG_VERSION"));

pub const CSV_HEADER: &str = "identity_id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "version")]
    pub tool_version: String,
    #[serde(rename = "grid")]
    pub grid_meta: ParamGrid,
    pub rows: Vec<IdentityCheck>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(grid_meta: ParamGrid, rows: Vec<IdentityCheck>) -> Self {
        let overall_pass = rows.iter().all(|r| r.pass || r.excluded);
        Self {
            tool_version: TOOL_VERSION.to_string(),
            grid_meta,
            rows,
            overall_pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report contains only finite numbers")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        let opt = |v: Option<f64>| v.map(|x| format!("{x:?}")).unwrap_or_default();
        for row in &self.rows {
            let params = row
                .params
                .iter()
                .map(|p| format!("{}={}", p.name, param_text(&p.value)))
                .collect::<Vec<_>>()
                .join(";");
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                row.identity_id,
                params,
                opt(row.lhs.map(|z| z.re)),
                opt(row.lhs.map(|z| z.im)),
                opt(row.rhs.map(|z| z.re)),
                opt(row.rhs.map(|z| z.im)),
                opt(row.abs_err),
                opt(row.rel_err),
                row.pass
            );
        }
        out
    }

    pub fn to_table(&self, digits: usize) -> String {
        let mut lines = vec![[
            "identity".to_string(),
            "params".to_string(),
            "abs_err".to_string(),
            "rel_err".to_string(),
            "tolerance".to_string(),
            "status".to_string(),
        ]];
        let sci = |v: Option<f64>| v.map(|x| format!("{x:.2e}")).unwrap_or_else(|| "-".into());
        for row in &self.rows {
            let params = row
                .params
                .iter()
                .filter(|p| !matches!(p.value, ParamValue::Tag(_)))
                .map(|p| match &p.value {
                    ParamValue::Real(x) => {
                        format!("{}={}", p.name, crate::format::real(*x, digits))
                    }
                    ParamValue::Complex(z) => {
                        format!("{}={}", p.name, crate::format::complex(*z, digits))
                    }
                    other => format!("{}={}", p.name, param_text(other)),
                })
                .collect::<Vec<_>>()
                .join(" ");
            let status = if row.excluded {
                "excluded"
            } else if row.pass {
                "pass"
            } else {
                "FAIL"
            };
            lines.push([
                row.identity_id.to_string(),
                params,
                sci(row.abs_err),
                sci(row.rel_err),
                format!("{:.0e}", row.tolerance),
                status.to_string(),
            ]);
        }
        let widths: Vec<usize> = (0..6)
            .map(|i| lines.iter().map(|l| l[i].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for l in &lines {
            let cells: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        let passed = self.rows.iter().filter(|r| r.pass).count();
        let _ = writeln!(
            out,
            "{passed}/{} rows pass; overall {}",
            self.rows.len(),
            if self.overall_pass { "PASS" } else { "FAIL" }
        );
        out
    }
}

fn param_text(v: &ParamValue) -> String {
    match v {
        ParamValue::Integer(n) => n.to_string(),
        ParamValue::Real(x) => format!("{x:?}"),
        ParamValue::Complex(z) => {
            if z.im < 0.0 {
                format!("{:?}-{:?}i", z.re, -z.im)
            } else {
                format!("{:?}+{:?}i", z.re, z.im)
            }
        }
        ParamValue::Tag(t) => t.clone(),
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexRepr {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexRepr> for Complex64 {
    fn from(r: ComplexRepr) -> Self {
        Complex64::new(r.re, r.im)
    }
}

/// Serde adapter writing a complex number as `{re, im}`.
pub mod complex_repr {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        ComplexRepr::from(*z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        ComplexRepr::deserialize(d).map(Complex64::from)
    }
}

pub mod opt_complex_repr {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &Option<Complex64>, s: S) -> Result<S::Ok, S::Error> {
        z.map(ComplexRepr::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Complex64>, D::Error> {
        Option::<ComplexRepr>::deserialize(d).map(|o| o.map(Complex64::from))
    }
}

pub mod complex_vec_repr {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|&z| ComplexRepr::from(z))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        Vec::<ComplexRepr>::deserialize(d).map(|v| v.into_iter().map(Complex64::from).collect())
    }
}
