use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Evaluation path that produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    DirectSeries,
    AcceleratedSeries,
    FunctionalEquation,
    ClosedRelation,
    TanhSinh,
    ExpSinh,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct_series",
            Method::AcceleratedSeries => "accelerated_series",
            Method::FunctionalEquation => "functional_equation",
            Method::ClosedRelation => "closed_relation",
            Method::TanhSinh => "tanh_sinh",
            Method::ExpSinh => "exp_sinh",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// A numeric answer together with how it was obtained.
///
/// `err_estimate` is an estimate of the absolute error, not a guarantee.
/// `work` counts series terms or integrand evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub method: Method,
    pub work: usize,
}

impl EvalResult {
    pub fn new(value: Complex64, err_estimate: f64, method: Method, work: usize) -> Self {
        Self {
            value,
            err_estimate,
            method,
            work,
        }
    }
}
