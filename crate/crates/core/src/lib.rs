//! Dirichlet series over the complex plane and executable checks of
//! Malmstén's integral identities.
//!
//! The crate has four layers:
//!
//! * [`gamma`]: principal complex log-Gamma, Gamma, and `sin`/`cos` of
//!   `pi s / 2` with exact zeros at integers.
//! * [`series`]: eta, lambda, beta and zeta, continued to the whole plane
//!   through their functional equations.
//! * [`quadrature`]: tanh-sinh and exp-sinh rules that tolerate the log,
//!   log-log and algebraic endpoint singularities of the integrals below.
//! * [`identities`]: each identity evaluated on both sides independently,
//!   collected into a serializable [`report::VerificationReport`].
//!
//! ```
//! use malmsten::{series, ComplexValue, SeriesSettings};
//!
//! let cfg = SeriesSettings::default();
//! let r = series::eta(ComplexValue::new(1.0, 0.0), &cfg).unwrap();
//! assert!((r.value.re - std::f64::consts::LN_2).abs() < 1e-13);
//! ```

pub mod cli;
pub mod cmath;
pub mod error;
pub mod eval;
pub mod format;
pub mod gamma;
pub mod identities;
pub mod quadrature;
pub mod report;
pub mod series;

pub use error::{Error, PoleInfo, PoleKind, Result};
pub use eval::{EvalResult, Method};
pub use identities::{IdentityCheck, IdentityId, ParamGrid};
pub use quadrature::{QuadratureSettings, Transform, UnitPoint};
pub use report::VerificationReport;
pub use series::{Acceleration, FunctionId, SeriesSettings};

/// Complex scalar used for every argument and result.
pub type ComplexValue = num_complex::Complex64;
