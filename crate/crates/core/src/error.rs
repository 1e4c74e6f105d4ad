use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

/// Which function a pole belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleKind {
    Gamma,
    Zeta,
}

/// Location and origin of a pole hit during evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleInfo {
    pub location: Complex64,
    pub kind: PoleKind,
}

impl fmt::Display for PoleInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            PoleKind::Gamma => "gamma",
            PoleKind::Zeta => "zeta",
        };
        write!(
            f,
            "{what} pole at {}",
            crate::format::complex(self.location, 17)
        )
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("{0}")]
    Pole(PoleInfo),

    /// Removable singularity of a prefactor that is not resolved numerically.
    #[error("argument {} is within the safe-division threshold of a prefactor singularity", crate::format::complex(*.location, 17))]
    NearPole { location: Complex64 },

    #[error("result overflows the f64 exponent range (log magnitude {log_magnitude})")]
    Overflow { log_magnitude: f64 },

    #[error("no convergence after {work} steps: error estimate {achieved:e} > target {target:e}")]
    Convergence {
        achieved: f64,
        target: f64,
        work: usize,
    },

    #[error("integrand returned a non-finite value at abscissa {abscissa:e}")]
    NonFinite { abscissa: f64 },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("invalid settings: {0}")]
    InvalidSettings(String),
}

impl Error {
    pub(crate) fn gamma_pole(location: Complex64) -> Self {
        Error::Pole(PoleInfo {
            location,
            kind: PoleKind::Gamma,
        })
    }

    pub(crate) fn zeta_pole(location: Complex64) -> Self {
        Error::Pole(PoleInfo {
            location,
            kind: PoleKind::Zeta,
        })
    }

    /// `true` for errors caused by the argument itself (poles, domain), as
    /// opposed to a numerical method running out of budget.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::Pole(_) | Error::NearPole { .. } | Error::Domain(_) | Error::Overflow { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
