//! Scalar special functions, quadrature and series summation shared by the
//! rest of the crate.

mod gamma;
mod quad;
mod series;

use serde::{Deserialize, Serialize};

pub use gamma::{
    gamma, is_gamma_pole, log_abs_gamma, log_beta, log_gamma, log_pochhammer, pochhammer, rgamma, GAMMA_MAX_ARG,
};
pub use quad::{quad_finite, quad_finite_abscissa, quad_semi_infinite, Abscissa, QuadConfig, Scheme};
pub use series::{sum_series, SeriesConfig, TermFlow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Converged,
    ToleranceNotMet,
    DomainError,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Converged => "converged",
            Status::ToleranceNotMet => "tolerance-not-met",
            Status::DomainError => "domain-error",
        })
    }
}

/// A computed value with its absolute error estimate and the work spent
/// (series terms or integrand evaluations).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub effort: u64,
    pub status: Status,
}

impl EvalResult {
    pub fn exact(value: f64) -> Self {
        Self { value, abs_err_est: 0.0, effort: 0, status: Status::Converged }
    }

    pub fn is_converged(&self) -> bool {
        self.status == Status::Converged
    }

    /// Scale value and error by a known exact factor.
    pub fn scaled(self, factor: f64) -> Self {
        Self { value: self.value * factor, abs_err_est: self.abs_err_est * factor.abs(), ..self }
    }

    /// Combine the status of two results: the weaker one wins.
    pub(crate) fn worst_status(a: Status, b: Status) -> Status {
        use Status::*;
        match (a, b) {
            (DomainError, _) | (_, DomainError) => DomainError,
            (ToleranceNotMet, _) | (_, ToleranceNotMet) => ToleranceNotMet,
            _ => Converged,
        }
    }
}
