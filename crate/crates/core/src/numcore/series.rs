//! Truncated power-series summation with a tail guard.

use serde::{Deserialize, Serialize};

use super::{EvalResult, Status};
use crate::error::{domain, Result};

/// Truncation rule for every series in the crate.
///
/// Summation stops once `tail_guard` consecutive terms satisfy
/// `|term| <= rel_tol * |partial sum|`; a single small term is not enough
/// because Mittag-Leffler terms are not monotone for orders below one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub tail_guard: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-12, max_terms: 2000, tail_guard: 3 }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(domain("series rel_tol must be positive"));
        }
        if self.max_terms < 1 || self.tail_guard < 1 {
            return Err(domain("series max_terms and tail_guard must be at least 1"));
        }
        Ok(())
    }
}

/// One step of a series as produced by the caller.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TermFlow {
    /// A term and the absolute error already present in it.
    Term { value: f64, err: f64 },
    /// No further terms can be produced (coefficient table exhausted).
    Exhausted,
}

impl TermFlow {
    pub fn exact(value: f64) -> Self {
        TermFlow::Term { value, err: 0.0 }
    }
}

/// Largest tolerated ratio between the biggest term and the final sum.
const CANCELLATION_LIMIT: f64 = 1e15;

/// Sums `term(0) + term(1) + …` with Neumaier compensation.
///
/// `accept_rel` is the relative accuracy the caller needs for the result to
/// count as converged; it is at least `cfg.rel_tol` but may be looser when the
/// terms carry their own (e.g. quadrature) error.
pub fn sum_series<F>(cfg: &SeriesConfig, accept_rel: f64, mut term: F) -> EvalResult
where
    F: FnMut(usize) -> TermFlow,
{
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut abs_sum = 0.0_f64;
    let mut term_err = 0.0_f64;
    let mut max_abs = 0.0_f64;
    let mut small_run = 0usize;
    let mut recent = vec![0.0_f64; cfg.tail_guard];
    let mut guard_met = false;
    let mut diverged = false;
    let mut n = 0usize;

    while n < cfg.max_terms {
        let (t, e) = match term(n) {
            TermFlow::Term { value, err } => (value, err),
            TermFlow::Exhausted => break,
        };
        n += 1;
        if !t.is_finite() {
            diverged = true;
            break;
        }
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
        abs_sum += t.abs();
        term_err += e;
        max_abs = max_abs.max(t.abs());
        recent[(n - 1) % cfg.tail_guard] = t.abs();

        let total = sum + comp;
        if t.abs() <= cfg.rel_tol * total.abs() {
            small_run += 1;
            if small_run >= cfg.tail_guard {
                guard_met = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }

    let value = sum + comp;
    let tail = recent.iter().copied().fold(0.0, f64::max);
    let abs_err_est = if diverged { f64::INFINITY } else { tail + f64::EPSILON * abs_sum + term_err };
    let cancelled = max_abs > CANCELLATION_LIMIT * value.abs();
    let accept = accept_rel.max(cfg.rel_tol);
    let status = if guard_met && !cancelled && (abs_err_est <= accept * value.abs() || abs_err_est == 0.0) {
        Status::Converged
    } else {
        Status::ToleranceNotMet
    };
    EvalResult { value, abs_err_est, effort: n as u64, status }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_series() {
        let cfg = SeriesConfig::default();
        let mut t = 1.0;
        let r = sum_series(&cfg, 0.0, |n| {
            if n > 0 {
                t /= n as f64;
            }
            TermFlow::exact(t)
        });
        assert!(r.is_converged());
        assert!((r.value - std::f64::consts::E).abs() < 1e-15);
        assert!(r.abs_err_est <= 1e-12 * r.value);
    }

    #[test]
    fn divergent_series_reports_failure() {
        let cfg = SeriesConfig { max_terms: 100, ..SeriesConfig::default() };
        let r = sum_series(&cfg, 0.0, |n| TermFlow::exact(2f64.powi(n as i32)));
        assert_eq!(r.status, Status::ToleranceNotMet);
        assert_eq!(r.effort, 100);
    }

    #[test]
    fn exhausted_table_is_not_converged() {
        let cfg = SeriesConfig::default();
        let r = sum_series(&cfg, 0.0, |n| if n < 5 { TermFlow::exact(1.0) } else { TermFlow::Exhausted });
        assert_eq!(r.value, 5.0);
        assert_eq!(r.status, Status::ToleranceNotMet);
    }

    #[test]
    fn catastrophic_cancellation_is_refused() {
        // e^{-40} by its Taylor series: terms reach ~1e16 while the sum is ~4e-18.
        let cfg = SeriesConfig::default();
        let mut t = 1.0;
        let r = sum_series(&cfg, 0.0, |n| {
            if n > 0 {
                t *= -40.0 / n as f64;
            }
            TermFlow::exact(t)
        });
        assert_eq!(r.status, Status::ToleranceNotMet);
    }

    #[test]
    fn all_zero_tail_stops() {
        let cfg = SeriesConfig::default();
        let r = sum_series(&cfg, 0.0, |n| TermFlow::exact(if n == 0 { 0.25 } else { 0.0 }));
        assert_eq!(r.value, 0.25);
        assert!(r.is_converged());
        assert_eq!(r.effort, 4);
    }
}
