//! Numerical verification of the identities satisfied by the extended
//! functions.
//!
//! Each check evaluates the same quantity by two independent routes over a
//! parameter grid and reports the largest and median relative gap. Checks
//! whose id ends in `-as-printed` measure a variant that is *not* expected
//! to hold (a misprinted index or normalisation); they are reported but never
//! affect [`SuiteOutcome::corrected_pass`].
//!
//! Grid tuples are independent and swept in parallel; results are collected
//! in grid order, so two runs with the same configuration produce identical
//! reports.

mod checks;
mod config;

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;

pub use checks::{
    sweep_integral_reps, verify_derivative_identities, verify_extended_beta, verify_frac_image, verify_integral_reps,
    verify_kernel_collapse, verify_mellin, verify_power_rule, verify_recurrence, verify_reduction_chain, verify_wright,
    DerivativeRow, IntegralRow,
};
pub use config::{DerivativeGrid, FracGrid, GridSpec, MellinGrid, PqPairs, SuiteConfig, Tolerances};

/// Every identity the suite knows, in run order.
pub const IDENTITY_IDS: [&str; 16] = [
    "reduction-chain",
    "integral-representations",
    "recurrence",
    "mellin",
    "mellin-as-printed",
    "frac-integral-image",
    "frac-integral-image-as-printed",
    "derivative-shift",
    "derivative-shift-as-printed",
    "power-derivative",
    "power-derivative-as-printed",
    "extended-beta",
    "wright-exponential",
    "wright-prabhakar",
    "power-rule",
    "kernel-collapse",
];

/// Outcome of one identity over its grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub grid_size: usize,
    pub max_rel_err: f64,
    pub median_rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub notes: String,
}

impl IdentityReport {
    /// Summarises per-tuple relative errors. NaN (a failed evaluation)
    /// counts as an infinite error.
    pub fn from_errors(id: &str, errors: &[f64], tolerance: f64, notes: String) -> Self {
        let mut sorted: Vec<f64> = errors.iter().map(|&e| if e.is_nan() { f64::INFINITY } else { e.abs() }).collect();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        let (max, median) = if n == 0 {
            (f64::INFINITY, f64::INFINITY)
        } else if n % 2 == 1 {
            (sorted[n - 1], sorted[n / 2])
        } else {
            (sorted[n - 1], 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]))
        };
        Self {
            identity_id: id.to_string(),
            grid_size: n,
            max_rel_err: max,
            median_rel_err: median,
            tolerance,
            pass: max <= tolerance,
            notes,
        }
    }

    pub fn is_as_printed(&self) -> bool {
        self.identity_id.ends_with("-as-printed")
    }
}

/// Relative gap `|a - b| / |b|`, falling back to `|a - b|` when `b = 0`.
pub fn rel_err(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    if b == 0.0 {
        d
    } else {
        d / b.abs()
    }
}

/// Reports of one suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub reports: Vec<IdentityReport>,
}

impl SuiteOutcome {
    /// True when every report not marked `-as-printed` passes.
    pub fn corrected_pass(&self) -> bool {
        self.reports.iter().filter(|r| !r.is_as_printed()).all(|r| r.pass)
    }

    /// JSON array, one object per report, numbers with 17 significant
    /// digits; non-finite numbers become `null`.
    pub fn to_json(&self) -> String {
        fn num(v: f64) -> String {
            if v.is_finite() {
                format!("{v:.16e}")
            } else {
                "null".to_string()
            }
        }
        let mut out = String::from("[\n");
        for (i, r) in self.reports.iter().enumerate() {
            let _ = write!(
                out,
                "  {{\"identity_id\": {}, \"grid_size\": {}, \"max_rel_err\": {}, \"median_rel_err\": {}, \
                 \"tolerance\": {}, \"pass\": {}, \"notes\": {}}}",
                serde_json::to_string(&r.identity_id).unwrap_or_default(),
                r.grid_size,
                num(r.max_rel_err),
                num(r.median_rel_err),
                num(r.tolerance),
                r.pass,
                serde_json::to_string(&r.notes).unwrap_or_default(),
            );
            out.push_str(if i + 1 < self.reports.len() { ",\n" } else { "\n" });
        }
        out.push_str("]\n");
        out
    }

    /// Fixed-width table followed by the notes of each report.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<32} {:>6} {:>11} {:>11} {:>9}  result",
            "identity", "grid", "max_rel", "median_rel", "tol"
        );
        for r in &self.reports {
            let verdict = match (r.pass, r.is_as_printed()) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "holds (informational)",
                (false, true) => "differs (informational)",
            };
            let _ = writeln!(
                out,
                "{:<32} {:>6} {:>11.3e} {:>11.3e} {:>9.1e}  {}",
                r.identity_id, r.grid_size, r.max_rel_err, r.median_rel_err, r.tolerance, verdict
            );
        }
        let noted: Vec<_> = self.reports.iter().filter(|r| !r.notes.is_empty()).collect();
        if !noted.is_empty() {
            out.push_str("\nnotes:\n");
            for r in noted {
                let _ = writeln!(out, "  {}: {}", r.identity_id, r.notes);
            }
        }
        out
    }
}

/// Runs every selected identity of `cfg`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    cfg.validate()?;
    let (s, q) = (cfg.series(), cfg.quad());
    let tol = &cfg.tolerances;
    let want = |ids: &[&str]| ids.iter().any(|id| cfg.selected(id));
    let mut reports = Vec::new();

    if want(&["reduction-chain"]) {
        reports.push(verify_reduction_chain(tol.reduction_chain, &s, &q));
    }
    if want(&["integral-representations"]) {
        reports.push(verify_integral_reps(&cfg.grid, tol.integral_representations, &s, &q));
    }
    if want(&["recurrence"]) {
        reports.push(verify_recurrence(&cfg.grid, tol.recurrence, &s, &q));
    }
    if want(&["mellin", "mellin-as-printed"]) {
        reports.extend(verify_mellin(&cfg.mellin, tol.mellin, &s, &q));
    }
    if want(&["frac-integral-image", "frac-integral-image-as-printed"]) {
        reports.extend(verify_frac_image(&cfg.frac, tol.frac_integral_image, &s, &q));
    }
    if want(&["derivative-shift", "derivative-shift-as-printed", "power-derivative", "power-derivative-as-printed"]) {
        reports.extend(verify_derivative_identities(
            &cfg.derivative,
            tol.derivative_shift,
            tol.power_derivative,
            &s,
            &q,
        ));
    }
    if want(&["extended-beta"]) {
        reports.push(verify_extended_beta(tol.extended_beta, &q));
    }
    if want(&["wright-exponential", "wright-prabhakar"]) {
        reports.extend(verify_wright(tol.wright_exponential, tol.wright_prabhakar, &s));
    }
    if want(&["power-rule"]) {
        reports.push(verify_power_rule(tol.power_rule, &q));
    }
    if want(&["kernel-collapse"]) {
        reports.push(verify_kernel_collapse(tol.kernel_collapse, &q));
    }
    reports.retain(|r| cfg.selected(&r.identity_id));
    Ok(SuiteOutcome { reports })
}

/// Loads the configuration at `path` (defaults when `None`) and runs it.
pub fn run_full_suite(path: Option<&Path>) -> Result<SuiteOutcome> {
    let cfg = match path {
        Some(p) => SuiteConfig::load(p)?,
        None => SuiteConfig::default(),
    };
    run_suite(&cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_statistics() {
        let r = IdentityReport::from_errors("x", &[1e-9, 3e-9, 2e-9, 4e-9], 1e-8, String::new());
        assert_eq!(r.grid_size, 4);
        assert_eq!(r.max_rel_err, 4e-9);
        assert!((r.median_rel_err - 2.5e-9).abs() < 1e-24);
        assert!(r.pass);
        let bad = IdentityReport::from_errors("x", &[1e-9, f64::NAN], 1e-8, String::new());
        assert!(!bad.pass);
        assert_eq!(bad.max_rel_err, f64::INFINITY);
    }

    #[test]
    fn config_defaults_and_overrides() {
        let empty = SuiteConfig::parse("").unwrap();
        assert_eq!(empty, SuiteConfig::default());
        let one = SuiteConfig::parse("rel_tol = 1e-11").unwrap();
        assert_eq!(one.rel_tol, 1e-11);
        assert_eq!(one.grid, GridSpec::default());
        assert!(SuiteConfig::parse("[grid]\nz = []").is_err());
        assert!(SuiteConfig::parse("identities = [\"nope\"]").is_err());
        assert!(SuiteConfig::parse("[grid]\nalhpa = [1.0]").is_err());
        assert_eq!(GridSpec::default().len(), 270);
    }

    #[test]
    fn json_has_seventeen_digits() {
        let out = SuiteOutcome { reports: vec![IdentityReport::from_errors("a", &[0.1], 1.0, "n\"q".into())] };
        let json = out.to_json();
        assert!(json.contains("\"max_rel_err\": 1.0000000000000001e-1"), "{json}");
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed[0]["notes"], "n\"q");
    }
}
