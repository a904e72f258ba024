//! Numerical Mellin transform of `E^{γ,c}_{α,β}(z; p, q)` in the variables
//! `p` and `q`.
//!
//! [`mellin_numeric`] integrates `p` and `q` out analytically
//! (`∫_0^∞ p^{s-1} e^{-p/t} dp = t^s Γ(s)`) and leaves one `t`-quadrature;
//! [`mellin_brute_force`] does the full two-dimensional integral over
//! `(0,∞)²` with the unit-interval representation inside, and is only
//! practical at loose tolerances.

use std::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::extbeta::{log_beta_density, rejudge, Kernel};
use crate::mlcore::{ml_extended_p, MLParams, PrabhakarSeries};
use crate::numcore::{
    log_beta, log_gamma, quad_finite_abscissa, quad_semi_infinite, Abscissa, EvalResult, QuadConfig, SeriesConfig,
    Status,
};

/// Mellin variables `(s, r)` paired with `p` and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MellinPoint {
    pub s: f64,
    pub r: f64,
}

impl MellinPoint {
    pub fn new(s: f64, r: f64) -> Result<Self> {
        let pt = Self { s, r };
        pt.validate()?;
        Ok(pt)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s > 0.0 && self.r > 0.0) || !self.s.is_finite() || !self.r.is_finite() {
            return Err(domain(format!("Mellin variables need s, r > 0, got s = {}, r = {}", self.s, self.r)));
        }
        Ok(())
    }
}

fn mark(r: EvalResult, inner_ok: bool) -> EvalResult {
    if inner_ok {
        r
    } else {
        EvalResult { status: EvalResult::worst_status(r.status, Status::ToleranceNotMet), ..r }
    }
}

/// `∫_0^∞∫_0^∞ p^{s-1} q^{r-1} E^{γ,c}_{α,β}(z; p, q) dp dq` through the
/// reduced form
/// `Γ(s)Γ(r)/B(γ,c-γ) ∫_0^1 t^{γ+s-1}(1-t)^{c+r-γ-1} E^c_{α,β}(tz) dt`.
///
/// `params.p` and `params.q` are ignored.
pub fn mellin_numeric(params: &MLParams, pt: MellinPoint, z: f64, qcfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    pt.validate()?;
    qcfg.validate()?;
    let inner = PrabhakarSeries::new(params.alpha, params.beta, params.c, z, &SeriesConfig::default())?;
    let (x, y) = (params.gamma + pt.s, params.c - params.gamma + pt.r);
    let ln_b = log_beta(x, y);
    let inner_ok = Cell::new(true);
    let r = quad_finite_abscissa(
        |t: Abscissa| {
            let w = log_beta_density(x, y, ln_b, t).exp();
            if w == 0.0 {
                return 0.0;
            }
            let e = inner.eval(t.x * z);
            if !e.is_converged() {
                inner_ok.set(false);
            }
            w * e.value
        },
        0.0,
        1.0,
        qcfg,
    )?;
    let ln_pre = log_gamma(pt.s)? + log_gamma(pt.r)? + ln_b - log_beta(params.gamma, params.c - params.gamma);
    Ok(rejudge(mark(r, inner_ok.get()), qcfg).scaled(ln_pre.exp()))
}

/// The same transform by nested quadrature: half-line integrals in `q` and
/// `p` around the unit-interval representation of `E(z; p, q)`. The cost is
/// cubic in the node count, so use a loose `qcfg`.
pub fn mellin_brute_force(params: &MLParams, pt: MellinPoint, z: f64, qcfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    pt.validate()?;
    qcfg.validate()?;
    let inner = PrabhakarSeries::new(params.alpha, params.beta, params.c, z, &SeriesConfig::default())?;
    let (g, y) = (params.gamma, params.c - params.gamma);
    let ln_b = log_beta(g, y);
    let ok = Cell::new(true);

    let e_pq = |p: f64, q: f64| -> Result<EvalResult> {
        let kernel = Kernel::TwoParam { p, q };
        quad_finite_abscissa(
            |t: Abscissa| {
                let w = (log_beta_density(g, y, ln_b, t) + kernel.log_at(t)).exp();
                if w == 0.0 {
                    return 0.0;
                }
                let e = inner.eval(t.x * z);
                if !e.is_converged() {
                    ok.set(false);
                }
                w * e.value
            },
            0.0,
            1.0,
            qcfg,
        )
    };

    let outer = quad_semi_infinite(
        |p| {
            let inner_q = quad_semi_infinite(
                |q| {
                    let e = match e_pq(p, q) {
                        Ok(e) => e,
                        Err(_) => return f64::NAN,
                    };
                    if !e.is_converged() {
                        ok.set(false);
                    }
                    ((pt.r - 1.0) * q.ln()).exp() * e.value
                },
                qcfg,
            );
            match inner_q {
                Ok(v) => {
                    if !v.is_converged() {
                        ok.set(false);
                    }
                    ((pt.s - 1.0) * p.ln()).exp() * v.value
                }
                Err(_) => f64::NAN,
            }
        },
        qcfg,
    )?;
    Ok(mark(outer, ok.get()))
}

/// Diagonal integral `∫_0^∞ E^{γ;c}_{α,β}(z; p) dp` of the one-parameter
/// function, each integrand value a fresh [`ml_extended_p`] evaluation.
pub fn mellin_diag_numeric(params: &MLParams, z: f64, qcfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    qcfg.validate()?;
    let cfg = SeriesConfig::default();
    let ok = Cell::new(true);
    let r = quad_semi_infinite(
        |p| match ml_extended_p(&params.with_pq(p, p), z, &cfg, qcfg) {
            Ok(e) => {
                if !e.is_converged() {
                    ok.set(false);
                }
                e.value
            }
            Err(_) => f64::NAN,
        },
        qcfg,
    )?;
    Ok(mark(r, ok.get()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extbeta::beta_classical;
    use crate::numcore::gamma;
    use crate::wright::mellin_closed_form;

    fn base() -> MLParams {
        MLParams::new(1.0, 1.0, 1.2, 2.5, 0.0, 0.0).unwrap()
    }

    #[test]
    fn zero_argument_is_a_beta_ratio() {
        let params = base();
        let pt = MellinPoint::new(1.5, 2.0).unwrap();
        let v = mellin_numeric(&params, pt, 0.0, &QuadConfig::default()).unwrap();
        let expected = gamma(1.5).unwrap() * gamma(2.0).unwrap() * beta_classical(2.7, 3.3).unwrap()
            / (beta_classical(1.2, 1.3).unwrap() * gamma(1.0).unwrap());
        assert!((v.value - expected).abs() < 1e-10 * expected, "{v:?} vs {expected}");
    }

    #[test]
    fn reduced_route_matches_closed_form() {
        let params = base();
        let cfg = SeriesConfig::default();
        for (s, r) in [(1.5, 2.0), (1.0, 1.0), (0.8, 1.2)] {
            let pt = MellinPoint::new(s, r).unwrap();
            let num = mellin_numeric(&params, pt, 0.5, &QuadConfig::default()).unwrap();
            let closed = mellin_closed_form(&params, s, r, 0.5, &cfg).unwrap();
            assert!((num.value - closed.value).abs() < 1e-9 * closed.value, "{num:?} vs {closed:?}");
        }
    }

    #[test]
    fn diagonal_equals_unit_mellin_point() {
        let params = base();
        let qcfg = QuadConfig::default().with_rel_tol(1e-8);
        let diag = mellin_diag_numeric(&params, 0.25, &qcfg).unwrap();
        let closed = mellin_closed_form(&params, 1.0, 1.0, 0.25, &SeriesConfig::default()).unwrap();
        assert!((diag.value - closed.value).abs() < 1e-6 * closed.value, "{diag:?} vs {closed:?}");
    }

    #[test]
    fn invalid_points() {
        assert!(MellinPoint::new(0.0, 1.0).is_err());
        assert!(MellinPoint::new(1.0, -1.0).is_err());
    }
}
