//! Integral representations of the extended function.
//!
//! All three integrate the weight `t^{γ-1}(1-t)^{c-γ-1} e^{-p/t-q/(1-t)}`
//! (in different variables) against the Prabhakar function `E^c_{α,β}(tz)`,
//! tabulated once per call. They share no code with the series route beyond
//! the gamma primitives.

use std::cell::Cell;

use super::prabhakar::PrabhakarSeries;
use super::MLParams;
use crate::error::Result;
use crate::extbeta::{log_beta_density, rejudge, Kernel};
use crate::numcore::{
    log_beta, quad_finite_abscissa, quad_semi_infinite, Abscissa, EvalResult, QuadConfig, SeriesConfig, Status,
};

fn inner_series(params: &MLParams, z: f64) -> Result<PrabhakarSeries> {
    PrabhakarSeries::new(params.alpha, params.beta, params.c, z, &SeriesConfig::default())
}

fn with_inner_status(mut r: EvalResult, inner_ok: bool, qcfg: &QuadConfig) -> EvalResult {
    if !inner_ok {
        r.status = EvalResult::worst_status(r.status, Status::ToleranceNotMet);
    }
    rejudge(r, qcfg)
}

/// Unit-interval representation
/// `(1/B(γ,c-γ)) ∫_0^1 t^{γ-1}(1-t)^{c-γ-1} e^{-p/t-q/(1-t)} E^c_{α,β}(tz) dt`.
pub fn ml_integral_unit(params: &MLParams, z: f64, qcfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    let inner = inner_series(params, z)?;
    let (g, y) = (params.gamma, params.c - params.gamma);
    let ln_b = log_beta(g, y);
    let kernel = Kernel::TwoParam { p: params.p, q: params.q };
    let inner_ok = Cell::new(true);
    let r = quad_finite_abscissa(
        |t: Abscissa| {
            let w = (log_beta_density(g, y, ln_b, t) + kernel.log_at(t)).exp();
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
    Ok(with_inner_status(r, inner_ok.get(), qcfg))
}

/// Half-line representation obtained from `t = u/(1+u)`:
/// `(1/B) ∫_0^∞ u^{γ-1}(1+u)^{-c} e^{-p(1+u)/u - q(1+u)} E^c_{α,β}(uz/(1+u)) du`.
pub fn ml_integral_halfline(params: &MLParams, z: f64, qcfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    let inner = inner_series(params, z)?;
    let (g, c, p, q) = (params.gamma, params.c, params.p, params.q);
    let ln_b = log_beta(g, c - g);
    let inner_ok = Cell::new(true);
    let r = quad_semi_infinite(
        |u| {
            let one_u = 1.0 + u;
            let mut ln_w = (g - 1.0) * u.ln() - c * u.ln_1p() - ln_b;
            if p != 0.0 {
                ln_w -= p * one_u / u;
            }
            if q != 0.0 {
                ln_w -= q * one_u;
            }
            let w = ln_w.exp();
            if w == 0.0 {
                return 0.0;
            }
            let e = inner.eval(u / one_u * z);
            if !e.is_converged() {
                inner_ok.set(false);
            }
            w * e.value
        },
        qcfg,
    )?;
    Ok(with_inner_status(r, inner_ok.get(), qcfg))
}

/// Trigonometric representation obtained from `t = sin²θ`:
/// `(2/B) ∫_0^{π/2} sin^{2γ-1}θ cos^{2(c-γ)-1}θ e^{-p/sin²θ - q/cos²θ} E^c_{α,β}(z sin²θ) dθ`.
pub fn ml_integral_trig(params: &MLParams, z: f64, qcfg: &QuadConfig) -> Result<EvalResult> {
    params.validate()?;
    let inner = inner_series(params, z)?;
    let (g, c, p, q) = (params.gamma, params.c, params.p, params.q);
    let ln_b = log_beta(g, c - g);
    let inner_ok = Cell::new(true);
    let r = quad_finite_abscissa(
        |th: Abscissa| {
            let (s, co) = if th.from_lo <= th.to_hi {
                (th.from_lo.sin(), th.from_lo.cos())
            } else {
                (th.to_hi.cos(), th.to_hi.sin())
            };
            let (s2, c2) = (s * s, co * co);
            let mut ln_w = std::f64::consts::LN_2 + (2.0 * g - 1.0) * s.ln() + (2.0 * (c - g) - 1.0) * co.ln() - ln_b;
            if p != 0.0 {
                ln_w -= p / s2;
            }
            if q != 0.0 {
                ln_w -= q / c2;
            }
            let w = ln_w.exp();
            if w == 0.0 {
                return 0.0;
            }
            let e = inner.eval(z * s2);
            if !e.is_converged() {
                inner_ok.set(false);
            }
            w * e.value
        },
        0.0,
        std::f64::consts::FRAC_PI_2,
        qcfg,
    )?;
    Ok(with_inner_status(r, inner_ok.get(), qcfg))
}
