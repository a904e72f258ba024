//! The Mittag-Leffler family.
//!
//! | function | series coefficient of `z^n / n!` |
//! |---|---|
//! | Prabhakar `E^γ_{ρ,σ}` | `(γ)_n / Γ(ρn+σ)` |
//! | Shukla-Prajapati `E^{δ,k}_{ρ,σ}` | `(δ)_{nk} / Γ(ρn+σ)` |
//! | one-parameter extended `E^{γ;c}_{α,β}(·; p)` | `β_p(γ+n, c-γ)/B(γ, c-γ) · (c)_n / Γ(αn+β)` |
//! | two-parameter extended `E^{γ,c}_{α,β}(·; p, q)` | `β(γ+n, c-γ; p, q)/B(γ, c-γ) · (c)_n / Γ(αn+β)` |
//!
//! The extended functions are available as truncated series
//! ([`ml_extended_pq`], or [`ExtendedMl`] for repeated evaluation) and
//! through three integral representations ([`ml_integral_unit`],
//! [`ml_integral_halfline`], [`ml_integral_trig`]).

mod extended;
mod integral;
mod prabhakar;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

pub use extended::{ml_extended_p, ml_extended_pq, ml_recurrence_residual, ml_term_derivative, ExtendedMl};
pub use integral::{ml_integral_halfline, ml_integral_trig, ml_integral_unit};
pub use prabhakar::{ml_prabhakar, ml_shukla, PrabhakarSeries};

/// Parameters `(α, β, γ, c, p, q)` of `E^{γ,c}_{α,β}(z; p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MLParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub c: f64,
    pub p: f64,
    pub q: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64, c: f64, p: f64, q: f64) -> Result<Self> {
        let params = Self { alpha, beta, gamma, c, p, q };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.alpha, self.beta, self.gamma, self.c, self.p, self.q];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(domain(format!("parameters must be finite: {self:?}")));
        }
        if !(self.alpha > 0.0 && self.beta > 0.0) {
            return Err(domain(format!(
                "need alpha > 0 and beta > 0, got alpha = {}, beta = {}",
                self.alpha, self.beta
            )));
        }
        if !(self.c > self.gamma && self.gamma > 0.0) {
            return Err(domain(format!("need c > gamma > 0, got gamma = {}, c = {}", self.gamma, self.c)));
        }
        if !(self.p >= 0.0 && self.q >= 0.0) {
            return Err(domain(format!("need p, q >= 0, got p = {}, q = {}", self.p, self.q)));
        }
        Ok(())
    }

    pub fn with_pq(mut self, p: f64, q: f64) -> Self {
        self.p = p;
        self.q = q;
        self
    }
}
