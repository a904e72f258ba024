use super::prabhakar::HORIZON_MARGIN;
use super::MLParams;
use crate::error::{domain, Result};
use crate::extbeta::{kernel_ratio, Kernel};
use crate::numcore::{rgamma, sum_series, EvalResult, QuadConfig, SeriesConfig, Status, TermFlow};

/// Coefficient table of an extended Mittag-Leffler function.
///
/// The `n`-th series coefficient is written as
///
/// ```text
/// β(γ+n, c-γ; p, q) (c)_n          (γ)_n
/// ----------------------- = R_n · -------,   R_n = β(γ+n, c-γ; p, q) / B(γ+n, c-γ)
///   B(γ, c-γ)     n!                  n!
/// ```
///
/// so `R_n ∈ (0, 1]` is the only quadrature-dependent factor and the
/// Prabhakar function `E^γ_{α,β}` is a termwise majorant. Each `R_n` is one
/// quadrature; the table is filled once at construction and is read-only
/// afterwards, so one instance serves any number of arguments, shifted `β`
/// values and derivative orders.
#[derive(Debug, Clone)]
pub struct ExtendedMl {
    params: MLParams,
    ratios: Vec<EvalResult>,
    /// `(γ)_n / n!`
    pfac: Vec<f64>,
    cfg: SeriesConfig,
    qcfg: QuadConfig,
}

impl ExtendedMl {
    /// Two-parameter kernel `e^{-p/t - q/(1-t)}`.
    ///
    /// The table covers arguments up to `|z_max|`, plus `extra_terms`
    /// coefficients for derivatives and downward `β` shifts.
    pub fn pq(
        params: &MLParams,
        z_max: f64,
        extra_terms: usize,
        cfg: &SeriesConfig,
        qcfg: &QuadConfig,
    ) -> Result<Self> {
        params.validate()?;
        Self::build(params, Kernel::TwoParam { p: params.p, q: params.q }, z_max, extra_terms, cfg, qcfg)
    }

    /// One-parameter kernel `e^{-p/(t(1-t))}`; requires `params.p == params.q`.
    pub fn p_only(
        params: &MLParams,
        z_max: f64,
        extra_terms: usize,
        cfg: &SeriesConfig,
        qcfg: &QuadConfig,
    ) -> Result<Self> {
        params.validate()?;
        if params.p != params.q {
            return Err(domain(format!(
                "one-parameter extension needs p == q, got p = {}, q = {}",
                params.p, params.q
            )));
        }
        Self::build(params, Kernel::OneParam { p: params.p }, z_max, extra_terms, cfg, qcfg)
    }

    fn build(
        params: &MLParams,
        kernel: Kernel,
        z_max: f64,
        extra_terms: usize,
        cfg: &SeriesConfig,
        qcfg: &QuadConfig,
    ) -> Result<Self> {
        cfg.validate()?;
        qcfg.validate()?;
        if !z_max.is_finite() {
            return Err(domain("argument must be finite"));
        }
        let horizon = majorant_horizon(params, z_max.abs(), cfg) + extra_terms + cfg.tail_guard;
        let horizon = horizon.min(cfg.max_terms + extra_terms);
        let y = params.c - params.gamma;
        let mut ratios = Vec::with_capacity(horizon);
        let mut pfac = Vec::with_capacity(horizon);
        let mut pf = 1.0_f64;
        for n in 0..horizon {
            if n > 0 {
                let k = (n - 1) as f64;
                pf *= (params.gamma + k) / (k + 1.0);
            }
            pfac.push(pf);
            ratios.push(kernel_ratio(params.gamma + n as f64, y, kernel, qcfg)?);
        }
        Ok(Self { params: *params, ratios, pfac, cfg: *cfg, qcfg: *qcfg })
    }

    pub fn params(&self) -> &MLParams {
        &self.params
    }

    /// Number of tabulated coefficients.
    pub fn len(&self) -> usize {
        self.ratios.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ratios.is_empty()
    }

    /// `β(γ+n, c-γ; p, q) / B(γ+n, c-γ)`, if tabulated.
    pub fn ratio(&self, n: usize) -> Option<EvalResult> {
        self.ratios.get(n).copied()
    }

    /// `E^{γ,c}_{α,β}(z; p, q)`.
    pub fn eval(&self, z: f64) -> EvalResult {
        self.series(z, 0, self.params.beta)
    }

    /// Same coefficients with the shift `β` replaced by `beta` (any real).
    pub fn eval_with_beta(&self, z: f64, beta: f64) -> EvalResult {
        self.series(z, 0, beta)
    }

    /// `n`-th derivative in `z`, by termwise differentiation.
    pub fn derivative(&self, z: f64, n: usize) -> EvalResult {
        self.series(z, n, self.params.beta)
    }

    pub fn derivative_with_beta(&self, z: f64, n: usize, beta: f64) -> EvalResult {
        self.series(z, n, beta)
    }

    /// `Σ_k R_{k+n} (γ)_{k+n} z^k / (k! Γ(α(k+n) + beta))`.
    fn series(&self, z: f64, n: usize, beta: f64) -> EvalResult {
        let alpha = self.params.alpha;
        let mut zp = 1.0_f64;
        let mut rising = 1.0_f64; // (k+1)_n = (k+n)!/k!
        for j in 1..=n {
            rising *= j as f64;
        }
        let mut quad_status = Status::Converged;
        let accept = self.cfg.rel_tol.max(self.qcfg.rel_tol);
        let mut r = sum_series(&self.cfg, accept, |k| {
            let m = k + n;
            let Some(ratio) = self.ratios.get(m) else {
                return TermFlow::Exhausted;
            };
            if k > 0 {
                zp *= z;
                rising *= (k + n) as f64 / k as f64;
            }
            quad_status = EvalResult::worst_status(quad_status, ratio.status);
            let base = self.pfac[m] * rising * rgamma(alpha * m as f64 + beta) * zp;
            let value = ratio.value * base;
            TermFlow::Term { value, err: ratio.abs_err_est * base.abs() }
        });
        r.status = EvalResult::worst_status(r.status, quad_status);
        r
    }

    /// `n`-th derivative of `z^{β-1} E(μ z^α)` at `z > 0`, differentiating
    /// each power `z^{αk+β-1}` exactly. The table must cover `|μ| z^α`.
    pub fn power_derivative(&self, z: f64, n: usize, mu: f64) -> EvalResult {
        let (alpha, beta) = (self.params.alpha, self.params.beta);
        if !(z > 0.0) {
            return EvalResult { value: f64::NAN, abs_err_est: f64::INFINITY, effort: 0, status: Status::DomainError };
        }
        let w = mu * z.powf(alpha);
        let mut wp = 1.0_f64;
        let mut quad_status = Status::Converged;
        let accept = self.cfg.rel_tol.max(self.qcfg.rel_tol);
        let mut r = sum_series(&self.cfg, accept, |k| {
            let Some(ratio) = self.ratios.get(k) else {
                return TermFlow::Exhausted;
            };
            if k > 0 {
                wp *= w;
            }
            quad_status = EvalResult::worst_status(quad_status, ratio.status);
            let e = alpha * k as f64 + beta - 1.0;
            let falling: f64 = (0..n).map(|j| e - j as f64).product();
            let base = self.pfac[k] * falling * rgamma(e + 1.0) * wp;
            TermFlow::Term { value: ratio.value * base, err: ratio.abs_err_est * base.abs() }
        });
        r.status = EvalResult::worst_status(r.status, quad_status);
        r.scaled(z.powf(beta - 1.0 - n as f64))
    }

    /// Residual of `E_β = β E_{β+1} + α z E'_{β+1}` and the magnitude `|E_β|`.
    pub fn recurrence_residual(&self, z: f64) -> (f64, f64) {
        let b = self.params.beta;
        let lhs = self.eval_with_beta(z, b).value;
        let shifted = self.eval_with_beta(z, b + 1.0).value;
        let slope = self.derivative_with_beta(z, 1, b + 1.0).value;
        let rhs = b * shifted + self.params.alpha * z * slope;
        (lhs - rhs, lhs.abs())
    }
}

/// Number of terms after which the Prabhakar majorant `E^γ_{α,β}(|z|)` is
/// negligible at the series tolerance.
fn majorant_horizon(params: &MLParams, z_abs: f64, cfg: &SeriesConfig) -> usize {
    let mut pf = 1.0_f64;
    let mut zp = 1.0_f64;
    let mut total = 0.0_f64;
    let mut run = 0usize;
    for n in 0..cfg.max_terms {
        if n > 0 {
            let k = (n - 1) as f64;
            pf *= (params.gamma + k) / (k + 1.0);
            zp *= z_abs;
        }
        let m = (pf * rgamma(params.alpha * n as f64 + params.beta) * zp).abs();
        total += m;
        if m <= HORIZON_MARGIN * cfg.rel_tol * total {
            run += 1;
            if run >= cfg.tail_guard {
                return n + 1;
            }
        } else {
            run = 0;
        }
    }
    cfg.max_terms
}

/// Extended `(p,q)` Mittag-Leffler function `E^{γ,c}_{α,β}(z; p, q)`.
pub fn ml_extended_pq(params: &MLParams, z: f64, cfg: &SeriesConfig, qcfg: &QuadConfig) -> Result<EvalResult> {
    Ok(ExtendedMl::pq(params, z, 0, cfg, qcfg)?.eval(z))
}

/// One-parameter extended function `E^{γ;c}_{α,β}(z; p)`: the kernel is
/// `e^{-p/(t(1-t))}` with `p = params.p` (and `params.q` must equal it).
pub fn ml_extended_p(params: &MLParams, z: f64, cfg: &SeriesConfig, qcfg: &QuadConfig) -> Result<EvalResult> {
    Ok(ExtendedMl::p_only(params, z, 0, cfg, qcfg)?.eval(z))
}

/// Exact `n`-th derivative of `E^{γ,c}_{α,β}(z; p, q)` by termwise
/// differentiation.
pub fn ml_term_derivative(
    params: &MLParams,
    z: f64,
    n: usize,
    cfg: &SeriesConfig,
    qcfg: &QuadConfig,
) -> Result<EvalResult> {
    Ok(ExtendedMl::pq(params, z, n, cfg, qcfg)?.derivative(z, n))
}

/// `E_β(z) - [β E_{β+1}(z) + α z E'_{β+1}(z)]` for the extended function;
/// zero up to rounding when the recurrence holds.
pub fn ml_recurrence_residual(params: &MLParams, z: f64, cfg: &SeriesConfig, qcfg: &QuadConfig) -> Result<f64> {
    Ok(ExtendedMl::pq(params, z, 1, cfg, qcfg)?.recurrence_residual(z).0)
}
