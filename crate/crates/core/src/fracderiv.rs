//! Riemann-Liouville fractional integrals and derivatives, classical and with
//! the exponential kernels `e^{-p x²/(τ(x-τ))}` and `e^{-p x/τ - q x/(x-τ)}`.
//!
//! Negative orders `λ = -ν` are fractional integrals. The substitution
//! `x - τ = x v^{1/ν}` removes the `(x-τ)^{ν-1}` singularity:
//!
//! ```text
//! (1/Γ(ν)) ∫_0^x f(τ)(x-τ)^{ν-1} K dτ = x^ν/Γ(ν+1) ∫_0^1 f(x(1 - v^{1/ν})) K dv
//! ```
//!
//! Positive orders take `m = ⌊λ⌋ + 1` derivatives of the integral of order
//! `λ - m` by central differences with two Richardson steps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::extbeta::beta_classical;
use crate::mlcore::{ml_extended_pq, ExtendedMl, MLParams, PrabhakarSeries};
use crate::numcore::{gamma, quad_finite_abscissa, rgamma, Abscissa, EvalResult, QuadConfig, SeriesConfig, Status};

/// Order `λ` and the number `m` of classical derivatives it needs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FracOrder {
    pub lambda: f64,
    pub m: u32,
}

impl FracOrder {
    /// `m = 0` for `λ < 0`, otherwise `m = ⌊λ⌋ + 1` so that `m - 1 ≤ λ < m`.
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(domain(format!("order must be finite, got {lambda}")));
        }
        let m = if lambda < 0.0 { 0 } else { lambda.floor() as u32 + 1 };
        if m > 8 {
            return Err(domain(format!("orders above 8 are not supported, got {lambda}")));
        }
        Ok(Self { lambda, m })
    }

    pub fn validate(&self) -> Result<()> {
        let ok = if self.lambda < 0.0 {
            self.m == 0
        } else {
            self.m >= 1 && f64::from(self.m - 1) <= self.lambda && self.lambda < f64::from(self.m)
        };
        if ok && self.lambda.is_finite() {
            Ok(())
        } else {
            Err(domain(format!("inconsistent order: lambda = {}, m = {}", self.lambda, self.m)))
        }
    }

    pub fn is_integral(&self) -> bool {
        self.lambda < 0.0
    }
}

/// Kernel parameters `(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ExtKernelParams {
    pub p: f64,
    pub q: f64,
}

impl ExtKernelParams {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        let kp = Self { p, q };
        kp.validate()?;
        Ok(kp)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p >= 0.0 && self.q >= 0.0) || !self.p.is_finite() || !self.q.is_finite() {
            return Err(domain(format!("need p, q >= 0, got p = {}, q = {}", self.p, self.q)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
enum FracKernel {
    Classical,
    OneParam(f64),
    TwoParam(ExtKernelParams),
}

impl FracKernel {
    /// Log of the kernel at `τ`, with `gap = x - τ`.
    #[inline]
    fn log_at(self, x: f64, tau: f64, gap: f64) -> f64 {
        match self {
            FracKernel::Classical => 0.0,
            FracKernel::OneParam(0.0) => 0.0,
            FracKernel::OneParam(p) => -p * x * x / (tau * gap),
            FracKernel::TwoParam(kp) => {
                let mut s = 0.0;
                if kp.p != 0.0 {
                    s -= kp.p * x / tau;
                }
                if kp.q != 0.0 {
                    s -= kp.q * x / gap;
                }
                s
            }
        }
    }
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("evaluation point must be positive, got {x}")))
    }
}

/// Fractional integral of order `nu > 0` with the given kernel.
fn frac_integral<F>(f: &F, nu: f64, x: f64, kernel: FracKernel, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let inv = 1.0 / nu;
    let r = quad_finite_abscissa(
        |v: Abscissa| {
            let gap = x * v.from_lo.powf(inv);
            // x(1 - (1-w)^{1/ν}) without cancellation near τ = 0
            let tau = -x * (inv * (-v.to_hi).ln_1p()).exp_m1();
            let k = kernel.log_at(x, tau, gap);
            if k == f64::NEG_INFINITY || k < -745.0 {
                return 0.0;
            }
            f(tau) * k.exp()
        },
        0.0,
        1.0,
        qcfg,
    )?;
    Ok(r.scaled(x.powf(nu) * rgamma(nu + 1.0)))
}

/// `m`-th derivative of `g` at `x` by central differences with steps
/// `h, 2h, 4h` and Richardson extrapolation, `h = x · rel_tol^{1/(m+2)}`.
fn outer_derivative<G>(g: G, m: u32, x: f64, qcfg: &QuadConfig) -> Result<EvalResult>
where
    G: Fn(f64) -> Result<EvalResult>,
{
    let mf = f64::from(m);
    let h = (x * qcfg.rel_tol.powf(1.0 / (mf + 2.0))).min(x / (4.0 * mf));
    let binom: Vec<f64> = (0..=m)
        .scan(1.0, |c, j| {
            let out = *c;
            *c = *c * f64::from(m - j) / f64::from(j + 1);
            Some(out)
        })
        .collect();
    let mut status = Status::Converged;
    let mut effort = 0u64;
    let mut noise = 0.0_f64;
    let mut diff = |step: f64| -> Result<f64> {
        let mut acc = 0.0;
        for (j, &c) in binom.iter().enumerate() {
            let node = x + (mf / 2.0 - j as f64) * step;
            let r = g(node)?;
            status = EvalResult::worst_status(status, r.status);
            effort += r.effort;
            noise = noise.max(f64::EPSILON * r.value.abs());
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * c * r.value;
        }
        Ok(acc / step.powi(m as i32))
    };
    let d1 = diff(h)?;
    let d2 = diff(2.0 * h)?;
    let d4 = diff(4.0 * h)?;
    let r1 = (4.0 * d1 - d2) / 3.0;
    let r2 = (4.0 * d2 - d4) / 3.0;
    let value = (16.0 * r1 - r2) / 15.0;
    let amplification: f64 = binom.iter().sum::<f64>() / h.powi(m as i32);
    let abs_err_est = (r1 - r2).abs() + 4.0 * amplification * noise;
    let status =
        if status == Status::Converged && abs_err_est > qcfg.target(value) { Status::ToleranceNotMet } else { status };
    Ok(EvalResult { value, abs_err_est, effort, status })
}

fn frac_operator<F>(f: &F, order: FracOrder, x: f64, kernel: FracKernel, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    order.validate()?;
    check_x(x)?;
    qcfg.validate()?;
    if order.is_integral() {
        return frac_integral(f, -order.lambda, x, kernel, qcfg);
    }
    let nu = f64::from(order.m) - order.lambda;
    outer_derivative(|y| frac_integral(f, nu, y, kernel, qcfg), order.m, x, qcfg)
}

fn require_integral(order: FracOrder) -> Result<()> {
    if order.is_integral() {
        Ok(())
    } else {
        Err(domain(format!("this operator needs a negative order, got {}; use the _pos variant", order.lambda)))
    }
}

fn require_positive(order: FracOrder) -> Result<()> {
    if order.is_integral() {
        Err(domain(format!("this operator needs a non-negative order, got {}", order.lambda)))
    } else {
        Ok(())
    }
}

/// Classical fractional integral `(1/Γ(-λ)) ∫_0^x f(τ)(x-τ)^{-λ-1} dτ`, `λ < 0`.
pub fn rl_frac<F>(f: &F, order: FracOrder, x: f64, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    require_integral(order)?;
    frac_operator(f, order, x, FracKernel::Classical, qcfg)
}

/// Classical fractional derivative of order `λ ≥ 0`.
pub fn rl_frac_pos<F>(f: &F, order: FracOrder, x: f64, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    require_positive(order)?;
    frac_operator(f, order, x, FracKernel::Classical, qcfg)
}

fn check_p(p: f64) -> Result<()> {
    ExtKernelParams::new(p, 0.0).map(|_| ())
}

/// One-parameter extended integral with kernel `e^{-p x²/(τ(x-τ))}`, `λ < 0`.
pub fn rl_ext_p<F>(f: &F, order: FracOrder, x: f64, p: f64, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    require_integral(order)?;
    check_p(p)?;
    frac_operator(f, order, x, FracKernel::OneParam(p), qcfg)
}

/// One-parameter extended derivative of order `λ ≥ 0`.
pub fn rl_ext_p_pos<F>(f: &F, order: FracOrder, x: f64, p: f64, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    require_positive(order)?;
    check_p(p)?;
    frac_operator(f, order, x, FracKernel::OneParam(p), qcfg)
}

/// Two-parameter extended integral with kernel `e^{-p x/τ - q x/(x-τ)}`, `λ < 0`.
pub fn rl_ext_pq<F>(f: &F, order: FracOrder, x: f64, kp: ExtKernelParams, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    require_integral(order)?;
    kp.validate()?;
    frac_operator(f, order, x, FracKernel::TwoParam(kp), qcfg)
}

/// Two-parameter extended derivative of order `λ ≥ 0`.
pub fn rl_ext_pq_pos<F>(f: &F, order: FracOrder, x: f64, kp: ExtKernelParams, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    require_positive(order)?;
    kp.validate()?;
    frac_operator(f, order, x, FracKernel::TwoParam(kp), qcfg)
}

/// Any order and either kernel: integrals for `λ < 0`, derivatives otherwise.
pub fn rl_apply<F>(f: &F, order: FracOrder, x: f64, kp: ExtKernelParams, qcfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    kp.validate()?;
    let kernel = if kp.p == 0.0 && kp.q == 0.0 { FracKernel::Classical } else { FracKernel::TwoParam(kp) };
    frac_operator(f, order, x, kernel, qcfg)
}

/// Power rule `D^λ τ^a = Γ(a+1)/Γ(a+1-λ) x^{a-λ}` (zero when `a+1-λ` is a
/// non-positive integer).
pub fn power_rule(a: f64, lambda: f64, x: f64) -> Result<f64> {
    Ok(gamma(a + 1.0)? * rgamma(a + 1.0 - lambda) * x.powf(a - lambda))
}

/// Named integrand families for command-line use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegrandKind {
    /// `τ^a`
    Monomial,
    /// `τ^a e^{kτ}`
    Exponential,
    /// `τ^a E^γ_{α,β}(kτ)`
    PrabhakarMl,
    /// `τ^a E^{γ,c}_{α,β}(kτ; p, q)`
    ExtendedMl,
}

impl IntegrandKind {
    pub const ALL: [IntegrandKind; 4] =
        [IntegrandKind::Monomial, IntegrandKind::Exponential, IntegrandKind::PrabhakarMl, IntegrandKind::ExtendedMl];

    pub fn name(self) -> &'static str {
        match self {
            IntegrandKind::Monomial => "monomial",
            IntegrandKind::Exponential => "exponential",
            IntegrandKind::PrabhakarMl => "prabhakar-ml",
            IntegrandKind::ExtendedMl => "extended-ml",
        }
    }
}

impl fmt::Display for IntegrandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntegrandKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            let names: Vec<_> = Self::ALL.iter().map(|k| k.name()).collect();
            domain(format!("unknown integrand {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// An integrand family with its parameters. Fields a family does not use
/// are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrandSpec {
    pub kind: IntegrandKind,
    /// power of the `τ^a` prefactor
    pub a: f64,
    /// argument scale or exponential rate
    pub k: f64,
    pub ml: MLParams,
}

impl IntegrandSpec {
    pub fn monomial(a: f64) -> Self {
        Self {
            kind: IntegrandKind::Monomial,
            a,
            k: 1.0,
            ml: MLParams { alpha: 1.0, beta: 1.0, gamma: 1.0, c: 2.0, p: 0.0, q: 0.0 },
        }
    }

    pub fn exponential(a: f64, k: f64) -> Self {
        Self { kind: IntegrandKind::Exponential, k, ..Self::monomial(a) }
    }

    /// `τ^a E^γ_{α,β}(kτ)`; only `alpha`, `beta`, `gamma` of `ml` are read.
    pub fn prabhakar(a: f64, alpha: f64, beta: f64, gamma: f64, k: f64) -> Self {
        let mut s = Self::monomial(a);
        s.kind = IntegrandKind::PrabhakarMl;
        s.k = k;
        s.ml.alpha = alpha;
        s.ml.beta = beta;
        s.ml.gamma = gamma;
        s
    }

    pub fn extended(a: f64, ml: MLParams, k: f64) -> Self {
        Self { kind: IntegrandKind::ExtendedMl, a, k, ml }
    }

    /// Builds whatever coefficient tables the family needs for `τ ∈ (0, x_max]`.
    pub fn prepare(&self, x_max: f64) -> Result<Integrand> {
        if !self.a.is_finite() || !self.k.is_finite() {
            return Err(domain("integrand parameters must be finite"));
        }
        let cfg = SeriesConfig::default();
        let body = match self.kind {
            IntegrandKind::Monomial => Body::One,
            IntegrandKind::Exponential => Body::Exp(self.k),
            IntegrandKind::PrabhakarMl => {
                let m = &self.ml;
                if !(m.beta > 0.0) {
                    return Err(domain("prabhakar-ml integrand needs beta > 0"));
                }
                Body::Prabhakar(PrabhakarSeries::new(m.alpha, m.beta, m.gamma, self.k * x_max, &cfg)?, self.k)
            }
            IntegrandKind::ExtendedMl => Body::Extended(
                Box::new(ExtendedMl::pq(&self.ml, self.k * x_max, 0, &cfg, &QuadConfig::default())?),
                self.k,
            ),
        };
        Ok(Integrand { a: self.a, body })
    }
}

#[derive(Debug, Clone)]
enum Body {
    One,
    Exp(f64),
    Prabhakar(PrabhakarSeries, f64),
    Extended(Box<ExtendedMl>, f64),
}

/// A prepared integrand, cheap to evaluate and safe to share across threads.
#[derive(Debug, Clone)]
pub struct Integrand {
    a: f64,
    body: Body,
}

impl Integrand {
    pub fn eval(&self, tau: f64) -> f64 {
        let pw = if self.a == 0.0 { 1.0 } else { tau.powf(self.a) };
        let g = match &self.body {
            Body::One => 1.0,
            Body::Exp(k) => (k * tau).exp(),
            Body::Prabhakar(s, k) => s.value(k * tau),
            Body::Extended(e, k) => e.eval(k * tau).value,
        };
        pw * g
    }
}

/// Both sides of the fractional-integral image of `τ^{δ-1} E^λ_{α,β}(τ)`:
///
/// ```text
/// lhs = D^{δ-λ}_z { τ^{δ-1} E^λ_{α,β}(τ); p, q }
/// rhs = z^{λ-1} Γ(δ)/Γ(λ) · E^{δ,λ}_{α,β}(z; p, q)
/// ```
///
/// The left side is a kernel quadrature, the right side the coefficient
/// series.
#[allow(clippy::too_many_arguments)]
pub fn frac_image_pair(
    delta: f64,
    lam: f64,
    alpha: f64,
    beta: f64,
    kp: ExtKernelParams,
    z: f64,
    qcfg: &QuadConfig,
    cfg: &SeriesConfig,
) -> Result<(EvalResult, EvalResult)> {
    let (lhs, series) = frac_image_sides(delta, lam, lam, alpha, beta, kp, z, qcfg, cfg)?;
    let pre = z.powf(lam - 1.0) * gamma(delta)? / gamma(lam)?;
    Ok((lhs, series.scaled(pre)))
}

/// The same pair with the Prabhakar index of the input left free (`c`) and
/// the right side written as `z^{λ-1} B(δ, c-δ)/Γ(λ-δ) · E^{δ,λ}_{α,β}(z; p, q)`.
/// Coincides with [`frac_image_pair`] when `c = λ`.
#[allow(clippy::too_many_arguments)]
pub fn frac_image_printed_pair(
    delta: f64,
    lam: f64,
    c: f64,
    alpha: f64,
    beta: f64,
    kp: ExtKernelParams,
    z: f64,
    qcfg: &QuadConfig,
    cfg: &SeriesConfig,
) -> Result<(EvalResult, EvalResult)> {
    if !(c > delta) {
        return Err(domain(format!("need c > delta, got c = {c}, delta = {delta}")));
    }
    let (lhs, series) = frac_image_sides(delta, lam, c, alpha, beta, kp, z, qcfg, cfg)?;
    let pre = z.powf(lam - 1.0) * beta_classical(delta, c - delta)? / gamma(lam - delta)?;
    Ok((lhs, series.scaled(pre)))
}

#[allow(clippy::too_many_arguments)]
fn frac_image_sides(
    delta: f64,
    lam: f64,
    c: f64,
    alpha: f64,
    beta: f64,
    kp: ExtKernelParams,
    z: f64,
    qcfg: &QuadConfig,
    cfg: &SeriesConfig,
) -> Result<(EvalResult, EvalResult)> {
    if !(lam > delta && delta > 0.0) {
        return Err(domain(format!("need lambda > delta > 0, got delta = {delta}, lambda = {lam}")));
    }
    kp.validate()?;
    check_x(z)?;
    let inner = PrabhakarSeries::new(alpha, beta, c, z, cfg)?;
    if !(beta > 0.0) {
        return Err(domain("need beta > 0"));
    }
    let f = |tau: f64| tau.powf(delta - 1.0) * inner.value(tau);
    let lhs = rl_ext_pq(&f, FracOrder::new(delta - lam)?, z, kp, qcfg)?;
    let params = MLParams::new(alpha, beta, delta, lam, kp.p, kp.q)?;
    let series = ml_extended_pq(&params, z, cfg, qcfg)?;
    Ok((lhs, series))
}
