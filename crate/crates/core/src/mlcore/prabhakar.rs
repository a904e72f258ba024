use crate::error::{domain, Result};
use crate::numcore::{log_abs_gamma, rgamma, sum_series, EvalResult, SeriesConfig, TermFlow};

/// Margin between the series stopping threshold and the horizon used when
/// tabulating coefficients, so that cancelling (negative-argument) sums
/// still find their tail guard inside the table.
pub(crate) const HORIZON_MARGIN: f64 = 1e-4;

/// Tabulated coefficients `(γ)_n / (n! Γ(ρn + σ))` of the Prabhakar function
/// `E^γ_{ρ,σ}`, valid for arguments with `|z| <= z_max`.
///
/// Building the table once and evaluating it at many points is how the
/// integral representations and fractional-integral integrands use it.
#[derive(Debug, Clone)]
pub struct PrabhakarSeries {
    rho: f64,
    sigma: f64,
    gamma: f64,
    z_max: f64,
    coeffs: Vec<f64>,
    cfg: SeriesConfig,
}

impl PrabhakarSeries {
    /// `sigma` may be any real: at gamma poles the coefficient is zero.
    pub fn new(rho: f64, sigma: f64, gamma: f64, z_max: f64, cfg: &SeriesConfig) -> Result<Self> {
        cfg.validate()?;
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(domain(format!("Prabhakar order must be positive, got {rho}")));
        }
        if !sigma.is_finite() || !gamma.is_finite() || !z_max.is_finite() {
            return Err(domain("Prabhakar parameters must be finite"));
        }
        let z_max = z_max.abs();
        let mut coeffs = Vec::new();
        let mut pfac = 1.0_f64;
        let mut zp = 1.0_f64;
        let mut majorant = 0.0_f64;
        let mut run = 0usize;
        for n in 0..cfg.max_terms {
            if n > 0 {
                let k = (n - 1) as f64;
                pfac *= (gamma + k) / (k + 1.0);
                zp *= z_max;
            }
            let a = pfac * rgamma(rho * n as f64 + sigma);
            coeffs.push(a);
            let m = (a * zp).abs();
            majorant += m;
            if m <= HORIZON_MARGIN * cfg.rel_tol * majorant {
                run += 1;
                if run >= cfg.tail_guard {
                    break;
                }
            } else {
                run = 0;
            }
        }
        for _ in 0..cfg.tail_guard {
            if coeffs.len() >= cfg.max_terms {
                break;
            }
            let n = coeffs.len();
            let k = (n - 1) as f64;
            pfac *= (gamma + k) / (k + 1.0);
            coeffs.push(pfac * rgamma(rho * n as f64 + sigma));
        }
        Ok(Self { rho, sigma, gamma, z_max, coeffs, cfg: *cfg })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn z_max(&self) -> f64 {
        self.z_max
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: f64) -> EvalResult {
        let mut zp = 1.0;
        sum_series(&self.cfg, self.cfg.rel_tol, |n| {
            let Some(&a) = self.coeffs.get(n) else {
                return TermFlow::Exhausted;
            };
            if n > 0 {
                zp *= z;
            }
            TermFlow::exact(a * zp)
        })
    }

    #[inline]
    pub fn value(&self, z: f64) -> f64 {
        self.eval(z).value
    }
}

/// Prabhakar function `E^γ_{ρ,σ}(z) = Σ (γ)_n z^n / (Γ(ρn+σ) n!)`.
pub fn ml_prabhakar(rho: f64, sigma: f64, gamma: f64, z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    if !(sigma > 0.0) {
        return Err(domain(format!("Prabhakar shift must be positive, got {sigma}")));
    }
    Ok(PrabhakarSeries::new(rho, sigma, gamma, z, cfg)?.eval(z))
}

/// Shukla-Prajapati function `Σ (δ)_{nk} z^n / (Γ(ρn+σ) n!)`.
///
/// The series converges everywhere for `k < ρ + 1`, has radius
/// `ρ^ρ / k^k` for `k = ρ + 1`, and diverges otherwise; divergence shows up
/// as a `tolerance-not-met` status.
pub fn ml_shukla(rho: f64, sigma: f64, delta: f64, k: u32, z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !(rho > 0.0) || !(sigma > 0.0) {
        return Err(domain(format!("Shukla function needs rho, sigma > 0, got ({rho}, {sigma})")));
    }
    if k == 0 {
        return Err(domain("Shukla exponent multiplier k must be at least 1"));
    }
    if !delta.is_finite() || !z.is_finite() {
        return Err(domain("Shukla parameters must be finite"));
    }
    let kf = f64::from(k);
    // ln |(δ)_{nk} / n!| and its sign, advanced term by term.
    let mut ln_c = 0.0_f64;
    let mut sign_c = 1.0_f64;
    let ln_z = z.abs().ln();
    Ok(sum_series(cfg, cfg.rel_tol, |n| {
        if n > 0 {
            let base = delta + (n - 1) as f64 * kf;
            for j in 0..k {
                let f = base + f64::from(j);
                if f == 0.0 {
                    sign_c = 0.0;
                } else {
                    ln_c += f.abs().ln();
                    sign_c *= f.signum();
                }
            }
            ln_c -= (n as f64).ln();
        }
        if sign_c == 0.0 {
            return TermFlow::exact(0.0);
        }
        let (lg, sign_g) = log_abs_gamma(rho * n as f64 + sigma);
        if sign_g == 0.0 {
            return TermFlow::exact(0.0);
        }
        if n == 0 {
            return TermFlow::exact(sign_c * sign_g * (-lg).exp());
        }
        if z == 0.0 {
            return TermFlow::exact(0.0);
        }
        let sign_z = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        TermFlow::exact(sign_c * sign_g * sign_z * (ln_c + n as f64 * ln_z - lg).exp())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{gamma, Status};

    const E: f64 = std::f64::consts::E;

    #[test]
    fn exponential_and_cosh() {
        let cfg = SeriesConfig::default();
        let e = ml_prabhakar(1.0, 1.0, 1.0, 1.0, &cfg).unwrap();
        assert!((e.value - E).abs() < 1e-15 * E);
        assert!(e.is_converged());
        let c = ml_prabhakar(2.0, 1.0, 1.0, 1.0, &cfg).unwrap();
        assert!((c.value - 1.543_080_634_815_243_7).abs() < 1e-15);
        let neg = ml_prabhakar(1.0, 1.0, 1.0, -3.0, &cfg).unwrap();
        assert!((neg.value - (-3.0f64).exp()).abs() < 1e-13 * (-3.0f64).exp());
    }

    #[test]
    fn zero_argument() {
        let cfg = SeriesConfig::default();
        let r = ml_prabhakar(0.7, 1.6, 2.3, 0.0, &cfg).unwrap();
        assert!((r.value - 1.0 / gamma(1.6).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn shukla_k1_is_prabhakar() {
        let cfg = SeriesConfig::default();
        let s = ml_shukla(1.0, 2.0, 1.5, 1, 0.7, &cfg).unwrap();
        let p = ml_prabhakar(1.0, 2.0, 1.5, 0.7, &cfg).unwrap();
        assert!((s.value - p.value).abs() <= 1e-12 * p.value.abs());
        let z0 = ml_shukla(1.3, 2.5, 0.4, 3, 0.0, &cfg).unwrap();
        assert!((z0.value - 1.0 / gamma(2.5).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn shukla_outside_radius_fails_loudly() {
        // k = ρ + 1 = 2 gives radius 1/4.
        let r = ml_shukla(1.0, 1.0, 0.5, 2, 0.3, &SeriesConfig::default()).unwrap();
        assert_eq!(r.status, Status::ToleranceNotMet);
    }

    #[test]
    fn invalid_parameters() {
        let cfg = SeriesConfig::default();
        assert!(ml_prabhakar(0.0, 1.0, 1.0, 1.0, &cfg).is_err());
        assert!(ml_prabhakar(1.0, -1.0, 1.0, 1.0, &cfg).is_err());
        assert!(ml_shukla(1.0, 1.0, 1.0, 0, 1.0, &cfg).is_err());
    }

    #[test]
    fn table_reuse_matches_fresh_evaluation() {
        let cfg = SeriesConfig::default();
        let table = PrabhakarSeries::new(0.8, 1.1, 2.5, 2.0, &cfg).unwrap();
        for z in [-2.0, -0.3, 0.0, 0.9, 2.0] {
            let fresh = ml_prabhakar(0.8, 1.1, 2.5, z, &cfg).unwrap();
            assert!((table.value(z) - fresh.value).abs() <= 1e-14 * fresh.value.abs().max(1.0));
        }
    }

    #[test]
    fn terminating_series_for_negative_integer_gamma() {
        // (−2)_n vanishes for n ≥ 3: E^{-2}_{1,1}(z) = 1 - 2z + z²/2·(1/1)·…
        let cfg = SeriesConfig::default();
        let z = 0.6;
        let exact = 1.0 - 2.0 * z + 1.0 * z * z / 2.0;
        let r = ml_prabhakar(1.0, 1.0, -2.0, z, &cfg).unwrap();
        assert!((r.value - exact).abs() < 1e-15);
    }
}
