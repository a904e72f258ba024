//! Fox-Wright generalized hypergeometric series `pΨq` and the closed form of
//! the Mellin transform (in `p` and `q`) of the extended function.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::mlcore::MLParams;
use crate::numcore::{is_gamma_pole, log_abs_gamma, log_gamma, sum_series, EvalResult, SeriesConfig, TermFlow};

/// Parameter pairs of `pΨq[(a_i, μ_i); (b_j, λ_j); z]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WrightSpec {
    /// `(a_i, μ_i)`, `μ_i > 0`
    pub upper: Vec<(f64, f64)>,
    /// `(b_j, λ_j)`, `λ_j > 0`
    pub lower: Vec<(f64, f64)>,
}

/// `Δ` within this distance of zero counts as the boundary case.
const DELTA_EPS: f64 = 1e-12;

impl WrightSpec {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        let spec = Self { upper, lower };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for &(a, w) in self.upper.iter().chain(&self.lower) {
            if !a.is_finite() || !w.is_finite() {
                return Err(domain("Wright parameters must be finite"));
            }
            if !(w > 0.0) {
                return Err(domain(format!("Wright weights must be positive, got {w}")));
            }
        }
        if self.delta() < -DELTA_EPS {
            return Err(domain(format!("Wright series diverges: 1 + sum(lambda) - sum(mu) = {} < 0", self.delta())));
        }
        Ok(())
    }

    /// `1 + Σλ_j − Σμ_i`.
    pub fn delta(&self) -> f64 {
        1.0 + self.lower.iter().map(|l| l.1).sum::<f64>() - self.upper.iter().map(|u| u.1).sum::<f64>()
    }

    /// Radius of convergence: infinite for `Δ > 0`, `Πλ^λ / Πμ^μ` for `Δ = 0`.
    pub fn radius(&self) -> f64 {
        if self.delta() > DELTA_EPS {
            return f64::INFINITY;
        }
        let ln_r = self.lower.iter().map(|&(_, l)| l * l.ln()).sum::<f64>()
            - self.upper.iter().map(|&(_, m)| m * m.ln()).sum::<f64>();
        ln_r.exp()
    }
}

/// `Σ_n Π Γ(a_i + μ_i n) / Π Γ(b_j + λ_j n) · z^n / n!`.
///
/// Terms are formed in log space with explicit signs. A pole among the
/// lower gammas makes the term zero; a pole among the upper ones makes the
/// series undefined.
pub fn wright_psi(spec: &WrightSpec, z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    spec.validate()?;
    cfg.validate()?;
    if !z.is_finite() {
        return Err(domain("Wright argument must be finite"));
    }
    let radius = spec.radius();
    if z.abs() >= radius {
        return Err(domain(format!("|z| = {} is outside the radius of convergence {radius}", z.abs())));
    }
    let last = if z == 0.0 { 1 } else { cfg.max_terms };
    for &(a, m) in &spec.upper {
        if (0..last).any(|n| is_gamma_pole(a + m * n as f64)) {
            return Err(domain(format!("upper Wright gamma Γ({a} + {m} n) hits a pole")));
        }
    }
    let ln_z = z.abs().ln();
    Ok(sum_series(cfg, cfg.rel_tol, |n| {
        if n > 0 && z == 0.0 {
            return TermFlow::exact(0.0);
        }
        let nf = n as f64;
        let mut ln_t = 0.0;
        let mut sign = 1.0;
        for &(a, m) in &spec.upper {
            let (lg, s) = log_abs_gamma(a + m * nf);
            ln_t += lg;
            sign *= s;
        }
        for &(b, l) in &spec.lower {
            let (lg, s) = log_abs_gamma(b + l * nf);
            if s == 0.0 {
                return TermFlow::exact(0.0);
            }
            ln_t -= lg;
            sign *= s;
        }
        if n > 0 {
            ln_t += nf * ln_z - libm::lgamma(nf + 1.0);
            if z < 0.0 && n % 2 == 1 {
                sign = -sign;
            }
        }
        TermFlow::exact(sign * ln_t.exp())
    }))
}

/// Which lower pair the second Wright parameter uses in the Mellin closed
/// form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MellinVariant {
    /// `(β, α)`: the lower pair matching `Γ(αn + β)` in the series.
    #[default]
    Derived,
    /// `(β, γ)`: kept to measure how far it is from the transform.
    AsPrinted,
}

/// `Γ(s)Γ(r)Γ(c+r−γ) / (Γ(γ)Γ(c−γ)) · 2Ψ2[(c,1),(γ+s,1); (β,α),(c+s+r,1); z]`,
/// the transform `∫∫ p^{s-1} q^{r-1} E^{γ,c}_{α,β}(z; p, q) dp dq`.
///
/// `params.p` and `params.q` are ignored.
pub fn mellin_closed_form(params: &MLParams, s: f64, r: f64, z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
    mellin_closed_form_variant(params, s, r, z, MellinVariant::Derived, cfg)
}

pub fn mellin_closed_form_variant(
    params: &MLParams,
    s: f64,
    r: f64,
    z: f64,
    variant: MellinVariant,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    params.validate()?;
    if !(s > 0.0 && r > 0.0) {
        return Err(domain(format!("Mellin variables need s, r > 0, got s = {s}, r = {r}")));
    }
    let (a, b, g, c) = (params.alpha, params.beta, params.gamma, params.c);
    let weight = match variant {
        MellinVariant::Derived => a,
        MellinVariant::AsPrinted => g,
    };
    let spec = WrightSpec::new(vec![(c, 1.0), (g + s, 1.0)], vec![(b, weight), (c + s + r, 1.0)])?;
    let ln_pre = log_gamma(s)? + log_gamma(r)? + log_gamma(c + r - g)? - log_gamma(g)? - log_gamma(c - g)?;
    Ok(wright_psi(&spec, z, cfg)?.scaled(ln_pre.exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mlcore::ml_prabhakar;
    use crate::numcore::gamma;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn cancelling_pairs_give_exponential() {
        let spec = WrightSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        for z in [-1.0, 0.0, 0.5, 2.0] {
            let r = wright_psi(&spec, z, &cfg()).unwrap();
            let e = f64::exp(z);
            assert!((r.value - e).abs() <= 1e-12 * e, "z={z}: {r:?}");
            assert!(r.is_converged());
        }
    }

    #[test]
    fn prabhakar_as_1psi1() {
        let (a, b, g, z) = (0.7, 1.3, 2.0, 0.5);
        let spec = WrightSpec::new(vec![(g, 1.0)], vec![(b, a)]).unwrap();
        let w = wright_psi(&spec, z, &cfg()).unwrap().value;
        let p = gamma(g).unwrap() * ml_prabhakar(a, b, g, z, &cfg()).unwrap().value;
        assert!((w - p).abs() <= 1e-10 * p.abs());
    }

    #[test]
    fn validation() {
        assert!(WrightSpec::new(vec![(1.0, 0.0)], vec![]).is_err());
        assert!(WrightSpec::new(vec![(1.0, 1.0), (1.0, 1.0)], vec![(1.0, 0.5)]).is_err());
        // Δ = 0: 2Ψ1 with unit weights is Gauss-like, radius 1
        let gauss = WrightSpec::new(vec![(1.0, 1.0), (1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        assert_eq!(gauss.radius(), 1.0);
        assert!(wright_psi(&gauss, 1.5, &cfg()).is_err());
        // Σ n! z^n / n! = 1/(1-z)
        let r = wright_psi(&gauss, 0.5, &cfg()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-11, "{r:?}");
        let pole = WrightSpec::new(vec![(-1.0, 1.0)], vec![(1.0, 1.0)]).unwrap();
        assert!(wright_psi(&pole, 0.3, &cfg()).is_err());
    }

    #[test]
    fn lower_pole_terms_vanish() {
        // 1/Γ(n) kills n = 0: Σ_{n≥1} z^n / (n! Γ(n)) = z + z²/2 + z³/12 + z⁴/144 + …
        let spec = WrightSpec::new(vec![], vec![(0.0, 1.0)]).unwrap();
        let z = 1e-3;
        let r = wright_psi(&spec, z, &cfg()).unwrap();
        assert!((r.value - (z + z * z / 2.0 + z.powi(3) / 12.0 + z.powi(4) / 144.0)).abs() < 1e-14 * z, "{r:?}");
        assert_eq!(wright_psi(&spec, 0.0, &cfg()).unwrap().value, 0.0);
    }

    #[test]
    fn mellin_closed_form_at_zero() {
        let params = MLParams::new(1.0, 1.0, 1.2, 2.5, 0.0, 0.0).unwrap();
        let (s, r) = (1.5, 2.0);
        let (g, c) = (1.2, 2.5);
        let expected = gamma(s).unwrap()
            * gamma(r).unwrap()
            * gamma(c + r - g).unwrap()
            * gamma(c).unwrap()
            * gamma(g + s).unwrap()
            / (gamma(g).unwrap() * gamma(c - g).unwrap() * gamma(1.0).unwrap() * gamma(c + s + r).unwrap());
        let v = mellin_closed_form(&params, s, r, 0.0, &cfg()).unwrap().value;
        assert!((v - expected).abs() < 1e-13 * expected);
        let printed = mellin_closed_form_variant(&params, s, r, 0.0, MellinVariant::AsPrinted, &cfg()).unwrap();
        assert_eq!(printed.value, v);
        assert!(mellin_closed_form(&params, 0.0, r, 0.0, &cfg()).is_err());
    }
}
