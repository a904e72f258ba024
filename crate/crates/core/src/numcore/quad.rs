// Node tables keep the published digits.
#![allow(clippy::excessive_precision)]

//! Adaptive quadrature on finite and half-infinite intervals.
//!
//! Two schemes share one front end:
//!
//! * [`Scheme::AdaptiveKronrod`]: globally adaptive bisection with the
//!   21-point Gauss-Kronrod pair and the QUADPACK error heuristic. The
//!   interval is split at its midpoint and each half is parametrised by the
//!   distance to its own endpoint, so subintervals can shrink towards either
//!   endpoint far below `ulp(b)`.
//! * [`Scheme::DoubleExponential`]: tanh-sinh with step halving. Abscissae
//!   are generated together with their exact distances to both endpoints.
//!
//! Integrands that are singular or essentially decaying at an endpoint
//! should use the [`Abscissa`] entry points and read `from_lo` / `to_hi`
//! instead of recomputing `x - a` or `b - x`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::{EvalResult, Status};
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    #[default]
    AdaptiveKronrod,
    DoubleExponential,
}

/// Accuracy targets and refinement budget for every quadrature in the crate.
///
/// `max_refinements` bounds the work: for the Kronrod scheme the number of
/// subintervals is capped at `25 * max_refinements`; for the
/// double-exponential scheme it is the number of step halvings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_refinements: u32,
    pub scheme: Scheme,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-14, max_refinements: 20, scheme: Scheme::AdaptiveKronrod }
    }
}

impl QuadConfig {
    pub fn with_scheme(mut self, scheme: Scheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol > 0.0) {
            return Err(domain("quadrature tolerances must be positive"));
        }
        if self.max_refinements < 1 {
            return Err(domain("max_refinements must be at least 1"));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// A quadrature node with its exact distances to both interval endpoints.
#[derive(Debug, Clone, Copy)]
pub struct Abscissa {
    pub x: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// `∫_a^b f(x) dx`.
pub fn quad_finite<F>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    quad_finite_abscissa(|p: Abscissa| f(p.x), a, b, cfg)
}

/// `∫_a^b f dx` for an integrand that reads endpoint distances.
pub fn quad_finite_abscissa<F>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(Abscissa) -> f64,
{
    cfg.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(domain(format!("quadrature needs finite a < b, got ({a}, {b})")));
    }
    Ok(match cfg.scheme {
        Scheme::AdaptiveKronrod => kronrod_adaptive(&f, a, b, cfg),
        Scheme::DoubleExponential => tanh_sinh(&f, a, b, cfg),
    })
}

/// `∫_0^∞ f(u) du` via the compactifying map `u = t/(1-t)`.
pub fn quad_semi_infinite<F>(f: F, cfg: &QuadConfig) -> Result<EvalResult>
where
    F: Fn(f64) -> f64,
{
    quad_finite_abscissa(
        |p: Abscissa| {
            let u = p.from_lo / p.to_hi;
            let fu = f(u);
            if fu == 0.0 {
                0.0
            } else {
                fu / (p.to_hi * p.to_hi)
            }
        },
        0.0,
        1.0,
        cfg,
    )
}

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_590_346,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
// Gauss weights for XGK[1], XGK[3], …, XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Anchor {
    Lo,
    Hi,
}

/// A subinterval `[d0, d1]` measured as distance from one endpoint.
#[derive(Debug, Clone, Copy)]
struct Segment {
    anchor: Anchor,
    d0: f64,
    d1: f64,
    value: f64,
    err: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

struct Kronrod<'f, F> {
    f: &'f F,
    a: f64,
    b: f64,
    len: f64,
    evals: u64,
    bad_value: bool,
}

impl<F: Fn(Abscissa) -> f64> Kronrod<'_, F> {
    fn at(&mut self, anchor: Anchor, d: f64) -> f64 {
        self.evals += 1;
        let p = match anchor {
            Anchor::Lo => Abscissa { x: self.a + d, from_lo: d, to_hi: self.len - d },
            Anchor::Hi => Abscissa { x: self.b - d, from_lo: self.len - d, to_hi: d },
        };
        let v = (self.f)(p);
        if !v.is_finite() {
            self.bad_value = true;
            return 0.0;
        }
        v
    }

    fn segment(&mut self, anchor: Anchor, d0: f64, d1: f64, depth: u32) -> Segment {
        let centre = 0.5 * (d0 + d1);
        let half = 0.5 * (d1 - d0);
        let fc = self.at(anchor, centre);
        let mut resk = fc * WGK[10];
        let mut resg = 0.0;
        let mut resabs = resk.abs();
        let mut fv = [(0.0, 0.0); 10];
        for j in 0..10 {
            let dx = half * XGK[j];
            let f1 = self.at(anchor, centre - dx);
            let f2 = self.at(anchor, centre + dx);
            fv[j] = (f1, f2);
            resk += WGK[j] * (f1 + f2);
            resabs += WGK[j] * (f1.abs() + f2.abs());
            if j % 2 == 1 {
                resg += WG[j / 2] * (f1 + f2);
            }
        }
        let mean = 0.5 * resk;
        let mut resasc = WGK[10] * (fc - mean).abs();
        for j in 0..10 {
            resasc += WGK[j] * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
        }
        let value = resk * half;
        resabs *= half.abs();
        resasc *= half.abs();
        let mut err = ((resk - resg) * half).abs();
        if resasc != 0.0 && err != 0.0 {
            err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
        }
        if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            err = err.max(50.0 * f64::EPSILON * resabs);
        }
        Segment { anchor, d0, d1, value, err, depth }
    }
}

const MAX_DEPTH: u32 = 200;

fn kronrod_adaptive<F: Fn(Abscissa) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadConfig) -> EvalResult {
    let len = b - a;
    let mut k = Kronrod { f, a, b, len, evals: 0, bad_value: false };
    let half = 0.5 * len;
    let mut heap = BinaryHeap::new();
    heap.push(k.segment(Anchor::Lo, 0.0, half, 0));
    heap.push(k.segment(Anchor::Hi, 0.0, half, 0));
    let mut frozen: Vec<Segment> = Vec::new();
    let max_segments = 25 * cfg.max_refinements as usize;

    let totals = |heap: &BinaryHeap<Segment>, frozen: &[Segment]| {
        let (mut v, mut e) = (0.0, 0.0);
        for s in heap.iter().chain(frozen.iter()) {
            v += s.value;
            e += s.err;
        }
        (v, e)
    };

    let (mut value, mut err) = totals(&heap, &frozen);
    while err > cfg.target(value) && heap.len() + frozen.len() < max_segments {
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.d0 + worst.d1);
        if worst.depth >= MAX_DEPTH || mid <= worst.d0 || mid >= worst.d1 {
            frozen.push(worst);
            continue;
        }
        let left = k.segment(worst.anchor, worst.d0, mid, worst.depth + 1);
        let right = k.segment(worst.anchor, mid, worst.d1, worst.depth + 1);
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        if heap.len() % 64 == 0 {
            (value, err) = totals(&heap, &frozen);
        }
    }
    (value, err) = totals(&heap, &frozen);
    finish(value, err, k.evals, k.bad_value, cfg)
}

fn finish(value: f64, err: f64, evals: u64, bad_value: bool, cfg: &QuadConfig) -> EvalResult {
    let status = if bad_value || !value.is_finite() {
        Status::DomainError
    } else if err <= cfg.target(value) {
        Status::Converged
    } else {
        Status::ToleranceNotMet
    };
    EvalResult { value, abs_err_est: err, effort: evals, status }
}

/// Logistic `1/(1+e^{-v})` without overflow.
#[inline]
fn logistic(v: f64) -> f64 {
    if v >= 0.0 {
        1.0 / (1.0 + (-v).exp())
    } else {
        let e = v.exp();
        e / (1.0 + e)
    }
}

const DE_T_MAX: f64 = 6.0;

fn tanh_sinh<F: Fn(Abscissa) -> f64>(f: &F, a: f64, b: f64, cfg: &QuadConfig) -> EvalResult {
    let len = b - a;
    let mut evals = 0u64;
    let mut bad_value = false;

    // Contribution of the node at t, already multiplied by dx/dt.
    let mut node = |t: f64| -> (f64, f64) {
        let u = FRAC_PI_2 * t.sinh();
        let from_lo = len * logistic(2.0 * u);
        let to_hi = len * logistic(-2.0 * u);
        if from_lo == 0.0 || to_hi == 0.0 {
            return (0.0, 0.0);
        }
        let w = 2.0 * len * logistic(2.0 * u) * logistic(-2.0 * u) * FRAC_PI_2 * t.cosh();
        let x = if from_lo <= to_hi { a + from_lo } else { b - to_hi };
        evals += 1;
        let v = f(Abscissa { x, from_lo, to_hi });
        if !v.is_finite() {
            bad_value = true;
            return (0.0, 0.0);
        }
        (w * v, (w * v).abs())
    };

    let mut h = 1.0;
    let n0 = DE_T_MAX as i64;
    let (mut sum, mut sum_abs) = (0.0, 0.0);
    for k in -n0..=n0 {
        let (s, sa) = node(k as f64);
        sum += s;
        sum_abs += sa;
    }
    let mut estimate = sum * h;
    let mut err = f64::INFINITY;
    let mut level = 0;
    while level < cfg.max_refinements {
        level += 1;
        h *= 0.5;
        let count = (DE_T_MAX / h).ceil() as i64;
        let mut k = 1;
        while k <= count {
            let t = k as f64 * h;
            let (s1, a1) = node(t);
            let (s2, a2) = node(-t);
            sum += s1 + s2;
            sum_abs += a1 + a2;
            k += 2;
        }
        let next = sum * h;
        err = (next - estimate).abs().max(4.0 * f64::EPSILON * sum_abs * h);
        estimate = next;
        if level >= 3 && err <= cfg.target(estimate) {
            break;
        }
    }
    finish(estimate, err, evals, bad_value, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both() -> [QuadConfig; 2] {
        let c = QuadConfig::default();
        [c, c.with_scheme(Scheme::DoubleExponential)]
    }

    #[test]
    fn kronrod_tables_are_consistent() {
        let sk: f64 = WGK[10] + 2.0 * WGK[..10].iter().sum::<f64>();
        let sg: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!((sk - 2.0).abs() < 1e-15);
        assert!((sg - 2.0).abs() < 1e-15);
    }

    #[test]
    fn trivial_integrals() {
        for cfg in both() {
            let one = quad_finite(|_| 1.0, 0.0, 1.0, &cfg).unwrap();
            assert!((one.value - 1.0).abs() < 1e-14, "{cfg:?}");
            assert!(one.is_converged());
            let lin = quad_finite(|t| t, 0.0, 1.0, &cfg).unwrap();
            assert!((lin.value - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn polynomials_up_to_degree_five_are_exact() {
        for cfg in both() {
            for deg in 0..=5 {
                let r = quad_finite(|t| t.powi(deg), 0.0, 1.0, &cfg).unwrap();
                assert!((r.value - 1.0 / f64::from(deg + 1)).abs() < 1e-13, "deg {deg}");
            }
        }
    }

    #[test]
    fn semi_infinite_gamma_integrals() {
        for cfg in both() {
            let g1 = quad_semi_infinite(|u| (-u).exp(), &cfg).unwrap();
            let g2 = quad_semi_infinite(|u| u * (-u).exp(), &cfg).unwrap();
            let gh = quad_semi_infinite(|u| (-u).exp() / u.sqrt(), &cfg).unwrap();
            assert!((g1.value - 1.0).abs() < 1e-12, "{cfg:?} {g1:?}");
            assert!((g2.value - 1.0).abs() < 1e-12, "{cfg:?} {g2:?}");
            assert!((gh.value - 1.772_453_850_905_516).abs() < 1e-10, "{cfg:?} {gh:?}");
        }
    }

    #[test]
    fn right_endpoint_singularity_resolved() {
        // ∫_0^1 (1-t)^{-1/2} dt = 2, only reachable through `to_hi`.
        for cfg in both() {
            let r = quad_finite_abscissa(|p| p.to_hi.powf(-0.5), 0.0, 1.0, &cfg).unwrap();
            assert!((r.value - 2.0).abs() < 1e-10, "{cfg:?} {r:?}");
            assert!(r.is_converged());
        }
    }

    #[test]
    fn bad_interval_and_config() {
        let cfg = QuadConfig::default();
        assert!(quad_finite(|t| t, 1.0, 0.0, &cfg).is_err());
        let bad = QuadConfig { rel_tol: 0.0, ..cfg };
        assert!(quad_finite(|t| t, 0.0, 1.0, &bad).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let cfg = QuadConfig { max_refinements: 1, rel_tol: 1e-15, abs_tol: 1e-300, ..QuadConfig::default() };
        let r = quad_finite(|t| (1.0 / t).sin() / t.sqrt(), 0.0, 1.0, &cfg).unwrap();
        assert_eq!(r.status, Status::ToleranceNotMet);
    }

    #[test]
    fn non_finite_integrand_is_a_domain_error() {
        let r = quad_finite(|_| f64::NAN, 0.0, 1.0, &QuadConfig::default()).unwrap();
        assert_eq!(r.status, Status::DomainError);
    }
}
