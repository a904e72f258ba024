use proptest::prelude::*;

use pqml::cli::fmt_exact;
use pqml::extbeta::{beta_classical, beta_p, beta_pq};
use pqml::mlcore::{ml_extended_p, ml_extended_pq, ml_prabhakar, ml_term_derivative};
use pqml::numcore::{gamma, pochhammer, quad_finite, rgamma};
use pqml::transforms::{mellin_numeric, MellinPoint};
use pqml::verifier::{run_suite, IdentityReport, SuiteConfig};
use pqml::wright::{wright_psi, WrightSpec};
use pqml::{MLParams, QuadConfig, Scheme, SeriesConfig};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn ml_params() -> impl Strategy<Value = MLParams> {
    (0.5..2.0f64, 0.5..2.0f64, 0.3..2.0f64, 0.2..2.0f64, 0.0..1.5f64, 0.0..1.5f64)
        .prop_map(|(alpha, beta, gamma, gap, p, q)| MLParams { alpha, beta, gamma, c: gamma + gap, p, q })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_functional_equation(x in 0.05..30.0f64) {
        let g1 = gamma(x + 1.0).unwrap();
        prop_assert!((g1 - x * gamma(x).unwrap()).abs() <= 1e-12 * g1.abs());
    }

    #[test]
    fn rgamma_inverts_gamma(x in -20.0..30.0f64) {
        prop_assume!((x - x.round()).abs() > 1e-3 || x > 0.5);
        prop_assert!((rgamma(x) * gamma(x).unwrap() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn pochhammer_splits(a in 0.0..5.0f64, m in 0u32..=10, n in 0u32..=10) {
        let whole = pochhammer(a, m + n);
        let split = pochhammer(a, m) * pochhammer(a + f64::from(m), n);
        prop_assert!((whole - split).abs() <= 1e-12 * whole.abs().max(f64::MIN_POSITIVE));
    }

    #[test]
    fn quadrature_exact_on_quintics(c in prop::array::uniform6(-3.0..3.0f64), de in any::<bool>()) {
        let cfg = QuadConfig::default().with_scheme(if de { Scheme::DoubleExponential } else { Scheme::AdaptiveKronrod });
        let poly = |x: f64| c.iter().rev().fold(0.0, |acc, &k| acc * x + k);
        let exact: f64 = c.iter().enumerate().map(|(i, k)| k / (i as f64 + 1.0)).sum();
        let got = quad_finite(poly, 0.0, 1.0, &cfg).unwrap();
        prop_assert!((got.value - exact).abs() <= 1e-13, "{} vs {}", got.value, exact);
    }

    #[test]
    fn quadrature_is_linear(k in 0.5..8.0f64, b in -2.0..2.0f64, lo in -1.0..0.0f64, hi in 0.5..2.0f64) {
        let cfg = QuadConfig::default();
        let f = |x: f64| (k * x).sin();
        let g = |x: f64| (b * x).exp();
        let sum = quad_finite(|x| f(x) + g(x), lo, hi, &cfg).unwrap();
        let rf = quad_finite(f, lo, hi, &cfg).unwrap();
        let rg = quad_finite(g, lo, hi, &cfg).unwrap();
        let slack = sum.abs_err_est + rf.abs_err_est + rg.abs_err_est + 1e-14 * sum.value.abs();
        prop_assert!((sum.value - rf.value - rg.value).abs() <= slack);
    }

    #[test]
    fn kernel_exponents_collapse(ratio in 0.2..0.8f64, x in 0.5..2.0f64, p in 0.0..0.5f64) {
        let tau = ratio * x;
        let split = p * x / tau + p * x / (x - tau);
        let joint = p * x * x / (tau * (x - tau));
        prop_assert!((split - joint).abs() <= 1e-14);
    }

    #[test]
    fn full_precision_output_round_trips(bits in any::<u64>()) {
        let v = f64::from_bits(bits);
        prop_assume!(v.is_finite());
        prop_assert_eq!(fmt_exact(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
    }

    #[test]
    fn report_integrity(errs in prop::collection::vec(0.0..1e-6f64, 1..40), tol in 1e-9..1e-6f64) {
        let r = IdentityReport::from_errors("x", &errs, tol, String::new());
        prop_assert_eq!(r.pass, r.max_rel_err <= r.tolerance);
        prop_assert!(r.median_rel_err <= r.max_rel_err);
        prop_assert_eq!(r.grid_size, errs.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extended_beta_symmetry_and_bounds(x in 0.3..4.0f64, y in 0.3..4.0f64, p in 0.0..2.0f64, q in 0.0..2.0f64) {
        let cfg = QuadConfig::default();
        let b = beta_pq(x, y, p, q, &cfg).unwrap().value;
        let s = beta_pq(y, x, q, p, &cfg).unwrap().value;
        prop_assert!(rel(b, s) <= 1e-10);
        prop_assert!(b > 0.0 && b <= beta_classical(x, y).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn extended_beta_decreases_in_p(x in 0.3..4.0f64, y in 0.3..4.0f64, p1 in 0.0..1.5f64, dp in 0.01..1.0f64, q in 0.0..1.5f64) {
        let cfg = QuadConfig::default();
        prop_assert!(beta_pq(x, y, p1, q, &cfg).unwrap().value > beta_pq(x, y, p1 + dp, q, &cfg).unwrap().value);
    }

    #[test]
    fn extended_beta_reductions(x in 0.3..4.0f64, y in 0.3..4.0f64, p in 0.0..2.0f64) {
        let cfg = QuadConfig::default();
        prop_assert!(rel(beta_pq(x, y, p, p, &cfg).unwrap().value, beta_p(x, y, p, &cfg).unwrap().value) <= 1e-10);
        prop_assert!(rel(beta_p(x, y, 0.0, &cfg).unwrap().value, beta_classical(x, y).unwrap()) <= 1e-10);
    }

    #[test]
    fn ml_reduction_chain(params in ml_params(), z in -2.0..2.0f64) {
        let (s, q) = (SeriesConfig { rel_tol: 1e-14, ..Default::default() }, QuadConfig::default().with_rel_tol(1e-12));
        let diag = params.with_pq(params.p, params.p);
        let two = ml_extended_pq(&diag, z, &s, &q).unwrap().value;
        let one = ml_extended_p(&diag, z, &s, &q).unwrap().value;
        prop_assert!((two - one).abs() <= 1e-10 * one.abs());
        let zero = params.with_pq(0.0, 0.0);
        let e0 = ml_extended_pq(&zero, z, &s, &q).unwrap().value;
        let pr = ml_prabhakar(params.alpha, params.beta, params.gamma, z, &s).unwrap().value;
        prop_assert!((e0 - pr).abs() <= 1e-10 * pr.abs());
    }

    #[test]
    fn ml_positive_on_nonnegative_axis(params in ml_params(), z in 0.0..3.0f64) {
        let (s, q) = (SeriesConfig::default(), QuadConfig::default());
        let at0 = ml_extended_pq(&params, 0.0, &s, &q).unwrap().value;
        let at_z = ml_extended_pq(&params, z, &s, &q).unwrap().value;
        prop_assert!(at0 > 0.0);
        prop_assert!(at_z >= at0);
    }

    #[test]
    fn ml_derivative_matches_difference(params in ml_params(), z in -1.5..1.5f64) {
        let (s, q) = (SeriesConfig { rel_tol: 1e-14, ..Default::default() }, QuadConfig::default().with_rel_tol(1e-12));
        let h = 1e-5;
        let f = |x: f64| ml_extended_pq(&params, x, &s, &q).unwrap().value;
        let fd = (f(z + h) - f(z - h)) / (2.0 * h);
        let d = ml_term_derivative(&params, z, 1, &s, &q).unwrap().value;
        prop_assert!((fd - d).abs() <= 1e-6 * d.abs().max(1e-3), "{fd} vs {d}");
    }

    #[test]
    fn wright_generalises_prabhakar(alpha in 0.5..2.5f64, beta in 0.3..2.5f64, g in 0.2..3.0f64, z in -2.0..2.0f64) {
        let s = SeriesConfig::default();
        let spec = WrightSpec::new(vec![(g, 1.0)], vec![(beta, alpha)]).unwrap();
        let w = wright_psi(&spec, z, &s).unwrap().value;
        let p = gamma(g).unwrap() * ml_prabhakar(alpha, beta, g, z, &s).unwrap().value;
        prop_assert!((w - p).abs() <= 1e-10 * p.abs());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn mellin_stable_under_tolerance(alpha in 0.5..2.0f64, s in 0.7..2.0f64, r in 0.7..2.0f64, z in 0.0..0.5f64) {
        let params = MLParams::new(alpha, 1.0, 1.2, 2.5, 0.0, 0.0).unwrap();
        let pt = MellinPoint::new(s, r).unwrap();
        let a = mellin_numeric(&params, pt, z, &QuadConfig::default().with_rel_tol(1e-8)).unwrap();
        let b = mellin_numeric(&params, pt, z, &QuadConfig::default().with_rel_tol(2e-8)).unwrap();
        prop_assert!((a.value - b.value).abs() <= a.abs_err_est + b.abs_err_est + 1e-15 * a.value.abs());
    }
}

#[test]
fn suite_runs_are_bit_identical() {
    let cfg = SuiteConfig::parse(
        "identities = [\"integral-representations\", \"derivative-shift\", \"mellin\"]\n\
         [grid]\nalpha = [0.5, 2.0]\nbeta = [1.0]\nz = [-2.0, 0.5]\n\
         [mellin]\nalpha = [1.0]\nbeta = [1.0]\nbrute_force = false\ndiagonal = false\n",
    )
    .unwrap();
    let a = run_suite(&cfg).unwrap();
    let b = run_suite(&cfg).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.reports.len(), 3);
}

#[test]
fn tightening_tolerance_stays_within_error_budget() {
    let params = MLParams::new(0.8, 1.3, 1.2, 2.5, 0.25, 1.0).unwrap();
    let s = SeriesConfig { rel_tol: 1e-14, ..Default::default() };
    for z in [-2.0, 0.5, 2.0] {
        let loose = ml_extended_pq(&params, z, &s, &QuadConfig::default().with_rel_tol(1e-8)).unwrap();
        let tight = ml_extended_pq(&params, z, &s, &QuadConfig::default().with_rel_tol(1e-12)).unwrap();
        assert!((loose.value - tight.value).abs() <= loose.abs_err_est + tight.abs_err_est);
    }
}
