//! Adaptive Gauss-Kronrod and tanh-sinh quadrature on finite and half-infinite ranges.
use pqml::numcore::{quad_finite, quad_semi_infinite};
use pqml::{QuadConfig, Scheme};

fn main() -> pqml::Result<()> {
    let kronrod = QuadConfig::default();
    let tanh_sinh = QuadConfig::default().with_scheme(Scheme::DoubleExponential);

    // endpoint singularity: ∫_0^1 t^{-1/2} dt = 2
    let sing = |t: f64| t.powf(-0.5);
    for (name, cfg) in [("kronrod", &kronrod), ("tanh-sinh", &tanh_sinh)] {
        let r = quad_finite(sing, 0.0, 1.0, cfg)?;
        println!("{name:>9}: {:.15} ± {:.1e} ({} evaluations, {})", r.value, r.abs_err_est, r.effort, r.status);
    }

    // ∫_0^∞ e^{-u} u^2 du = 2
    let r = quad_semi_infinite(|u| (-u).exp() * u * u, &kronrod)?;
    println!("half-line: {:.15} ± {:.1e}", r.value, r.abs_err_est);

    // smooth bump with essential singularities at both ends
    let bump = |t: f64| (-1.0 / (t * (1.0 - t))).exp();
    let r = quad_finite(bump, 0.0, 1.0, &kronrod.with_rel_tol(1e-13))?;
    println!("bump:      {:.17e}", r.value);
    Ok(())
}
