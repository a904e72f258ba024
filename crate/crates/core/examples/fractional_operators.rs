//! Classical and extended Riemann-Liouville integrals and derivatives.
use pqml::fracderiv::{
    power_rule, rl_apply, rl_ext_p, rl_ext_pq, rl_frac, rl_frac_pos, ExtKernelParams, FracOrder, IntegrandSpec,
};
use pqml::{MLParams, QuadConfig};

fn main() -> pqml::Result<()> {
    let qcfg = QuadConfig::default();
    let sq = |t: f64| t * t;

    // integral of order 1/2 and derivative of order 1/2 against the power rule
    let half_int = rl_frac(&sq, FracOrder::new(-0.5)?, 1.0, &qcfg)?;
    println!("D^-0.5 t^2 at 1: {:.15}  exact {:.15}", half_int.value, power_rule(2.0, -0.5, 1.0)?);
    let half_der = rl_frac_pos(&sq, FracOrder::new(0.5)?, 1.0, &qcfg)?;
    println!(
        "D^0.5  t^2 at 1: {:.12}  exact {:.12} (± {:.1e})",
        half_der.value,
        power_rule(2.0, 0.5, 1.0)?,
        half_der.abs_err_est
    );

    // extended kernels damp the integral
    let one = |_: f64| 1.0;
    let order = FracOrder::new(-0.5)?;
    println!("p=0.5 one-parameter kernel: {:.15}", rl_ext_p(&one, order, 1.0, 0.5, &qcfg)?.value);
    let kp = ExtKernelParams::new(0.3, 0.6)?;
    println!("p=0.3, q=0.6 two-parameter: {:.15}", rl_ext_pq(&one, order, 1.0, kp, &qcfg)?.value);

    // a registry integrand under any order
    let ml = MLParams::new(1.0, 1.0, 1.2, 2.5, 0.3, 0.6)?;
    let f = IntegrandSpec::extended(0.5, ml, 1.0).prepare(2.0)?;
    for lam in [-1.3, -0.5, 0.4, 1.6] {
        let r = rl_apply(&|t: f64| f.eval(t), FracOrder::new(lam)?, 2.0, kp, &qcfg)?;
        println!("lambda={lam:>4}: {:.10} ({})", r.value, r.status);
    }
    Ok(())
}
