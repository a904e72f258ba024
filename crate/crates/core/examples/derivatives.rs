//! Termwise derivatives, the index-shift formulas and the beta recurrence.
use pqml::mlcore::{ml_extended_pq, ExtendedMl};
use pqml::numcore::pochhammer;
use pqml::{MLParams, QuadConfig, SeriesConfig};

fn main() -> pqml::Result<()> {
    let (cfg, qcfg) = (SeriesConfig::default(), QuadConfig::default());
    let params = MLParams::new(0.8, 1.3, 1.2, 2.5, 0.3, 0.6)?;
    let z = 0.6;
    let table = ExtendedMl::pq(&params, z, 3, &cfg, &qcfg)?;

    // d^n/dz^n E = (γ)_n E^{γ+n, c+n}_{α, β+nα}
    for n in 1..=3u32 {
        let direct = table.derivative(z, n as usize).value;
        let nf = f64::from(n);
        let shifted =
            MLParams { beta: params.beta + nf * params.alpha, gamma: params.gamma + nf, c: params.c + nf, ..params };
        let shift = pochhammer(params.gamma, n) * ml_extended_pq(&shifted, z, &cfg, &qcfg)?.value;
        println!("n={n}: termwise {direct:.15}  shift formula {shift:.15}");
    }

    // d^n/dz^n [z^{β-1} E(μ z^α)] = z^{β-n-1} E_{α, β-n}(μ z^α)
    let mu = 0.7;
    let w = mu * z.powf(params.alpha);
    for n in 1..=2usize {
        let lhs = table.power_derivative(z, n, mu).value;
        let rhs = z.powf(params.beta - n as f64 - 1.0) * table.eval_with_beta(w, params.beta - n as f64).value;
        println!("power n={n}: {lhs:.15} vs {rhs:.15}");
    }

    let (res, mag) = table.recurrence_residual(z);
    println!("recurrence residual: {:.1e} relative", res.abs() / mag);
    Ok(())
}
