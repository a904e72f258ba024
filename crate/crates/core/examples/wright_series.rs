//! Wright generalized hypergeometric series.
use pqml::mlcore::ml_prabhakar;
use pqml::numcore::gamma;
use pqml::wright::{wright_psi, WrightSpec};
use pqml::SeriesConfig;

fn main() -> pqml::Result<()> {
    let cfg = SeriesConfig::default();
    // 1Ψ1[(1,1);(1,1);z] = e^z
    let exp = WrightSpec::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)])?;
    println!("1Psi1 at z=2: {:.15}  (e^2 = {:.15})", wright_psi(&exp, 2.0, &cfg)?.value, 2f64.exp());

    // 1Ψ1[(γ,1);(β,α);z] = Γ(γ) E^γ_{α,β}(z)
    let (alpha, beta, g, z) = (0.7, 1.3, 2.0, 0.5);
    let spec = WrightSpec::new(vec![(g, 1.0)], vec![(beta, alpha)])?;
    let w = wright_psi(&spec, z, &cfg)?.value;
    let p = gamma(g)? * ml_prabhakar(alpha, beta, g, z, &cfg)?.value;
    println!("1Psi1 {w:.15} vs Gamma*Prabhakar {p:.15}");

    // 2Ψ2 with unequal weights
    let spec = WrightSpec::new(vec![(2.0, 1.0), (1.5, 1.0)], vec![(1.0, 0.8), (3.0, 1.0)])?;
    println!("Delta = {}, 2Psi2(0.4) = {:.15}", spec.delta(), wright_psi(&spec, 0.4, &cfg)?.value);

    // Δ = 0: finite radius of convergence (here 1; the series is 1/(1-z))
    let gauss = WrightSpec::new(vec![(1.0, 1.0), (1.0, 1.0)], vec![(1.0, 1.0)])?;
    println!("radius {}, value at 0.5: {:.15}", gauss.radius(), wright_psi(&gauss, 0.5, &cfg)?.value);
    Ok(())
}
