//! Mellin transform of the extended function in (p, q): closed form against quadrature.
use pqml::transforms::{mellin_brute_force, mellin_diag_numeric, mellin_numeric, MellinPoint};
use pqml::wright::{mellin_closed_form, mellin_closed_form_variant, MellinVariant};
use pqml::{MLParams, QuadConfig, SeriesConfig};

fn main() -> pqml::Result<()> {
    let (cfg, qcfg) = (SeriesConfig::default(), QuadConfig::default());
    let params = MLParams::new(1.0, 1.0, 1.2, 2.5, 0.0, 0.0)?;
    let (s, r, z) = (1.5, 2.0, 0.5);
    let pt = MellinPoint::new(s, r)?;

    let closed = mellin_closed_form(&params, s, r, z, &cfg)?.value;
    let reduced = mellin_numeric(&params, pt, z, &qcfg)?.value;
    println!("closed form      {closed:.15}");
    println!("reduced quad     {reduced:.15}");

    // three nested integrals; slow, so a looser tolerance
    let brute = mellin_brute_force(&params, pt, z, &qcfg.with_rel_tol(1e-7))?.value;
    println!("nested quad      {brute:.15}");

    // lower pair (β, γ) in place of (β, α): wrong unless z = 0 or α = γ
    let printed = mellin_closed_form_variant(&params, s, r, z, MellinVariant::AsPrinted, &cfg)?.value;
    println!("(beta, gamma)    {printed:.15}  rel gap {:.2e}", (printed - closed).abs() / closed);

    // integrating E(z; p, p) over p alone gives the s = r = 1 value
    let diag = mellin_diag_numeric(&params, z, &qcfg)?.value;
    let unit = mellin_closed_form(&params, 1.0, 1.0, z, &cfg)?.value;
    println!("diagonal {diag:.12} vs s=r=1 {unit:.12}");
    Ok(())
}
