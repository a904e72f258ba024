//! The extended (p,q)-Mittag-Leffler function and how it reduces to its special cases.
use pqml::mlcore::{ml_extended_p, ml_extended_pq, ml_prabhakar, ExtendedMl};
use pqml::{MLParams, QuadConfig, SeriesConfig};

fn main() -> pqml::Result<()> {
    let (cfg, qcfg) = (SeriesConfig::default(), QuadConfig::default());
    let params = MLParams::new(1.0, 1.0, 1.2, 2.5, 0.3, 0.8)?;
    let r = ml_extended_pq(&params, 0.9, &cfg, &qcfg)?;
    println!("E(0.9; 0.3, 0.8) = {:.15} ± {:.1e} ({} terms)", r.value, r.abs_err_est, r.effort);

    // p = q collapses the kernel onto the one-parameter form
    let diag = params.with_pq(0.5, 0.5);
    let a = ml_extended_pq(&diag, 0.9, &cfg, &qcfg)?.value;
    let b = ml_extended_p(&diag, 0.9, &cfg, &qcfg)?.value;
    println!("p = q:     {a:.15} vs {b:.15}");

    // p = q = 0 gives the Prabhakar function
    let zero = params.with_pq(0.0, 0.0);
    let a = ml_extended_pq(&zero, 0.9, &cfg, &qcfg)?.value;
    let b = ml_prabhakar(1.0, 1.0, 1.2, 0.9, &cfg)?.value;
    println!("p = q = 0: {a:.15} vs {b:.15}");

    // a table built once serves a whole range of arguments
    let table = ExtendedMl::pq(&params, 4.0, 0, &cfg, &qcfg)?;
    println!("{} coefficients", table.len());
    for z in [-4.0, -2.0, 0.0, 2.0, 4.0] {
        println!("  z={z:>4}: {:.12}", table.eval(z).value);
    }
    Ok(())
}
