//! Prabhakar and Shukla-Prajapati functions, and a reusable coefficient table.
use pqml::mlcore::{ml_prabhakar, ml_shukla, PrabhakarSeries};
use pqml::SeriesConfig;

fn main() -> pqml::Result<()> {
    let cfg = SeriesConfig::default();
    // E^1_{1,1}(z) = e^z
    let r = ml_prabhakar(1.0, 1.0, 1.0, 1.0, &cfg)?;
    println!("E^1_(1,1)(1) = {:.15}  (e = {:.15})", r.value, std::f64::consts::E);

    let r = ml_prabhakar(0.5, 1.5, 2.0, 0.8, &cfg)?;
    println!("E^2_(0.5,1.5)(0.8) = {:.15} ({} terms)", r.value, r.effort);

    // one table, many arguments
    let table = PrabhakarSeries::new(0.8, 1.2, 1.5, 3.0, &cfg)?;
    for z in [-3.0, -1.0, 0.0, 1.0, 3.0] {
        println!("  z={z:>4}: {:.12}", table.value(z));
    }

    // k = rho + 1 gives a finite radius rho^rho / k^k = 1/4 here
    let r = ml_shukla(1.0, 1.0, 0.5, 2, 0.2, &cfg)?;
    println!("Shukla(z=0.2) = {:.15} ({})", r.value, r.status);
    let r = ml_shukla(1.0, 1.0, 0.5, 2, 0.3, &cfg)?;
    println!("Shukla(z=0.3) status: {}", r.status);
    Ok(())
}
