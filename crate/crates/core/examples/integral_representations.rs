//! Four independent routes to the same value: the series and three integrals.
use pqml::mlcore::{ml_extended_pq, ml_integral_halfline, ml_integral_trig, ml_integral_unit};
use pqml::{MLParams, QuadConfig, SeriesConfig};

fn main() -> pqml::Result<()> {
    let (cfg, qcfg) = (SeriesConfig::default(), QuadConfig::default());
    let params = MLParams::new(0.8, 1.3, 1.2, 2.5, 0.25, 1.0)?;
    for z in [-2.0, 0.5, 2.0] {
        let series = ml_extended_pq(&params, z, &cfg, &qcfg)?.value;
        let unit = ml_integral_unit(&params, z, &qcfg)?.value;
        let half = ml_integral_halfline(&params, z, &qcfg)?.value;
        let trig = ml_integral_trig(&params, z, &qcfg)?.value;
        println!("z = {z}");
        println!("  series     {series:.15}");
        println!("  [0,1]      {unit:.15}");
        println!("  [0,inf)    {half:.15}");
        println!("  [0,pi/2]   {trig:.15}");
    }
    Ok(())
}
